#pragma once

#include "lefschetz/cyclo.hpp"
#include "lefschetz/integer.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <variant>

namespace lefschetz {

/// Rational homology of a compact manifold together with the induced maps
/// of one self-map: degree k -> Betti number n_k and degree k -> the
/// n_k x n_k integer matrix f_{*k}. Degrees with n_k = 0 carry no matrix.
struct HomologyModel {
  int dim = 0;
  std::map<int, int> betti;
  std::map<int, IntMatrix> maps;
};

/// A structurally sound, quasi-unipotent model together with the cyclotomic
/// factorization of det(I - t f_{*k}) for each degree.
struct ValidatedModel {
  HomologyModel model;
  std::map<int, CycloVector> characteristic;
};

struct Sphere {
  int n = 1;
  int degree = 1;
};

struct ProductOfSpheres {
  int m = 1;
  int n = 2;
  int a = 1;
  int b = 1;
  int degree() const { return a * b; }
};

struct ComplexProjective {
  int n = 1;
  int degree = 1;
};

struct QuaternionProjective {
  int n = 1;
  int degree = 1;
};

using ManifoldSpec = std::variant<Sphere, ProductOfSpheres, ComplexProjective, QuaternionProjective>;

enum class ProjectiveKind { Complex, Quaternion };

HomologyModel sphere_model(int n, int d);
HomologyModel product_model(int m, int n, int a, int b);
HomologyModel projective_model(ProjectiveKind kind, int n, int d);
HomologyModel build_model(const ManifoldSpec& spec);

/// Short label such as "S^4 (d=-1)" or "S^2 x S^3 (a=1, b=-1, d=-1)".
std::string describe(const ManifoldSpec& spec);

/// Throws MalformedModel for structural problems and NotQuasiUnipotent
/// (carrying the degree) when some det(I - t f_{*k}) is not cyclotomic.
ValidatedModel validate_model(const HomologyModel& model);

/// det(I - t A) for a square integer matrix.
IntPoly characteristic_factor(const IntMatrix& a);

/// Reads {"dim": n, "groups": {"k": betti}, "maps": {"k": [[...], ...]}}.
HomologyModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const HomologyModel& model);

}  // namespace lefschetz
