#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/homology.hpp"

using namespace lefschetz;

namespace {

IntMatrix scalar(long v) {
  IntMatrix m(1, 1);
  m << v;
  return m;
}

std::vector<ManifoldSpec> catalog(int max_n) {
  std::vector<ManifoldSpec> out;
  for (int n = 1; n <= max_n; ++n)
    for (int d : {1, -1}) {
      out.push_back(Sphere{n, d});
      out.push_back(ComplexProjective{n, d});
      out.push_back(QuaternionProjective{n, d});
      for (int m = 1; m <= max_n; ++m)
        if (m != n) out.push_back(ProductOfSpheres{m, n, d, 1});
      for (int m = 1; m <= max_n; ++m)
        if (m != n) out.push_back(ProductOfSpheres{m, n, d, -1});
    }
  return out;
}

}  // namespace

TEST_CASE("sphere models") {
  const HomologyModel s2 = sphere_model(2, 1);
  CHECK(s2.dim == 2);
  CHECK(s2.betti == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(s2.maps.at(0) == scalar(1));
  CHECK(s2.maps.at(2) == scalar(1));
  CHECK(sphere_model(3, -1).maps.at(3) == scalar(-1));
  CHECK_THROWS_AS(sphere_model(5, 2), InvalidDegree);
  CHECK_THROWS_AS(sphere_model(5, 0), InvalidDegree);
}

TEST_CASE("product models") {
  const HomologyModel p = product_model(2, 3, 1, -1);
  CHECK(p.maps.at(0) == scalar(1));
  CHECK(p.maps.at(2) == scalar(1));
  CHECK(p.maps.at(3) == scalar(-1));
  CHECK(p.maps.at(5) == scalar(-1));
  CHECK(product_model(1, 2, -1, -1).maps.at(3) == scalar(1));
  CHECK_THROWS_AS(product_model(2, 2, 1, 1), EqualDimensions);
  CHECK_THROWS_AS(product_model(2, 3, 2, 1), InvalidDegree);
  CHECK_THROWS_AS(product_model(2, 3, 1, -3), InvalidDegree);
}

TEST_CASE("product models always carry d = ab") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      if (m == n) continue;
      for (int a : {1, -1})
        for (int b : {1, -1}) CHECK(product_model(m, n, a, b).maps.at(m + n) == scalar(a * b));
    }
}

TEST_CASE("projective models") {
  const HomologyModel cp2 = projective_model(ProjectiveKind::Complex, 2, -1);
  CHECK(cp2.dim == 4);
  CHECK(cp2.maps.at(0) == scalar(1));
  CHECK(cp2.maps.at(2) == scalar(-1));
  CHECK(cp2.maps.at(4) == scalar(1));
  const HomologyModel hp1 = projective_model(ProjectiveKind::Quaternion, 1, 1);
  CHECK(hp1.betti == std::map<int, int>{{0, 1}, {4, 1}});
  CHECK(hp1.maps.at(4) == scalar(1));
  const HomologyModel cp3 = projective_model(ProjectiveKind::Complex, 3, -1);
  CHECK(cp3.maps.at(2) == scalar(-1));
  CHECK(cp3.maps.at(4) == scalar(1));
  CHECK(cp3.maps.at(6) == scalar(-1));
  const HomologyModel hp3 = projective_model(ProjectiveKind::Quaternion, 3, -1);
  CHECK(hp3.maps.at(4) == scalar(-1));
  CHECK(hp3.maps.at(8) == scalar(1));
  CHECK(hp3.maps.at(12) == scalar(-1));
  CHECK_THROWS_AS(projective_model(ProjectiveKind::Complex, 2, 3), InvalidDegree);
}

TEST_CASE("Betti profiles of the catalog") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(sphere_model(n, 1).betti.size() == 2);
    CHECK(projective_model(ProjectiveKind::Complex, n, 1).betti.size() == static_cast<std::size_t>(n + 1));
    CHECK(projective_model(ProjectiveKind::Quaternion, n, 1).betti.size() == static_cast<std::size_t>(n + 1));
    for (int m = 1; m <= 8; ++m)
      if (m != n) CHECK(product_model(m, n, 1, 1).betti.size() == 4);
  }
}

TEST_CASE("every catalog model validates") {
  for (const auto& spec : catalog(8)) CHECK_NOTHROW(validate_model(build_model(spec)));
}

TEST_CASE("validate_model") {
  const ValidatedModel v = validate_model(sphere_model(2, 1));
  CHECK(v.characteristic.at(2) == CycloVector{{1, 1}});

  HomologyModel bad;
  bad.dim = 1;
  bad.betti = {{0, 1}, {1, 1}};
  bad.maps = {{0, scalar(1)}, {1, scalar(3)}};
  try {
    validate_model(bad);
    FAIL("expected NotQuasiUnipotent");
  } catch (const NotQuasiUnipotent& e) {
    CHECK(e.degree() == 1);
  }

  // char poly t^2 + t + 1: eigenvalues are primitive cube roots of unity
  HomologyModel cube;
  cube.dim = 2;
  cube.betti = {{0, 1}, {1, 2}, {2, 1}};
  IntMatrix r(2, 2);
  r << 0, -1, 1, -1;
  cube.maps = {{0, scalar(1)}, {1, r}, {2, scalar(1)}};
  const ValidatedModel vc = validate_model(cube);
  CHECK(vc.characteristic.at(1) == CycloVector{{3, 1}});
  CHECK(characteristic_factor(r) == IntPoly({1, 1, 1}));

  // singular: det(I - tA) has degree below the Betti number
  HomologyModel nil = cube;
  IntMatrix z(2, 2);
  z << 0, 1, 0, 0;
  nil.maps[1] = z;
  CHECK_THROWS_AS(validate_model(nil), NotQuasiUnipotent);
}

TEST_CASE("structural validation") {
  HomologyModel m = sphere_model(2, 1);
  m.maps.erase(2);
  CHECK_THROWS_AS(validate_model(m), MalformedModel);
  m = sphere_model(2, 1);
  m.maps[2] = IntMatrix::Identity(2, 2);
  CHECK_THROWS_AS(validate_model(m), MalformedModel);
  m = sphere_model(2, 1);
  m.maps[1] = scalar(1);
  CHECK_THROWS_AS(validate_model(m), MalformedModel);
  m = sphere_model(2, 1);
  m.betti[5] = 1;
  m.maps[5] = scalar(1);
  CHECK_THROWS_AS(validate_model(m), MalformedModel);
}

TEST_CASE("JSON models") {
  const auto j = nlohmann::json::parse(R"({"dim": 2, "groups": {"0": 1, "1": 2, "2": 1},
      "maps": {"0": [[1]], "1": [[0, -1], [1, -1]], "2": [[1]]}})");
  const HomologyModel m = model_from_json(j);
  CHECK(m.dim == 2);
  CHECK(m.betti.at(1) == 2);
  CHECK(m.maps.at(1)(1, 1) == -1);
  CHECK(model_from_json(model_to_json(m)).maps == m.maps);
  for (const auto& spec : catalog(4)) {
    const HomologyModel built = build_model(spec);
    const HomologyModel back = model_from_json(model_to_json(built));
    CHECK(back.dim == built.dim);
    CHECK(back.betti == built.betti);
    CHECK(back.maps == built.maps);
  }
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"groups": {}})")), MalformedModel);
  CHECK_THROWS_AS(
      validate_model(model_from_json(nlohmann::json::parse(R"({"dim": 1, "groups": {"0": 1}, "maps": {"0": [[1, 2]]}})"))),
      MalformedModel);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"dim": 1, "groups": {"0": 2}, "maps": {"0": [[1, 2], [3]]}})")),
                  MalformedModel);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"dim": 1, "groups": {"0": 1}, "maps": {"0": [["x"]]}})")),
                  MalformedModel);
  const auto big = model_from_json(nlohmann::json::parse(
      R"({"dim": 1, "groups": {"0": 1}, "maps": {"0": [["123456789012345678901234567890"]]}})"));
  CHECK(big.maps.at(0)(0, 0) == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"dim": 1, "groups": {"x": 1}, "maps": {}})")),
                  MalformedModel);
}

TEST_CASE("describe") {
  CHECK(describe(Sphere{4, -1}) == "S^4 (d=-1)");
  CHECK(describe(ComplexProjective{3, -1}) == "CP^3 (d=-1)");
}
