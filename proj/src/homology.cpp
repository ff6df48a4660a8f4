#include "lefschetz/homology.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/linalg.hpp"

#include <sstream>

namespace lefschetz {

namespace {

IntMatrix scalar_map(long value) {
  IntMatrix m(1, 1);
  m(0, 0) = value;
  return m;
}

void require_unit_degree(int d, const char* name) {
  if (d != 1 && d != -1)
    throw InvalidDegree(std::string(name) + " = " + std::to_string(d) +
                        " is not a root of unity; quasi-unipotent maps need +1 or -1");
}

long sign_power(int d, int k) { return (d == -1 && k % 2 != 0) ? -1 : 1; }

}  // namespace

HomologyModel sphere_model(int n, int d) {
  if (n < 1) throw MalformedModel("sphere dimension must be at least 1");
  require_unit_degree(d, "degree");
  HomologyModel h;
  h.dim = n;
  h.betti = {{0, 1}, {n, 1}};
  h.maps.emplace(0, scalar_map(1));
  h.maps.emplace(n, scalar_map(d));
  return h;
}

HomologyModel product_model(int m, int n, int a, int b) {
  if (m < 1 || n < 1) throw MalformedModel("sphere dimensions must be at least 1");
  if (m == n) throw EqualDimensions("S^m x S^n requires m != n (got m = n = " + std::to_string(m) + ")");
  require_unit_degree(a, "a");
  require_unit_degree(b, "b");
  HomologyModel h;
  h.dim = m + n;
  h.betti = {{0, 1}, {m, 1}, {n, 1}, {m + n, 1}};
  h.maps.emplace(0, scalar_map(1));
  h.maps.emplace(m, scalar_map(a));
  h.maps.emplace(n, scalar_map(b));
  h.maps.emplace(m + n, scalar_map(a * b));
  return h;
}

HomologyModel projective_model(ProjectiveKind kind, int n, int d) {
  if (n < 1) throw MalformedModel("projective dimension must be at least 1");
  require_unit_degree(d, "degree");
  const int step = kind == ProjectiveKind::Complex ? 2 : 4;
  HomologyModel h;
  h.dim = step * n;
  for (int j = 0; j <= n; ++j) {
    // f_{*k} = d^(k/2) or d^(k/4), i.e. d^j at degree step*j
    h.betti[step * j] = 1;
    h.maps.emplace(step * j, scalar_map(sign_power(d, j)));
  }
  return h;
}

HomologyModel build_model(const ManifoldSpec& spec) {
  struct Visitor {
    HomologyModel operator()(const Sphere& s) const { return sphere_model(s.n, s.degree); }
    HomologyModel operator()(const ProductOfSpheres& p) const { return product_model(p.m, p.n, p.a, p.b); }
    HomologyModel operator()(const ComplexProjective& c) const {
      return projective_model(ProjectiveKind::Complex, c.n, c.degree);
    }
    HomologyModel operator()(const QuaternionProjective& q) const {
      return projective_model(ProjectiveKind::Quaternion, q.n, q.degree);
    }
  };
  return std::visit(Visitor{}, spec);
}

std::string describe(const ManifoldSpec& spec) {
  struct Visitor {
    std::string operator()(const Sphere& s) const {
      return "S^" + std::to_string(s.n) + " (d=" + std::to_string(s.degree) + ")";
    }
    std::string operator()(const ProductOfSpheres& p) const {
      std::ostringstream os;
      os << "S^" << p.m << " x S^" << p.n << " (a=" << p.a << ", b=" << p.b << ", d=" << p.degree() << ")";
      return os.str();
    }
    std::string operator()(const ComplexProjective& c) const {
      return "CP^" + std::to_string(c.n) + " (d=" + std::to_string(c.degree) + ")";
    }
    std::string operator()(const QuaternionProjective& q) const {
      return "HP^" + std::to_string(q.n) + " (d=" + std::to_string(q.degree) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

IntPoly characteristic_factor(const IntMatrix& a) { return IntPoly(reversed_charpoly(a)); }

ValidatedModel validate_model(const HomologyModel& model) {
  if (model.dim < 0) throw MalformedModel("dimension must be non-negative");
  for (const auto& [k, nk] : model.betti) {
    if (k < 0 || k > model.dim)
      throw MalformedModel("homology degree " + std::to_string(k) + " outside [0, " + std::to_string(model.dim) + "]");
    if (nk < 0) throw MalformedModel("negative Betti number at degree " + std::to_string(k));
    auto it = model.maps.find(k);
    if (nk == 0) {
      if (it != model.maps.end() && it->second.size() != 0)
        throw MalformedModel("degree " + std::to_string(k) + " has Betti number 0 but carries a map");
      continue;
    }
    if (it == model.maps.end()) throw MalformedModel("degree " + std::to_string(k) + " has no induced map");
    if (it->second.rows() != nk || it->second.cols() != nk)
      throw MalformedModel("induced map at degree " + std::to_string(k) + " must be " + std::to_string(nk) + "x" +
                           std::to_string(nk));
  }
  for (const auto& [k, m] : model.maps) {
    if (m.size() == 0) continue;
    auto it = model.betti.find(k);
    if (it == model.betti.end() || it->second == 0)
      throw MalformedModel("induced map at degree " + std::to_string(k) + " has no homology group");
  }

  ValidatedModel v;
  v.model = model;
  for (const auto& [k, nk] : model.betti) {
    if (nk == 0) continue;
    const IntPoly q = characteristic_factor(model.maps.at(k));
    if (q.degree() != nk)
      throw NotQuasiUnipotent("induced map at degree " + std::to_string(k) + " is singular (eigenvalue 0)", k);
    try {
      v.characteristic.emplace(k, poly_product_to_cyclovector({{q, 1}}));
    } catch (const NotQuasiUnipotent&) {
      throw NotQuasiUnipotent("induced map at degree " + std::to_string(k) + " has det(I - t f) = " + q.to_string() +
                                  ", which has an eigenvalue off the roots of unity",
                              k);
    }
  }
  return v;
}

HomologyModel model_from_json(const nlohmann::json& j) {
  try {
    HomologyModel h;
    h.dim = j.at("dim").get<int>();
    for (const auto& [key, value] : j.at("groups").items()) h.betti[std::stoi(key)] = value.get<int>();
    if (j.contains("maps")) {
      for (const auto& [key, rows] : j.at("maps").items()) {
        const int k = std::stoi(key);
        const auto nrows = static_cast<Eigen::Index>(rows.size());
        const auto ncols = nrows == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(rows.at(0).size());
        IntMatrix m(nrows, ncols);
        for (Eigen::Index r = 0; r < nrows; ++r) {
          const auto& row = rows.at(static_cast<std::size_t>(r));
          if (static_cast<Eigen::Index>(row.size()) != ncols)
            throw MalformedModel("ragged matrix at degree " + key);
          for (Eigen::Index c = 0; c < ncols; ++c) {
            const auto& entry = row.at(static_cast<std::size_t>(c));
            m(r, c) = entry.is_string() ? Integer(entry.get<std::string>()) : Integer(entry.get<long>());
          }
        }
        h.maps.emplace(k, std::move(m));
      }
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedModel(std::string("homology JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedModel(std::string("homology JSON: bad degree key or integer (") + e.what() + ")");
  }
}

nlohmann::json model_to_json(const HomologyModel& model) {
  nlohmann::json j;
  j["dim"] = model.dim;
  j["groups"] = nlohmann::json::object();
  for (const auto& [k, nk] : model.betti) j["groups"][std::to_string(k)] = nk;
  j["maps"] = nlohmann::json::object();
  for (const auto& [k, m] : model.maps) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const Integer& x = m(r, c);
        if (x.fits_slong_p())
          row.push_back(x.get_si());
        else
          row.push_back(x.get_str());
      }
      rows.push_back(std::move(row));
    }
    j["maps"][std::to_string(k)] = std::move(rows);
  }
  return j;
}

}  // namespace lefschetz
