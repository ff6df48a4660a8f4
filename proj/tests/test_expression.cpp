#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/expression.hpp"

#include <random>

using namespace lefschetz;

namespace {

CycloVector from_map(const std::map<std::uint64_t, std::int64_t>& m) {
  CycloVector v;
  for (const auto& [d, e] : m) v.add(d, e);
  return v;
}

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_zeta_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

Representation random_representation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), p(1, 15), e(-3, 3);
  std::bernoulli_distribution plus(0.4);
  std::vector<Factor> f(static_cast<std::size_t>(len(rng)));
  for (auto& x : f) x = {plus(rng) ? Sign::Plus : Sign::Minus, static_cast<std::uint64_t>(p(rng)), e(rng)};
  return Representation(f);
}

}  // namespace

TEST_CASE("simple expressions") {
  CHECK(parse_zeta_expression("(1+t^2)") == CycloVector{{4, 1}});
  CHECK(parse_zeta_expression("1").is_one());
  CHECK(parse_zeta_expression("(1)").is_one());
  CHECK(parse_zeta_expression("1/(1-t)") == CycloVector{{1, -1}});
  CHECK(parse_zeta_expression("(1-t)^-2") == CycloVector{{1, -2}});
  CHECK(parse_zeta_expression("(1-t)^(-2)") == CycloVector{{1, -2}});
  CHECK(parse_zeta_expression(" ( 1 - t ^ 3 ) ^ 2 / ( 1 + t ) ") == CycloVector{{1, 2}, {2, -1}, {3, 2}});
  CHECK(parse_zeta_expression("((1-t)(1+t))^2") == CycloVector{{1, 2}, {2, 2}});
  CHECK(parse_zeta_expression("1/((1-t)^2*(1+t)^2)") == CycloVector{{1, -2}, {2, -2}});
}

TEST_CASE("non-representable factors") {
  for (const char* s : {"(1-2t)", "(1-2*t)", "(t-1)", "(2)", "(-1)", "(1-t^0)", "2"})
    CHECK_THROWS_AS(parse_zeta_expression(s), NotRepresentable);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_position("1-t") == 1);
  CHECK(parse_error_position("t") == 0);
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("(1-t)^") == 6);
  CHECK(parse_error_position("(1-t)/") == 6);
  CHECK(parse_error_position("(1-t)x") == 5);
  CHECK(parse_error_position("(1+t)**2") == 6);
  CHECK(parse_error_position("(1-t") != std::string_view::npos);
}

TEST_CASE("torus forms keep their factors") {
  const CycloVector torus{{1, -4}, {2, -2}, {3, 2}, {6, 1}};
  const std::vector<std::pair<const char*, PeriodSet>> forms = {
      {"(1-t^3)^2(1+t^3)/((1-t)^6(1+t)^3)", {1, 3}},
      {"(1-t^3)(1-t^6)/((1-t)^6(1+t)^3)", {1, 3, 6}},
      {"(1-t^3)(1-t^6)/((1-t)^3(1-t^2)^3)", {1, 2, 3, 6}},
      {"(1-t^3)^2(1+t^3)/((1-t)^3(1-t^2)^3)", {1, 2, 3}},
  };
  for (const auto& [text, periods] : forms) {
    CAPTURE(text);
    const Representation rep = parse_representation(text);
    CHECK(rep.zeta() == torus);
    CHECK(rep.forced_periods() == periods);
    CHECK(parse_zeta_expression(text) == torus);
  }
  const Representation explicit_product = parse_representation("(1-t^3)^2*(1+t^3)/((1-t)^6*(1+t)^3)");
  CHECK(explicit_product == parse_representation("(1-t^3)^2(1+t^3)/((1-t)^6(1+t)^3)"));
  CHECK(explicit_product.factors().size() == 4);
}

TEST_CASE("to_expression round trips through the parser") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Representation rep = random_representation(rng);
    const std::string text = to_expression(rep);
    CAPTURE(text);
    CHECK(parse_representation(text) == rep);
  }
  CHECK(to_expression(Representation{}) == "1");
}

TEST_CASE("format_zeta round trips on random vectors") {
  std::mt19937_64 rng(78);
  for (int i = 0; i < 120; ++i) {
    const auto exps = oracle::random_exponents(rng, 16, 3, 0.3);
    const CycloVector z = from_map(exps);
    const std::string text = format_zeta(z);
    CAPTURE(text);
    CHECK(parse_zeta_expression(text) == z);
  }
}

TEST_CASE("parsed representations multiply out correctly") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 100; ++i) {
    const Representation rep = random_representation(rng);
    std::vector<oracle::SignedFactor> factors;
    for (const auto& f : rep.factors()) factors.push_back({f.sign == Sign::Plus ? 1 : -1, f.period, f.exponent});
    const CycloVector z = parse_zeta_expression(to_expression(rep));
    std::map<std::uint64_t, std::int64_t> exps(z.exponents().begin(), z.exponents().end());
    CHECK(oracle::product_equals(factors, exps));
  }
}
