#include "lefschetz/expression.hpp"

#include "lefschetz/errors.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace lefschetz {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Factor> parse() {
    auto factors = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return factors;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t natural() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > 15) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t integer() {
    if (accept('(')) {
      const std::int64_t v = integer();
      expect(')');
      return v;
    }
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    const auto v = static_cast<std::int64_t>(natural());
    return negative ? -v : v;
  }

  std::vector<Factor> expr() {
    auto out = term();
    for (;;) {
      if (accept('*') || peek('(')) {  // juxtaposition multiplies
        auto rhs = term();
        out.insert(out.end(), rhs.begin(), rhs.end());
      } else if (accept('/')) {
        auto rhs = term();
        for (auto& f : rhs) f.exponent = -f.exponent;
        out.insert(out.end(), rhs.begin(), rhs.end());
      } else {
        return out;
      }
    }
  }

  std::vector<Factor> term() {
    auto base = atom();
    if (accept('^')) {
      const std::int64_t k = integer();
      for (auto& f : base) f.exponent *= k;
    }
    return base;
  }

  std::vector<Factor> atom() {
    skip();
    const std::size_t start = pos_;
    if (accept('(')) {
      if (auto poly = polynomial(); poly && accept(')')) return admit(*poly, start);
      pos_ = start + 1;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (at_digit()) {
      const auto c = natural();
      if (c != 1) throw NotRepresentable("constant " + std::to_string(c) + " at position " + std::to_string(start) +
                                         " is not a product of factors (1 +- t^p)");
      if (peek('t') || peek('+') || peek('-')) fail("factors must be written in parentheses");
      return {};
    }
    if (peek('t')) fail("factors must be written in parentheses");
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  // Sparse polynomial in t with machine-size coefficients, or nullopt if the
  // text is not a plain sum of monomials (the caller then tries expr).
  std::optional<std::map<std::uint64_t, std::int64_t>> polynomial() {
    std::map<std::uint64_t, std::int64_t> poly;
    bool first = true;
    for (;;) {
      std::int64_t sign = 1;
      if (accept('-'))
        sign = -1;
      else if (!accept('+') && !first)
        break;
      first = false;
      std::int64_t coeff = 1;
      bool have_coeff = false;
      if (at_digit()) {
        coeff = static_cast<std::int64_t>(natural());
        have_coeff = true;
        accept('*');
      }
      std::uint64_t power = 0;
      if (accept('t')) {
        power = 1;
        if (accept('^')) {
          if (!at_digit()) return std::nullopt;
          power = natural();
        }
      } else if (!have_coeff) {
        return std::nullopt;
      }
      poly[power] += sign * coeff;
      if (!peek('+') && !peek('-')) break;
    }
    if (!peek(')')) return std::nullopt;
    return poly;
  }

  std::vector<Factor> admit(const std::map<std::uint64_t, std::int64_t>& poly, std::size_t start) {
    std::map<std::uint64_t, std::int64_t> terms;
    for (const auto& [k, c] : poly)
      if (c != 0) terms.emplace(k, c);
    auto reject = [&]() -> std::vector<Factor> {
      throw NotRepresentable("factor at position " + std::to_string(start) + " (" +
                             std::string(text_.substr(start, pos_ - start)) + ") is not of the form (1 +- t^p)");
    };
    if (terms.size() == 1 && terms.begin()->first == 0 && terms.begin()->second == 1) return {};
    if (terms.size() != 2) return reject();
    auto it = terms.begin();
    if (it->first != 0 || it->second != 1) return reject();
    ++it;
    if (it->second != 1 && it->second != -1) return reject();
    return {Factor{it->second == 1 ? Sign::Plus : Sign::Minus, it->first, 1}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Representation parse_representation(std::string_view text) { return Representation(Parser(text).parse()); }

CycloVector parse_zeta_expression(std::string_view text) { return parse_representation(text).zeta(); }

std::string format_zeta(const CycloVector& zeta) { return to_expression(preferred_representation(zeta)); }

}  // namespace lefschetz
