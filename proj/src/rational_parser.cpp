#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

#include "tieknot/error.hpp"
#include "tieknot/genfunc.hpp"

namespace tieknot {

namespace {

RationalGF add(const RationalGF& a, const RationalGF& b) {
  if (a.denominator == b.denominator) return {a.numerator + b.numerator, a.denominator};
  return {a.numerator * b.denominator + b.numerator * a.denominator,
          a.denominator * b.denominator};
}

RationalGF negate(const RationalGF& a) { return {-a.numerator, a.denominator}; }

RationalGF multiply(const RationalGF& a, const RationalGF& b) {
  return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalGF divide(const RationalGF& a, const RationalGF& b, std::size_t at) {
  if (b.numerator.is_zero()) throw ParseError("division by zero", at);
  return {a.numerator * b.denominator, a.denominator * b.numerator};
}

// Cancels common powers of z and common integer content; makes the
// lowest denominator coefficient positive.
RationalGF normalize(RationalGF f) {
  if (f.numerator.is_zero()) return {Polynomial{}, Polynomial{1}};
  auto low = [](const Polynomial& p) {
    std::size_t i = 0;
    while (p.coefficient(i) == 0) ++i;
    return i;
  };
  const std::size_t shift = std::min(low(f.numerator), low(f.denominator));
  auto shifted = [&](const Polynomial& p) {
    const auto c = p.coefficients();
    return Polynomial(std::vector<BigInt>(c.begin() + static_cast<long>(shift), c.end()));
  };
  auto num = shifted(f.numerator);
  auto den = shifted(f.denominator);
  BigInt g = 0;
  for (const auto& c : num.coefficients()) g = boost::multiprecision::gcd(g, c);
  for (const auto& c : den.coefficients()) g = boost::multiprecision::gcd(g, c);
  if (den.coefficient(low(den)) < 0) g = -g;
  if (g != 1) {
    auto scaled = [&](const Polynomial& p) {
      std::vector<BigInt> c(p.coefficients().begin(), p.coefficients().end());
      for (auto& x : c) x /= g;
      return Polynomial(std::move(c));
    };
    num = scaled(num);
    den = scaled(den);
  }
  return {std::move(num), std::move(den)};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RationalGF parse() {
    auto v = expr();
    skip_ws();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return normalize(std::move(v));
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool starts_factor() {
    skip_ws();
    return i_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == 'z' || s_[i_] == '(');
  }

  RationalGF expr() {
    auto v = term();
    for (;;) {
      if (peek('+')) {
        ++i_;
        v = add(v, term());
      } else if (peek('-')) {
        ++i_;
        v = add(v, negate(term()));
      } else {
        return v;
      }
    }
  }

  RationalGF term() {
    auto v = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        v = multiply(v, unary());
      } else if (peek('/')) {
        const auto at = i_++;
        v = divide(v, unary(), at);
      } else if (starts_factor()) {
        v = multiply(v, power());
      } else {
        return v;
      }
    }
  }

  RationalGF unary() {
    if (peek('-')) {
      ++i_;
      return negate(unary());
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  RationalGF power() {
    auto base = primary();
    if (!peek('^')) return base;
    ++i_;
    skip_ws();
    const auto at = i_;
    bool negative = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      negative = true;
      ++i_;
    }
    const auto e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    RationalGF result{Polynomial{1}, Polynomial{1}};
    for (unsigned long k = 0; k < e; ++k) result = multiply(result, base);
    return negative ? divide({Polynomial{1}, Polynomial{1}}, result, at) : result;
  }

  unsigned long integer() {
    skip_ws();
    const auto start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected an integer", start);
    if (i_ - start > 6) throw ParseError("number too long", start);
    return std::stoul(std::string(s_.substr(start, i_ - start)));
  }

  RationalGF primary() {
    skip_ws();
    if (i_ == s_.size()) throw ParseError("unexpected end of expression", i_);
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      auto v = expr();
      if (!peek(')')) throw ParseError("expected ')'", i_);
      ++i_;
      return v;
    }
    if (c == 'z') {
      ++i_;
      return {Polynomial::monomial(1, 1), Polynomial{1}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return {Polynomial(std::vector<BigInt>{BigInt(std::string(s_.substr(start, i_ - start)))}),
              Polynomial{1}};
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

RationalGF parse_rational(std::string_view text) { return Parser(text).parse(); }

}  // namespace tieknot
