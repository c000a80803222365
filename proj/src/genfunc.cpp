#include "tieknot/genfunc.hpp"

#include <algorithm>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tieknot/error.hpp"

namespace tieknot {

using Rational = boost::multiprecision::cpp_rational;

// --- Series -----------------------------------------------------------------

Series::Series(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients) coeffs_.emplace_back(c);
}

BigInt Series::sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Series Series::truncated(std::size_t order) const {
  std::vector<BigInt> c(coeffs_.begin(),
                        coeffs_.begin() + static_cast<long>(std::min(order, coeffs_.size())));
  return Series(std::move(c));
}

std::string Series::to_list() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  return os.str();
}

namespace {

void append_term(std::ostringstream& os, const BigInt& c, std::size_t degree,
                 bool first) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mag != 1 || degree == 0) os << mag;
  if (degree >= 1) os << 'z';
  if (degree >= 2) os << '^' << degree;
}

}  // namespace

std::string Series::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(os, coeffs_[i], i, first);
    first = false;
  }
  if (first) os << '0';
  os << " + O(z^" << coeffs_.size() << ')';
  return os.str();
}

Series operator+(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[i] += a.coeffs_[j] * b.coeffs_[i - j];
  }
  return Series(std::move(c));
}

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long long> coefficients) {
  for (auto c : coefficients) c_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::coefficient(std::size_t i) const {
  return i < c_.size() ? c_[i] : BigInt(0);
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    append_term(os, c_[i], i, first);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  auto c = a.c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

std::string RationalGF::to_string() const {
  const auto num = numerator.to_string();
  if (denominator == Polynomial{1}) return num;
  auto wrap = [](const Polynomial& p, const std::string& s) {
    return p.coefficients().size() > 1 &&
                   std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                 [](const BigInt& c) { return c != 0; }) > 1
               ? "(" + s + ")"
               : s;
  };
  return wrap(numerator, num) + "/" + wrap(denominator, denominator.to_string());
}

// --- expansion and comparison -----------------------------------------------

Series expand(const RationalGF& gf, std::size_t order) {
  const BigInt d0 = gf.denominator.coefficient(0);
  if (d0 == 0) throw Error("denominator has zero constant term");
  const auto dens = gf.denominator.coefficients();
  std::vector<BigInt> a(order);
  for (std::size_t n = 0; n < order; ++n) {
    BigInt acc = gf.numerator.coefficient(n);
    for (std::size_t i = 1; i < dens.size() && i <= n; ++i) acc -= dens[i] * a[n - i];
    if (acc % d0 != 0) {
      throw Error("coefficient " + std::to_string(n) + " is not an integer");
    }
    a[n] = acc / d0;
  }
  return Series(std::move(a));
}

std::string Comparison::to_string() const {
  if (equal) return "equal";
  std::ostringstream os;
  os << "first mismatch at index " << index << ": " << a << " vs " << b;
  return os.str();
}

Comparison compare(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return {false, i, a[i], b[i]};
  }
  return {};
}

// --- recurrence fitting -----------------------------------------------------

namespace {

// Solves rows * x = rhs exactly. Free variables are set to zero. Empty when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs,
                                           std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < unknowns; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
  return x;
}

}  // namespace

std::optional<RationalGF> fit_recurrence(const Series& s, std::size_t max_order) {
  const std::size_t len = s.order();
  const auto a = [&](long i) -> BigInt { return i < 0 ? BigInt(0) : s[static_cast<std::size_t>(i)]; };

  for (std::size_t d = 0; d <= max_order; ++d) {
    for (std::size_t m = 0; m + 2 * d + 2 <= len; ++m) {
      // Equations for n = m+1 .. len-1:  sum_i c_i a_{n-i} = a_n.
      std::vector<std::vector<Rational>> rows;
      std::vector<Rational> rhs;
      for (std::size_t n = m + 1; n < len; ++n) {
        std::vector<Rational> row(d);
        for (std::size_t i = 1; i <= d; ++i) row[i - 1] = Rational(a(static_cast<long>(n - i)));
        rows.push_back(std::move(row));
        rhs.emplace_back(a(static_cast<long>(n)));
      }
      auto sol = solve(std::move(rows), std::move(rhs), d);
      if (!sol) continue;

      // D = 1 - sum c_i z^i, N = (D * S) mod z^(m+1); clear denominators.
      BigInt scale = 1;
      for (const auto& c : *sol) scale = lcm(scale, boost::multiprecision::denominator(c));
      std::vector<BigInt> den(d + 1);
      den[0] = scale;
      for (std::size_t i = 1; i <= d; ++i) {
        const Rational v = -(*sol)[i - 1] * Rational(scale);
        den[i] = boost::multiprecision::numerator(v);
      }
      std::vector<BigInt> num(m + 1);
      for (std::size_t n = 0; n <= m && n < len; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= d && i <= n; ++i) acc += den[i] * s[n - i];
        num[n] = acc;
      }
      BigInt g = 0;
      for (const auto& c : den) g = boost::multiprecision::gcd(g, c);
      for (const auto& c : num) g = boost::multiprecision::gcd(g, c);
      if (g > 1) {
        for (auto& c : den) c /= g;
        for (auto& c : num) c /= g;
      }
      return RationalGF{Polynomial(std::move(num)), Polynomial(std::move(den))};
    }
  }
  return std::nullopt;
}

}  // namespace tieknot
