#pragma once

// Exact power-series arithmetic for counting sequences.
//
// A Series holds the first `order()` coefficients of a formal power series
// (everything from z^order on is unknown). Coefficients are arbitrary
// precision integers.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tieknot {

using BigInt = boost::multiprecision::cpp_int;

class Series {
 public:
  Series() = default;
  explicit Series(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {}
  Series(std::initializer_list<long long> coefficients);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

  BigInt sum() const;
  Series truncated(std::size_t order) const;

  /// "c0, c1, c2, ..."
  std::string to_list() const;
  /// "2z^2 + 4z^3 + O(z^5)"
  std::string to_text() const;

  friend bool operator==(const Series&, const Series&) = default;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);

 private:
  std::vector<BigInt> coeffs_;
};

/// Integer polynomial in z, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);
  Polynomial(std::initializer_list<long long> coefficients);
  static Polynomial monomial(BigInt c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigInt coefficient(std::size_t i) const;
  std::span<const BigInt> coefficients() const noexcept { return c_; }
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct RationalGF {
  Polynomial numerator;
  Polynomial denominator{1};

  std::string to_string() const;
  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Parses an integer-coefficient rational expression in z using
/// `+ - * / ( ) ^`; juxtaposition multiplies, so "2z^3(2z+1)/(1-6z^2)" works.
RationalGF parse_rational(std::string_view text);

/// First `order` coefficients of N(z)/D(z), by the recurrence
/// D0 a_n = N_n - sum_{i>=1} D_i a_{n-i}. Throws Error if D(0) = 0 or a
/// coefficient is not an integer.
Series expand(const RationalGF& gf, std::size_t order);

struct Comparison {
  bool equal = true;
  std::size_t index = 0;  // first mismatch, when !equal
  BigInt a;
  BigInt b;

  std::string to_string() const;
};

/// Compares up to the shorter truncation.
Comparison compare(const Series& a, const Series& b);

/// Smallest constant-coefficient linear recurrence (order <= max_order,
/// then smallest numerator degree) that reproduces every known coefficient,
/// as a rational generating function with D(0) > 0 and coprime integer
/// content. Each candidate must be confirmed by at least 2*order + 1
/// coefficients beyond the numerator. Empty if nothing fits.
std::optional<RationalGF> fit_recurrence(const Series& s, std::size_t max_order);

}  // namespace tieknot
