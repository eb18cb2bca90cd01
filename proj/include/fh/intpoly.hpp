// Dense univariate polynomials with arbitrary-precision integer coefficients.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace fh {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficient i multiplies x^i. Trailing zeros are trimmed on construction,
/// so the zero polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  static IntPoly monomial(std::size_t degree, BigInt coefficient = 1);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human form, highest degree first, e.g. "x^4-x^3+x^2-x+1".
  std::string to_string(char var = 'x') const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Synthetic division f = d*q + r with deg r < deg d. The divisor must be
/// monic; anything else throws std::invalid_argument.
PolyDivision divide_monic(const IntPoly& f, const IntPoly& d);

/// True iff f = d*q for some integer polynomial q. d must be monic.
bool poly_divides(const IntPoly& d, const IntPoly& f);

}  // namespace fh
