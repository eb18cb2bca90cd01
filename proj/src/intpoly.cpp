#include "fh/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fh {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coefficients) : coeffs_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt{0}; }

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

PolyDivision divide_monic(const IntPoly& f, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("divide_monic: zero divisor");
  if (!d.is_monic()) throw std::invalid_argument("divide_monic: divisor " + d.to_string() + " is not monic");
  const auto& dc = d.coefficients();
  const std::size_t dn = dc.size() - 1;
  std::vector<BigInt> r = f.coefficients();
  if (r.size() <= dn) return {IntPoly{}, f};

  std::vector<BigInt> q(r.size() - dn);
  for (std::size_t k = r.size(); k-- > dn;) {
    const BigInt lead = r[k];
    if (lead == 0) continue;
    const std::size_t shift = k - dn;
    q[shift] = lead;
    for (std::size_t i = 0; i < dn; ++i)
      if (dc[i] != 0) r[shift + i] -= lead * dc[i];
    r[k] = 0;
  }
  r.resize(dn);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool poly_divides(const IntPoly& d, const IntPoly& f) { return divide_monic(f, d).remainder.is_zero(); }

}  // namespace fh
