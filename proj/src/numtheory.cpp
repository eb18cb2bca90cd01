#include "fh/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace fh {

namespace {

std::uint64_t magnitude(std::int64_t x) {
  // Well defined for INT64_MIN as well.
  return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

template <typename Int>
NuExtremes extremes_impl(std::uint64_t p, std::span<const Int> xs) {
  if (xs.empty()) throw std::invalid_argument("nu_extremes: empty set");
  NuExtremes out{~0u, 0};
  for (Int x : xs) {
    if (x == 0) throw std::invalid_argument("nu_extremes: set contains 0");
    unsigned v = 0;
    std::uint64_t a;
    if constexpr (std::is_signed_v<Int>)
      a = magnitude(x);
    else
      a = x;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    out.min = std::min(out.min, v);
    out.max = std::max(out.max, v);
  }
  return out;
}

}  // namespace

std::uint64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(magnitude(a), magnitude(b)); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factorize: m must be positive");
  Factorization out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(m)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int log2_exact(std::uint64_t m) {
  if (m == 0 || (m & (m - 1)) != 0) return -1;
  return std::countr_zero(m);
}

unsigned p_adic_order(std::uint64_t p, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("p_adic_order: undefined for 0");
  if (!is_prime(p)) throw std::invalid_argument("p_adic_order: " + std::to_string(p) + " is not prime");
  unsigned v = 0;
  std::uint64_t a = magnitude(n);
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

NuExtremes nu_extremes(std::uint64_t p, std::span<const std::int64_t> xs) {
  if (!is_prime(p)) throw std::invalid_argument("nu_extremes: " + std::to_string(p) + " is not prime");
  return extremes_impl(p, xs);
}

NuExtremes nu_extremes(std::uint64_t p, std::span<const std::uint64_t> xs) {
  if (!is_prime(p)) throw std::invalid_argument("nu_extremes: " + std::to_string(p) + " is not prime");
  return extremes_impl(p, xs);
}

std::uint64_t cyclotomic_at_one(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("cyclotomic_at_one: s must be positive");
  if (s == 1) return 0;
  const auto f = factorize(s);
  return f.size() == 1 ? f.front().prime : 1;
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

}  // namespace fh
