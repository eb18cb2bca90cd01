// Elementary number theory on machine integers: gcd, factorization,
// divisors, p-adic orders and the value of a cyclotomic polynomial at 1.
//
// Cyclotomic polynomials themselves live in cyclotomic.hpp since they
// need exact polynomial arithmetic.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fh {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by prime. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// gcd(0, 0) == 0; signs are ignored.
std::uint64_t gcd(std::int64_t a, std::int64_t b);

bool is_prime(std::uint64_t n);

/// Trial division. Throws std::invalid_argument for m == 0.
Factorization factorize(std::uint64_t m);

/// All positive divisors of m in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// If m == 2^q returns q, otherwise -1.
int log2_exact(std::uint64_t m);

/// Largest v with p^v | n. Throws std::invalid_argument for n == 0 or
/// non-prime p.
unsigned p_adic_order(std::uint64_t p, std::int64_t n);

struct NuExtremes {
  unsigned min;
  unsigned max;

  friend bool operator==(const NuExtremes&, const NuExtremes&) = default;
};

/// Minimum and maximum p-adic order over a nonempty set of nonzero
/// integers. The caller strips 0 (or 1, for primitive sets) beforehand;
/// an empty span or a zero element throws std::invalid_argument.
NuExtremes nu_extremes(std::uint64_t p, std::span<const std::int64_t> xs);
NuExtremes nu_extremes(std::uint64_t p, std::span<const std::uint64_t> xs);

/// Phi_s(1): 0 for s == 1, p for s == p^a, 1 otherwise. Computed from the
/// factorization of s.
std::uint64_t cyclotomic_at_one(std::uint64_t s);

std::uint64_t euler_totient(std::uint64_t n);

}  // namespace fh
