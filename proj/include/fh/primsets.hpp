// Residue sets, difference sets and m-th primitive sets.
//
// For X ⊆ {0,...,m-1}:
//   D(X)   = { x1 - x2 : x1, x2 in X }
//   P_m(X) = { m / gcd(m, d) : d in D(X) }
//   C_m(X) = prod_{s in P_m(X) \ {1}} Phi_s(1)
//
// P_m(X) is the set of orders of the roots of unity e^{2 pi i d / m}; it is
// unchanged by shifting X (mod m) and by scaling both X and m.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fh {

/// Nonempty set of distinct residues in [0, m).
class ResidueSet {
 public:
  /// Sorts the elements. Throws std::invalid_argument for m == 0, an empty
  /// set, duplicates, or an element >= m.
  ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> elements);

  /// {0, 1, ..., m-1}.
  static ResidueSet full(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  std::span<const std::uint64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::uint64_t x) const;

  /// "{0,5,375}"
  std::string to_string() const;

  friend auto operator<=>(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> elements_;
};

/// Sorted set of positive integers containing 1. Does not carry a modulus:
/// primitive sets computed under different moduli compare by value.
class PrimitiveSet {
 public:
  /// Sorts and validates. Throws std::invalid_argument if 1 is missing, an
  /// element is 0, or an element repeats.
  explicit PrimitiveSet(std::vector<std::uint64_t> elements);

  std::span<const std::uint64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::uint64_t s) const;

  /// Elements other than 1, for feeding into nu_extremes.
  std::vector<std::uint64_t> without_one() const;

  /// "{1,16,600,1200}"
  std::string to_string() const;

  friend auto operator<=>(const PrimitiveSet&, const PrimitiveSet&) = default;

 private:
  std::vector<std::uint64_t> elements_;
};

/// Sorted; contains 0 and is closed under negation.
std::vector<std::int64_t> difference_set(const ResidueSet& x);

/// D(X) \ {0}. Empty for singletons.
std::vector<std::int64_t> nonzero_differences(const ResidueSet& x);

PrimitiveSet primitive_set(const ResidueSet& x);

/// C_m(X). Always positive (Phi_1 never enters the product); 1 for
/// singletons. Bounded by m.
std::uint64_t c_m(const ResidueSet& x);
std::uint64_t c_value(const PrimitiveSet& p);

/// {x + v mod m}.
ResidueSet shift(const ResidueSet& x, std::int64_t v);

/// {v x} with modulus v m. Throws std::invalid_argument for v == 0.
ResidueSet scale(const ResidueSet& x, std::uint64_t v);

/// The lexicographically least shift of x that contains 0.
ResidueSet normalize(const ResidueSet& x);

}  // namespace fh
