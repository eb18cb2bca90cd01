// Deciding whether the submatrix H_{J,K} = (e^{2 pi i j k / m})_{j in J, k in K}
// of the m x m Fourier matrix is a complex Hadamard matrix.
//
// Distinct rows j1, j2 are orthogonal iff K(e^{2 pi i (j1-j2)/m}) = 0, where
// K(z) = sum_{k in K} z^k. Since e^{2 pi i d/m} is a primitive s-th root of
// unity for s = m / gcd(m, d), that happens iff Phi_s divides K(z). The exact
// oracle therefore reduces to integer polynomial divisibility over
// s in P_m(J) \ {1}.

#pragma once

#include "fh/intpoly.hpp"
#include "fh/primsets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fh {

enum class Decision { Hadamard, NotHadamard, Inconclusive };
enum class Screening { RuledOut, Inconclusive };

/// Registry of the tests that can decide a verdict.
enum class Rule {
  Exact,          // cyclotomic divisibility
  Numeric,        // floating point H*H = nI
  Complement,     // complement-set sufficient condition
  PowerOfTwo2x2,  // m = 2^q, n = 2
  TwicePrime2x2,  // m = 2p, n = 2
  General2x2,     // 2-adic balance, any m
  General3x3,     // 3-adic balance, any m
};

std::string_view to_string(Decision d);
std::string_view to_string(Screening s);
std::string_view rule_name(Rule r);

/// One failed clause of a p-adic balance condition.
struct PadicViolation {
  enum class Kind {
    MinSum,    // nu_p^min sum differs from nu_p(m) + 1
    MaxSum,    // nu_p^max sum differs from nu_p(m) + 1
    MaxBound,  // nu_p^max sum exceeds nu_p(m)
  };
  std::uint64_t prime;
  Kind kind;
  unsigned sum;
  unsigned bound;

  /// "nu_3 max sum 3 > 2", "nu_2 min sum 2 != 3"
  std::string describe() const;
  friend bool operator==(const PadicViolation&, const PadicViolation&) = default;
};

struct Witness {
  /// s in P_m(J) \ {1} with Phi_s not dividing K(z).
  std::optional<std::uint64_t> failing_order;
  std::vector<PadicViolation> padic;
  /// Max-norm deviation of H*H from nI (numeric oracle only).
  std::optional<double> deviation;
  std::optional<std::string> note;

  bool empty() const { return !failing_order && padic.empty() && !deviation && !note; }
  std::string describe() const;
};

struct SubmatrixVerdict {
  Decision decision;
  Rule rule;
  Witness witness;

  bool hadamard() const { return decision == Decision::Hadamard; }
};

/// Row selection J and column selection K of F_m.
class SubmatrixSpec {
 public:
  /// Throws std::invalid_argument if the moduli differ.
  SubmatrixSpec(ResidueSet rows, ResidueSet cols);

  std::uint64_t m() const { return rows_.modulus(); }
  const ResidueSet& rows() const { return rows_; }
  const ResidueSet& cols() const { return cols_; }
  bool square() const { return rows_.size() == cols_.size(); }

 private:
  ResidueSet rows_;
  ResidueSet cols_;
};

/// sum_{x in X} z^x.
IntPoly set_polynomial(const ResidueSet& x);

/// True iff Phi_s divides X(z). s must divide the modulus of X.
bool cyclotomic_divides_set(std::uint64_t s, const ResidueSet& x);

/// Rows of H_{L,K} pairwise orthogonal; any shape.
bool rows_orthogonal(const ResidueSet& rows, const ResidueSet& cols);

/// Never Inconclusive. Throws std::invalid_argument for a non-square spec.
SubmatrixVerdict is_hadamard_exact(const SubmatrixSpec& spec);

/// Float cross-check. Throws std::invalid_argument for tol <= 0 or a
/// non-square spec.
SubmatrixVerdict is_hadamard_numeric(const SubmatrixSpec& spec, double tol = 1e-9);

struct ScreeningResult {
  Screening outcome;
  std::string reason;
};

/// Ruled out when C_m(J) does not divide n: no K completes J.
/// Throws std::invalid_argument if |J| != n.
ScreeningResult necessary_c_divides(const ResidueSet& rows, std::size_t n);

/// Ruled out when P_m(J) holds every prime-power divisor of m but misses
/// some other divisor.
ScreeningResult necessary_prime_powers(const ResidueSet& rows);

/// Hadamard when K ⊕ A is a complete residue system mod m and no
/// Phi_s, s in P_m(J) \ {1}, divides A(z); Inconclusive otherwise.
/// Throws std::invalid_argument if K ⊕ A is not a complete residue system
/// or the selection is not square.
SubmatrixVerdict sufficient_complement(const ResidueSet& rows, const ResidueSet& cols,
                                       const std::vector<std::uint64_t>& complement);

/// Some A with K ⊕ A a complete residue system, by backtracking that
/// covers the smallest uncovered residue first with the smallest shift.
/// nullopt if |K| does not divide m or no such A exists.
std::optional<std::vector<std::uint64_t>> find_complement(const ResidueSet& cols);

/// m = 2^q: Hadamard iff P(J) = {1, 2^(q-a)}, P(K) = {1, 2^(q-b)} with
/// a + b = q - 1.
SubmatrixVerdict test_2x2_power_of_two(unsigned q, const ResidueSet& rows, const ResidueSet& cols);

/// m = 2p, p an odd prime: Hadamard iff the primitive sets are
/// ({1,2},{1,2}), ({1,2},{1,2p}) or ({1,2p},{1,2}).
SubmatrixVerdict test_2x2_twice_prime(std::uint64_t p, const ResidueSet& rows, const ResidueSet& cols);

/// Any m, n = 2: 2-adic min and max sums both equal nu_2(m)+1, and for
/// odd p | m the nu_p max sum is at most nu_p(m).
SubmatrixVerdict test_2x2_general(const ResidueSet& rows, const ResidueSet& cols);

/// Any m, n = 3: as test_2x2_general with 3 in place of 2.
SubmatrixVerdict test_3x3(const ResidueSet& rows, const ResidueSet& cols);

/// n = 2 -> test_2x2_general, n = 3 -> test_3x3, otherwise the exact oracle.
SubmatrixVerdict is_hadamard(const SubmatrixSpec& spec);

}  // namespace fh
