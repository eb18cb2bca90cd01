// Verification sweeps: exhaustive and randomized property checks over
// ranges of m, run by `fh verify` and the acceptance harness.
//
// Suites:
//   compprop  p-adic inequalities between D(X) and P_m(X)
//   disjoint  V(G(m,n)) and V(G(m,n')) share no vertex
//   scaling   V(G(m,n)) inside V(G(vm,n))
//   oracle2   test_2x2_general against the exact oracle
//   oracle3   test_3x3 against the exact oracle
//   counts2q  |V(G(2^q,2))| = q and |E| = ceil(q/2)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fh {

/// Zero fields fall back to each suite's default range.
struct SweepOptions {
  std::uint64_t m_max = 0;
  /// disjoint only: restrict to this m.
  std::uint64_t m = 0;
  /// disjoint only: the n values to compare pairwise.
  std::vector<std::uint64_t> n_values;
  std::uint64_t n_max = 0;
  std::uint64_t v_max = 0;
  unsigned q_max = 0;
  /// compprop only: random cases above m_max.
  std::optional<std::size_t> random_cases;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct SweepReport {
  std::string suite;
  bool passed = true;
  std::uint64_t checks = 0;
  /// Human-readable progress, one entry per range step.
  std::vector<std::string> lines;
  /// First failure in sweep order, which is smallest m first.
  std::optional<std::string> counterexample;
};

const std::vector<std::string_view>& sweep_names();

/// Throws std::invalid_argument for an unknown suite or bad ranges.
SweepReport run_sweep(std::string_view suite, const SweepOptions& options = {});

}  // namespace fh
