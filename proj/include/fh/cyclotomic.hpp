// Cyclotomic polynomials Phi_s(x), computed by exact division
//   Phi_s(x) = (x^s - 1) / prod_{d | s, d < s} Phi_d(x)
// and memoized in a process-wide table.

#pragma once

#include "fh/intpoly.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

namespace fh {

/// Thread-safe memo of cyclotomic polynomials. Entries are never removed,
/// so returned references stay valid for the lifetime of the table.
/// Concurrent misses on the same s may compute it twice; the first insert
/// wins and the other result is dropped.
class CyclotomicTable {
 public:
  const IntPoly& get(std::uint64_t s);
  std::size_t size() const;

  /// Plain binary dump of every cached entry. Throws std::runtime_error on
  /// I/O failure.
  void save(const std::filesystem::path& file) const;

  /// Merges entries from a file written by save(). A missing, truncated or
  /// inconsistent file is ignored as a whole and reported by returning
  /// false; it never throws.
  bool load(const std::filesystem::path& file);

 private:
  const IntPoly* find(std::uint64_t s) const;
  const IntPoly& insert(std::uint64_t s, IntPoly poly);

  mutable std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>> table_;
};

CyclotomicTable& cyclotomic_table();

/// Phi_s for s >= 1, served from the global table.
const IntPoly& cyclotomic(std::uint64_t s);

}  // namespace fh
