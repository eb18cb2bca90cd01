// Compatibility graphs G(m, n).
//
// Vertices are the primitive sets P_m(J) of row selections J of n x n
// Hadamard submatrices of F_m; P and Q are joined when some Hadamard
// submatrix has P_m(J) = P and P_m(K) = Q. Whether H_{J,K} is Hadamard
// depends only on the pair (P_m(J), P_m(K)), so one representative per
// primitive set decides its whole class.

#pragma once

#include "fh/primsets.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fh {

/// Structural invariant violated; where() names the offending item.
class GraphError : public std::runtime_error {
 public:
  GraphError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class CompatGraph {
 public:
  /// Unordered; stored with first <= second. A loop has first == second.
  using Edge = std::pair<PrimitiveSet, PrimitiveSet>;

  /// The empty graph.
  CompatGraph(std::uint64_t m, std::uint64_t n);

  /// Validates: 1 <= n <= m; every edge endpoint is a vertex; every vertex
  /// lies on an edge; representatives cover exactly the vertices, each an
  /// n-subset of [0, m) containing 0 whose primitive set is its key.
  /// Throws GraphError. Hadamard-ness of edges is checked separately by
  /// verify_edges().
  CompatGraph(std::uint64_t m, std::uint64_t n, std::set<PrimitiveSet> vertices, std::set<Edge> edges,
              std::map<PrimitiveSet, ResidueSet> representatives);

  std::uint64_t m() const { return m_; }
  std::uint64_t n() const { return n_; }
  const std::set<PrimitiveSet>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::map<PrimitiveSet, ResidueSet>& representatives() const { return reps_; }
  bool empty() const { return vertices_.empty(); }

  friend bool operator==(const CompatGraph&, const CompatGraph&) = default;

 private:
  std::uint64_t m_;
  std::uint64_t n_;
  std::set<PrimitiveSet> vertices_;
  std::set<Edge> edges_;
  std::map<PrimitiveSet, ResidueSet> reps_;
};

struct BuildOptions {
  /// Worker threads for pair testing; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Enumerates the 0-containing n-subsets of [0, m), buckets them by
/// primitive set (keeping the lexicographically least member), and tests
/// every unordered bucket pair once with is_hadamard. Output does not depend
/// on the thread count. Throws std::invalid_argument unless 1 <= n <= m.
CompatGraph build_graph(std::uint64_t m, std::uint64_t n, const BuildOptions& options = {});

/// Order-insensitive; false for unknown vertices.
bool has_edge(const CompatGraph& g, const PrimitiveSet& p, const PrimitiveSet& q);

/// Vertices joined to every vertex, themselves included (via a loop).
std::vector<PrimitiveSet> dominant_vertices(const CompatGraph& g);

/// Re-runs the exact oracle on the representatives of every edge. Returns
/// a description of the first failing edge, or an empty string.
std::string verify_edges(const CompatGraph& g);

/// V(G(m,n)) and V(G(m,n')) are disjoint. Throws std::invalid_argument for
/// n == n'.
bool verify_disjoint_vertices(std::uint64_t m, std::uint64_t n, std::uint64_t n2, const BuildOptions& options = {});

/// V(G(m,n)) is contained in V(G(vm,n)).
bool verify_scaling_containment(std::uint64_t m, std::uint64_t v, std::uint64_t n, const BuildOptions& options = {});

/// The size n of the Hadamard submatrices whose row primitive set is X,
/// searched over the given moduli (those with every element of X dividing
/// them); 0 when none of them has X as a vertex, which includes every X
/// lacking 1. Throws std::invalid_argument for an empty X, an empty
/// candidate list, or a candidate smaller than max(X).
std::uint64_t phi_classify(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& m_candidates,
                           const BuildOptions& options = {});

}  // namespace fh
