#include "fh/graphs.hpp"

#include "fh/hadamard.hpp"
#include "fh/numtheory.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace fh {

CompatGraph::CompatGraph(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0 || n > m) throw GraphError("/", "need 1 <= n <= m");
}

CompatGraph::CompatGraph(std::uint64_t m, std::uint64_t n, std::set<PrimitiveSet> vertices, std::set<Edge> edges,
                         std::map<PrimitiveSet, ResidueSet> representatives)
    : CompatGraph(m, n) {
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
  reps_ = std::move(representatives);

  std::set<PrimitiveSet> incident;
  for (const auto& [p, q] : edges_) {
    const std::string where = "edge " + p.to_string() + "--" + q.to_string();
    if (q < p) throw GraphError(where, "endpoints out of order");
    if (!vertices_.count(p)) throw GraphError(where, p.to_string() + " is not a vertex");
    if (!vertices_.count(q)) throw GraphError(where, q.to_string() + " is not a vertex");
    incident.insert(p);
    incident.insert(q);
  }
  for (const auto& v : vertices_) {
    const std::string where = "vertex " + v.to_string();
    if (!incident.count(v)) throw GraphError(where, "not incident to any edge");
    for (auto s : v.elements())
      if (m_ % s != 0) throw GraphError(where, std::to_string(s) + " does not divide m");
    auto it = reps_.find(v);
    if (it == reps_.end()) throw GraphError(where, "has no representative");
    const ResidueSet& r = it->second;
    if (r.modulus() != m_ || r.size() != n_ || !r.contains(0))
      throw GraphError("representative " + v.to_string(), "must be a 0-containing " + std::to_string(n_) +
                                                               "-subset of [0," + std::to_string(m_) + ")");
    if (primitive_set(r) != v)
      throw GraphError("representative " + v.to_string(),
                       r.to_string() + " has primitive set " + primitive_set(r).to_string());
  }
  for (const auto& [p, r] : reps_)
    if (!vertices_.count(p)) throw GraphError("representative " + p.to_string(), "key is not a vertex");
}

CompatGraph build_graph(std::uint64_t m, std::uint64_t n, const BuildOptions& options) {
  if (n == 0 || m == 0 || n > m)
    throw std::invalid_argument("build_graph: need 1 <= n <= m, got m=" + std::to_string(m) + " n=" + std::to_string(n));

  // First hit per bucket is the lexicographically least member.
  std::map<PrimitiveSet, ResidueSet> buckets;
  detail::for_each_zero_subset(m, n, [&](const std::vector<std::uint64_t>& s) {
    ResidueSet r(m, s);
    buckets.try_emplace(primitive_set(r), std::move(r));
  });

  std::vector<const std::pair<const PrimitiveSet, ResidueSet>*> items;
  for (const auto& kv : buckets) items.push_back(&kv);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < items.size(); ++a)
    for (std::size_t b = a; b < items.size(); ++b) pairs.emplace_back(a, b);

  std::vector<char> passed(pairs.size(), 0);
  detail::parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    passed[i] = is_hadamard(SubmatrixSpec(items[a]->second, items[b]->second)).hadamard();
  });

  std::set<PrimitiveSet> vertices;
  std::set<CompatGraph::Edge> edges;
  std::map<PrimitiveSet, ResidueSet> reps;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!passed[i]) continue;
    const auto& [pa, ra] = *items[pairs[i].first];
    const auto& [pb, rb] = *items[pairs[i].second];
    edges.emplace(pa, pb);
    vertices.insert(pa);
    vertices.insert(pb);
    reps.try_emplace(pa, ra);
    reps.try_emplace(pb, rb);
  }
  return CompatGraph(m, n, std::move(vertices), std::move(edges), std::move(reps));
}

bool has_edge(const CompatGraph& g, const PrimitiveSet& p, const PrimitiveSet& q) {
  return q < p ? g.edges().count({q, p}) > 0 : g.edges().count({p, q}) > 0;
}

std::vector<PrimitiveSet> dominant_vertices(const CompatGraph& g) {
  std::vector<PrimitiveSet> out;
  for (const auto& v : g.vertices())
    if (std::all_of(g.vertices().begin(), g.vertices().end(), [&](const PrimitiveSet& u) { return has_edge(g, v, u); }))
      out.push_back(v);
  return out;
}

std::string verify_edges(const CompatGraph& g) {
  for (const auto& [p, q] : g.edges()) {
    const auto v = is_hadamard_exact(SubmatrixSpec(g.representatives().at(p), g.representatives().at(q)));
    if (!v.hadamard())
      return "edge " + p.to_string() + "--" + q.to_string() + " fails the exact oracle: " + v.witness.describe();
  }
  return {};
}

bool verify_disjoint_vertices(std::uint64_t m, std::uint64_t n, std::uint64_t n2, const BuildOptions& options) {
  if (n == n2) throw std::invalid_argument("verify_disjoint_vertices: n and n' must differ");
  const auto a = build_graph(m, n, options);
  const auto b = build_graph(m, n2, options);
  return std::none_of(a.vertices().begin(), a.vertices().end(),
                      [&](const PrimitiveSet& v) { return b.vertices().count(v) > 0; });
}

bool verify_scaling_containment(std::uint64_t m, std::uint64_t v, std::uint64_t n, const BuildOptions& options) {
  if (v == 0) throw std::invalid_argument("verify_scaling_containment: v must be positive");
  const auto small = build_graph(m, n, options);
  const auto big = build_graph(v * m, n, options);
  return std::includes(big.vertices().begin(), big.vertices().end(), small.vertices().begin(),
                       small.vertices().end());
}

namespace {

/// Some 0-containing n-subset J of [0, m) with P_m(J) = target.
std::optional<ResidueSet> find_row_set(std::uint64_t m, std::uint64_t n, const PrimitiveSet& target) {
  std::vector<std::uint64_t> cur{0};
  std::vector<char> seen(m + 1, 0);  // seen[s]: order s realized so far
  seen[1] = 1;
  std::vector<std::uint64_t> orders_added;

  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t next) -> bool {
    if (cur.size() == n) {
      for (auto s : target.elements())
        if (!seen[s]) return false;
      return true;
    }
    for (std::uint64_t x = next; x < m && m - x >= n - cur.size(); ++x) {
      bool ok = true;
      const std::size_t mark = orders_added.size();
      for (auto y : cur) {
        const std::uint64_t s = m / std::gcd(m, x - y);
        if (!target.contains(s)) {
          ok = false;
          break;
        }
        if (!seen[s]) {
          seen[s] = 1;
          orders_added.push_back(s);
        }
      }
      if (ok) {
        cur.push_back(x);
        if (rec(x + 1)) return true;
        cur.pop_back();
      }
      while (orders_added.size() > mark) {
        seen[orders_added.back()] = 0;
        orders_added.pop_back();
      }
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return ResidueSet(m, cur);
}

}  // namespace

std::uint64_t phi_classify(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& m_candidates,
                           const BuildOptions& options) {
  if (x.empty()) throw std::invalid_argument("phi_classify: empty set");
  if (m_candidates.empty()) throw std::invalid_argument("phi_classify: no candidate moduli");
  const std::uint64_t top = *std::max_element(x.begin(), x.end());
  for (auto m : m_candidates)
    if (m < top)
      throw std::invalid_argument("phi_classify: candidate " + std::to_string(m) + " is smaller than max(X) = " +
                                  std::to_string(top));

  // Sets without 1 (or with 0, or repeats) are never primitive sets.
  std::vector<std::uint64_t> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() != 1 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  const PrimitiveSet target(sorted);
  const std::uint64_t c = c_value(target);

  for (auto m : m_candidates) {
    if (!std::all_of(sorted.begin(), sorted.end(), [m](std::uint64_t s) { return m % s == 0; })) continue;
    // C_m(J) | n is necessary; C depends only on the primitive set.
    for (std::uint64_t n = c; n <= m; n += c) {
      if (!find_row_set(m, n, target)) continue;
      if (build_graph(m, n, options).vertices().count(target)) return n;
    }
  }
  return 0;
}

}  // namespace fh
