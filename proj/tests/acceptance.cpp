// Acceptance harness: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include "fh/graphs.hpp"
#include "fh/hadamard.hpp"
#include "fh/primsets.hpp"
#include "fh/sweeps.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using fh::PrimitiveSet;
using fh::ResidueSet;
using fh::SubmatrixSpec;
using V = std::vector<std::uint64_t>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

V elems(const PrimitiveSet& p) { return {p.elements().begin(), p.elements().end()}; }

bool exact(std::uint64_t m, V j, V k) {
  return fh::is_hadamard_exact(SubmatrixSpec(ResidueSet(m, std::move(j)), ResidueSet(m, std::move(k)))).hadamard();
}

std::string str(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Outcome powers_of_two() {
  Outcome o;
  for (unsigned q = 1; q <= 8; ++q) {
    const auto g = fh::build_graph(std::uint64_t{1} << q, 2);
    o.require(g.vertices().size() == q && g.edges().size() == (q + 1) / 2,
              str("q=", q, ": |V|=", g.vertices().size(), " |E|=", g.edges().size()));
  }
  if (o.ok) o.detail = "q=1..8 exact";
  return o;
}

Outcome twice_prime() {
  Outcome o;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto g = fh::build_graph(2 * p, 2);
    const PrimitiveSet a({1, 2}), b({1, 2 * p});
    o.require(g.vertices() == std::set<PrimitiveSet>{a, b}, str("p=", p, ": vertex set differs"));
    o.require(g.edges() == std::set<fh::CompatGraph::Edge>{{a, a}, {a, b}}, str("p=", p, ": edge set differs"));
  }
  if (o.ok) o.detail = "p in {3,5,7,11,13}";
  return o;
}

Outcome g180_2() {
  Outcome o;
  const auto g = fh::build_graph(180, 2);
  o.require(fh::has_edge(g, PrimitiveSet({1, 20}), PrimitiveSet({1, 18})), "{1,20}-{1,18} missing");
  o.require(!fh::has_edge(g, PrimitiveSet({1, 18}), PrimitiveSet({1, 6})), "{1,18}-{1,6} present");
  if (o.ok) o.detail = str("|V|=", g.vertices().size(), " |E|=", g.edges().size());
  return o;
}

Outcome g180_3() {
  Outcome o;
  const auto g = fh::build_graph(180, 3);
  o.require(fh::has_edge(g, PrimitiveSet({1, 9, 45}), PrimitiveSet({1, 6, 12})), "{1,9,45}-{1,6,12} missing");
  o.require(!fh::has_edge(g, PrimitiveSet({1, 15, 60}), PrimitiveSet({1, 30, 60})), "{1,15,60}-{1,30,60} present");
  if (o.ok) o.detail = str("|V|=", g.vertices().size(), " |E|=", g.edges().size());
  return o;
}

Outcome example_battery() {
  Outcome o;
  o.require(exact(4, {0, 2}, {0, 1}), "m=4 {0,2}x{0,1}");
  o.require(exact(10, {0, 1, 7, 8, 9}, {0, 2, 4, 6, 8}), "m=10 {0,1,7,8,9}x{0,2,4,6,8}");
  o.require(exact(21, {0, 2, 16}, {0, 7, 14}), "m=21 {0,2,16}x{0,7,14}");
  o.require(exact(12, {0, 4, 8}, {0, 1, 2}), "m=12 {0,4,8}x{0,1,2}");

  const ResidueSet j6(6, {0, 4});
  o.require(fh::necessary_c_divides(j6, 2).outcome == fh::Screening::RuledOut, "m=6 J={0,4} not ruled out");
  for (const auto& k : oracle::subsets(6, 2, false))
    o.require(!exact(6, {0, 4}, k) && !oracle::hadamard(6, {0, 4}, k), "m=6 J={0,4} has a Hadamard partner");

  const ResidueSet j6000(6000, {0, 5, 375});
  o.require(fh::c_m(j6000) == 2, "m=6000 C != 2");
  o.require(fh::necessary_c_divides(j6000, 3).outcome == fh::Screening::RuledOut, "m=6000 n=3 not ruled out");
  if (o.ok) o.detail = "6 examples";
  return o;
}

Outcome oracle_sweeps() {
  Outcome o;
  fh::SweepOptions s2, s3;
  s2.m_max = 48;
  s3.m_max = 30;
  const auto r2 = fh::run_sweep("oracle2", s2);
  const auto r3 = fh::run_sweep("oracle3", s3);
  o.require(r2.passed, "2x2: " + r2.counterexample.value_or(""));
  o.require(r3.passed, "3x3: " + r3.counterexample.value_or(""));
  if (o.ok) o.detail = str(r2.checks, " 2x2 pairs (m<=48), ", r3.checks, " 3x3 pairs (m<=30)");
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::uint64_t checks = 0;

  fh::SweepOptions cp;
  cp.m_max = 20;
  cp.n_max = 4;
  cp.random_cases = 10000;
  cp.seed = 2024;
  const auto rc = fh::run_sweep("compprop", cp);
  o.require(rc.passed, "compprop: " + rc.counterexample.value_or(""));
  checks += rc.checks;

  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000 && o.ok; ++i) {
    const std::uint64_t m = 1 + rng() % 120;
    const std::uint64_t n = 1 + rng() % std::min<std::uint64_t>(m, 8);
    std::set<std::uint64_t> xs;
    while (xs.size() < n) xs.insert(rng() % m);
    const ResidueSet x(m, V(xs.begin(), xs.end()));
    const auto p = fh::primitive_set(x);
    const auto v = static_cast<std::int64_t>(rng() % 1000) - 500;
    const std::uint64_t w = 1 + rng() % 9;
    o.require(fh::primitive_set(fh::shift(x, v)) == p, "shift invariance fails for " + x.to_string());
    o.require(fh::primitive_set(fh::scale(x, w)) == p, "scale invariance fails for " + x.to_string());
    o.require(elems(p) == oracle::primitive(m, V(xs.begin(), xs.end())), "primitive set differs from oracle");
    checks += 3;
  }

  for (int i = 0; i < 3000 && o.ok; ++i) {
    const std::uint64_t m = 2 + rng() % 40;
    const std::uint64_t n = 2 + rng() % std::min<std::uint64_t>(m - 1, 4);
    auto pick = [&] {
      std::set<std::uint64_t> xs;
      while (xs.size() < n) xs.insert(rng() % m);
      return ResidueSet(m, V(xs.begin(), xs.end()));
    };
    const auto j = pick(), k = pick();
    const auto base = fh::is_hadamard(SubmatrixSpec(j, k)).decision;
    const auto sj = static_cast<std::int64_t>(rng() % m), sk = static_cast<std::int64_t>(rng() % m);
    o.require(fh::is_hadamard(SubmatrixSpec(fh::shift(j, sj), fh::shift(k, sk))).decision == base,
              "verdict changes under shift: m=" + std::to_string(m) + " J=" + j.to_string() + " K=" + k.to_string());
    ++checks;
  }

  fh::SweepOptions dj;
  dj.m_max = 24;
  dj.n_max = 4;
  const auto rd = fh::run_sweep("disjoint", dj);
  o.require(rd.passed, "disjoint: " + rd.counterexample.value_or(""));
  checks += rd.checks;

  fh::SweepOptions sc;
  sc.m_max = 12;
  sc.v_max = 3;
  sc.n_max = 3;
  const auto rs = fh::run_sweep("scaling", sc);
  o.require(rs.passed, "scaling: " + rs.counterexample.value_or(""));
  checks += rs.checks;

  // Transfer: a Hadamard pair (J, K) stays Hadamard for every J' with the
  // same primitive set. K is taken 0-containing; J' ranges over all subsets.
  for (std::uint64_t m = 1; m <= 24 && o.ok; ++m)
    for (std::uint64_t n = 1; n <= 3 && n <= m && o.ok; ++n) {
      std::map<V, std::vector<ResidueSet>> classes;
      oracle::for_each_subset(m, n, false, [&](const V& s) { classes[oracle::primitive(m, s)].emplace_back(m, s); });
      for (const auto& kv : oracle::subsets(m, n, true)) {
        const ResidueSet k(m, kv);
        for (const auto& [p, members] : classes) {
          const bool first = fh::is_hadamard_exact(SubmatrixSpec(members.front(), k)).hadamard();
          for (const auto& j : members) {
            ++checks;
            if (fh::is_hadamard_exact(SubmatrixSpec(j, k)).hadamard() != first) {
              o.require(false, "transfer fails: m=" + std::to_string(m) + " J=" + j.to_string() + " K=" + k.to_string());
              break;
            }
          }
        }
      }
    }

  if (o.ok) o.detail = str(checks, " checks");
  return o;
}

Outcome dominance() {
  Outcome o;
  const auto g30 = fh::build_graph(30, 6);
  const auto d30 = fh::dominant_vertices(g30);
  o.require(std::find(d30.begin(), d30.end(), PrimitiveSet({1, 2, 3, 6})) != d30.end(),
            "{1,2,3,6} not dominant in G(30,6)");
  const auto g36 = fh::build_graph(36, 4);
  const auto d36 = fh::dominant_vertices(g36);
  o.require(!g36.empty(), "G(36,4) is empty");
  o.require(!d36.empty(), "G(36,4) has no dominant vertex");
  if (o.ok) o.detail = str("G(36,4) dominant ", d36.front().to_string());
  return o;
}

Outcome brute_force() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::uint64_t m = 1; m <= 16; ++m)
    for (std::uint64_t n = 1; n <= 3 && n <= m; ++n) {
      const auto want = oracle::brute_force_graph(m, n);
      const auto g = fh::build_graph(m, n);
      std::set<V> vs;
      for (const auto& v : g.vertices()) vs.insert(elems(v));
      std::set<std::pair<V, V>> es;
      for (const auto& [p, q] : g.edges()) es.emplace(elems(p), elems(q));
      o.require(vs == want.vertices && es == want.edges, str("G(", m, ",", n, ") differs from all-pairs search"));
      ++graphs;
    }
  if (o.ok) o.detail = str(graphs, " graphs");
  return o;
}

Outcome numeric_cross_check() {
  Outcome o;
  std::mt19937_64 rng(10000);
  std::size_t hadamard = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t m = 1 + rng() % 60;
    const std::uint64_t n = 1 + rng() % std::min<std::uint64_t>(m, 6);
    auto pick = [&] {
      std::set<std::uint64_t> xs;
      while (xs.size() < n) xs.insert(rng() % m);
      return ResidueSet(m, V(xs.begin(), xs.end()));
    };
    const SubmatrixSpec spec(pick(), pick());
    const bool e = fh::is_hadamard_exact(spec).hadamard();
    const bool f = fh::is_hadamard_numeric(spec, 1e-9).hadamard();
    o.require(e == f, "disagree: m=" + std::to_string(m) + " J=" + spec.rows().to_string() + " K=" +
                          spec.cols().to_string());
    hadamard += e;
  }
  if (o.ok) o.detail = str("10000 specs, ", hadamard, " Hadamard");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "power-of-two counts", 10, powers_of_two},
      {2, "twice-a-prime graphs", 1, twice_prime},
      {3, "G(180,2) spot checks", 5, g180_2},
      {4, "G(180,3) spot checks", 60, g180_3},
      {5, "example battery", 5, example_battery},
      {6, "oracle equivalence sweeps", 300, oracle_sweeps},
      {7, "property suites", 600, property_suites},
      {8, "dominance", 300, dominance},
      {9, "brute-force graph equivalence", 120, brute_force},
      {10, "exact/numeric cross-validation", 300, numeric_cross_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o = {false, str("took ", secs, "s")};
    failed += !o.ok;
    std::printf("%s %2d %-32s %8.2fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
