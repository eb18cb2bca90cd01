#include "fh/sweeps.hpp"

#include "fh/graphs.hpp"
#include "fh/hadamard.hpp"
#include "fh/numtheory.hpp"
#include "fh/primsets.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fh {

namespace {

using Set = std::vector<std::uint64_t>;

std::string join(const Set& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

/// Empty when every inequality holds for prime p.
std::string padic_violation(const ResidueSet& x, std::uint64_t p) {
  const auto d = nonzero_differences(x);
  const auto s = primitive_set(x).without_one();
  const auto ed = nu_extremes(p, std::span<const std::int64_t>(d));
  const auto es = nu_extremes(p, std::span<const std::uint64_t>(s));
  const int num = static_cast<int>(p_adic_order(p, static_cast<std::int64_t>(x.modulus())));
  const int dmin = static_cast<int>(ed.min), dmax = static_cast<int>(ed.max);
  const int pmin = static_cast<int>(es.min), pmax = static_cast<int>(es.max);
  std::ostringstream os;
  if (pmax > std::max(0, num - dmin)) os << "nu_p max P = " << pmax << " > max(0, " << num << " - " << dmin << ")";
  else if (pmin < num - dmax) os << "nu_p min P = " << pmin << " < " << num << " - " << dmax;
  else if (dmin < num - pmax) os << "nu_p min D = " << dmin << " < " << num << " - " << pmax;
  else if (pmin >= 1 && dmax > num - pmin) os << "nu_p max D = " << dmax << " > " << num << " - " << pmin;
  return os.str();
}

std::string check_padic(const ResidueSet& x) {
  for (const auto& [p, e] : factorize(x.modulus()))
    if (auto why = padic_violation(x, p); !why.empty())
      return "m=" + std::to_string(x.modulus()) + " X=" + x.to_string() + " p=" + std::to_string(p) + ": " + why;
  return {};
}

void fail(SweepReport& r, std::string what) {
  if (r.passed) r.counterexample = std::move(what);
  r.passed = false;
}

SweepReport padic_inequalities(const SweepOptions& o) {
  SweepReport r;
  r.suite = "compprop";
  const std::uint64_t m_max = o.m_max ? o.m_max : 20;
  const std::uint64_t n_max = o.n_max ? o.n_max : 4;
  // Shift invariance of P_m lets the exhaustive part fix 0 in X.
  for (std::uint64_t m = 2; m <= m_max && r.passed; ++m) {
    std::uint64_t before = r.checks;
    for (std::uint64_t n = 2; n <= n_max && n <= m && r.passed; ++n)
      detail::for_each_zero_subset(m, n, [&](const Set& s) {
        if (!r.passed) return;
        ResidueSet x(m, s);
        if (auto why = check_padic(x); !why.empty()) fail(r, why);
        ++r.checks;
      });
    r.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(r.checks - before) + " sets");
  }
  const std::size_t cases = o.random_cases.value_or(10000);
  std::mt19937_64 rng(o.seed);
  const std::uint64_t lo = m_max + 1, hi = std::max<std::uint64_t>(lo, 420);
  for (std::size_t i = 0; i < cases && r.passed; ++i) {
    const std::uint64_t m = lo + rng() % (hi - lo + 1);
    const std::uint64_t n = 2 + rng() % std::min<std::uint64_t>(8, m - 1);
    std::set<std::uint64_t> elems;
    while (elems.size() < n) elems.insert(rng() % m);
    if (auto why = check_padic(ResidueSet(m, Set(elems.begin(), elems.end()))); !why.empty()) fail(r, why);
    ++r.checks;
  }
  if (cases) r.lines.push_back("random: " + std::to_string(cases) + " sets with m in [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "], seed " + std::to_string(o.seed));
  return r;
}

class GraphCache {
 public:
  explicit GraphCache(unsigned threads) : threads_(threads) {}
  const CompatGraph& get(std::uint64_t m, std::uint64_t n) {
    auto it = graphs_.find({m, n});
    if (it == graphs_.end()) it = graphs_.emplace(std::pair{m, n}, build_graph(m, n, {.threads = threads_})).first;
    return it->second;
  }

 private:
  unsigned threads_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, CompatGraph> graphs_;
};

SweepReport disjoint(const SweepOptions& o) {
  SweepReport r;
  r.suite = "disjoint";
  Set ms;
  if (o.m) ms.push_back(o.m);
  else
    for (std::uint64_t m = 1; m <= (o.m_max ? o.m_max : 24); ++m) ms.push_back(m);
  GraphCache cache(o.threads);
  for (std::uint64_t m : ms) {
    Set ns = o.n_values;
    if (ns.empty())
      for (std::uint64_t n = 1; n <= (o.n_max ? o.n_max : 4) && n <= m; ++n) ns.push_back(n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (o.m && ns.size() < 2) throw std::invalid_argument("disjoint: need at least two distinct n values");
    for (auto n : ns)
      if (n == 0 || n > m) throw std::invalid_argument("disjoint: need 1 <= n <= m for every n");
    for (std::size_t a = 0; a < ns.size(); ++a)
      for (std::size_t b = a + 1; b < ns.size(); ++b) {
        const auto& va = cache.get(m, ns[a]).vertices();
        const auto& vb = cache.get(m, ns[b]).vertices();
        ++r.checks;
        for (const auto& v : va)
          if (vb.count(v)) {
            fail(r, "m=" + std::to_string(m) + ": " + v.to_string() + " is a vertex for n=" + std::to_string(ns[a]) +
                        " and n=" + std::to_string(ns[b]));
            return r;
          }
      }
    if (ns.size() >= 2) r.lines.push_back("m=" + std::to_string(m) + " n=" + join(ns) + ": disjoint");
  }
  return r;
}

SweepReport scaling(const SweepOptions& o) {
  SweepReport r;
  r.suite = "scaling";
  const std::uint64_t m_max = o.m_max ? o.m_max : 12, v_max = o.v_max ? o.v_max : 3, n_max = o.n_max ? o.n_max : 3;
  GraphCache cache(o.threads);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    for (std::uint64_t n = 1; n <= n_max && n <= m; ++n) {
      const auto& small = cache.get(m, n).vertices();
      for (std::uint64_t v = 1; v <= v_max; ++v) {
        const auto& big = cache.get(v * m, n).vertices();
        ++r.checks;
        for (const auto& x : small)
          if (!big.count(x)) {
            fail(r, "m=" + std::to_string(m) + " v=" + std::to_string(v) + " n=" + std::to_string(n) + ": " +
                        x.to_string() + " missing from G(" + std::to_string(v * m) + "," + std::to_string(n) + ")");
            return r;
          }
      }
    }
    r.lines.push_back("m=" + std::to_string(m) + ": contained for v<=" + std::to_string(v_max));
  }
  return r;
}

SweepReport oracle_sweep(std::string name, std::uint64_t n, std::uint64_t m_max, unsigned threads,
                         SubmatrixVerdict (*criterion)(const ResidueSet&, const ResidueSet&)) {
  SweepReport r;
  r.suite = std::move(name);
  for (std::uint64_t m = n; m <= m_max; ++m) {
    std::vector<ResidueSet> sets;
    detail::for_each_zero_subset(m, n, [&](const Set& s) { sets.emplace_back(m, s); });
    const std::size_t count = sets.size() * sets.size();
    // Per-index results keep the reported counterexample independent of scheduling.
    std::vector<char> bad(count, 0);
    detail::parallel_for(count, threads, [&](std::size_t i) {
      const auto& j = sets[i / sets.size()];
      const auto& k = sets[i % sets.size()];
      bad[i] = criterion(j, k).hadamard() != is_hadamard_exact(SubmatrixSpec(j, k)).hadamard();
    });
    r.checks += count;
    if (auto it = std::find(bad.begin(), bad.end(), 1); it != bad.end()) {
      const std::size_t i = static_cast<std::size_t>(it - bad.begin());
      const auto& j = sets[i / sets.size()];
      const auto& k = sets[i % sets.size()];
      fail(r, "m=" + std::to_string(m) + " J=" + j.to_string() + " K=" + k.to_string() + ": criterion says " +
                  std::string(to_string(criterion(j, k).decision)) + ", exact oracle says " +
                  std::string(to_string(is_hadamard_exact(SubmatrixSpec(j, k)).decision)));
      return r;
    }
    r.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(count) + " pairs agree");
  }
  return r;
}

SweepReport counts2q(const SweepOptions& o) {
  SweepReport r;
  r.suite = "counts2q";
  const unsigned q_max = o.q_max ? o.q_max : 8;
  if (q_max > 20) throw std::invalid_argument("counts2q: q-max above 20 is not supported");
  for (unsigned q = 1; q <= q_max; ++q) {
    const auto g = build_graph(std::uint64_t{1} << q, 2, {.threads = o.threads});
    const std::size_t want_e = (q + 1) / 2;
    ++r.checks;
    std::ostringstream line;
    line << "q=" << q << ": |V|=" << g.vertices().size() << " |E|=" << g.edges().size() << " (expected " << q << ", "
         << want_e << ")";
    r.lines.push_back(line.str());
    if (g.vertices().size() != q || g.edges().size() != want_e) {
      fail(r, line.str());
      return r;
    }
  }
  return r;
}

}  // namespace

const std::vector<std::string_view>& sweep_names() {
  static const std::vector<std::string_view> names{"compprop", "disjoint", "scaling", "oracle2", "oracle3", "counts2q"};
  return names;
}

SweepReport run_sweep(std::string_view suite, const SweepOptions& o) {
  if (suite == "compprop") return padic_inequalities(o);
  if (suite == "disjoint") return disjoint(o);
  if (suite == "scaling") return scaling(o);
  if (suite == "oracle2") return oracle_sweep("oracle2", 2, o.m_max ? o.m_max : 48, o.threads, test_2x2_general);
  if (suite == "oracle3") return oracle_sweep("oracle3", 3, o.m_max ? o.m_max : 30, o.threads, test_3x3);
  if (suite == "counts2q") return counts2q(o);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace fh
