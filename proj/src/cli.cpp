#include "fh/cli.hpp"

#include "fh/cyclotomic.hpp"
#include "fh/graph_io.hpp"
#include "fh/graphs.hpp"
#include "fh/hadamard.hpp"
#include "fh/primsets.hpp"
#include "fh/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fh::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using List = std::vector<std::uint64_t>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

List parse_list(const std::string& text, const std::string& what, bool ascending) {
  List out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, comma - pos);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw UsageError(what + ": '" + tok + "' is not a nonnegative integer");
    if (ascending && !out.empty() && v <= out.back())
      throw UsageError(what + ": elements must be strictly ascending without duplicates");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

ResidueSet parse_set(std::uint64_t m, const std::string& text, const std::string& what) {
  auto xs = parse_list(text, what, true);
  for (auto x : xs)
    if (x >= m) throw UsageError(what + ": " + std::to_string(x) + " is not in [0, " + std::to_string(m) + ")");
  return ResidueSet(m, std::move(xs));
}

template <typename Range>
std::string braces(const Range& xs) {
  std::string out = "{";
  for (auto x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

template <typename T>
ordered_json array_of(const T& xs) {
  return ordered_json(std::vector<typename T::value_type>(xs.begin(), xs.end()));
}

ordered_json array_of(const ResidueSet& x) { return array_of(x.elements()); }
ordered_json array_of(const PrimitiveSet& p) { return array_of(p.elements()); }

struct Context {
  bool json = false;
  unsigned threads = 0;
  std::ostringstream out;
  std::ostringstream err;
};

// ---- primset

struct PrimsetArgs {
  std::uint64_t m = 0;
  std::string elements;
  bool json = false;
};

int cmd_primset(Context& ctx, const PrimsetArgs& a) {
  const ResidueSet x = parse_set(a.m, a.elements, "elements");
  const auto d = difference_set(x);
  const auto p = primitive_set(x);
  const auto c = c_m(x);
  const auto cdiv = necessary_c_divides(x, x.size());
  const auto ppow = necessary_prime_powers(x);
  if (ctx.json || a.json) {
    ordered_json j;
    j["m"] = a.m;
    j["X"] = array_of(x);
    j["D"] = array_of(d);
    j["P"] = array_of(p);
    j["C"] = c;
    j["c_divides_n"] = {{"outcome", to_string(cdiv.outcome)}, {"reason", cdiv.reason}};
    j["prime_powers"] = {{"outcome", to_string(ppow.outcome)}, {"reason", ppow.reason}};
    ctx.out << j.dump(2) << '\n';
    return kOk;
  }
  ctx.out << "X      = " << x.to_string() << " mod " << a.m << '\n'
          << "D(X)   = " << braces(d) << '\n'
          << "P_m(X) = " << p.to_string() << '\n'
          << "C_m(X) = " << c << '\n'
          << "C divides |J|:   " << to_string(cdiv.outcome) << ": " << cdiv.reason << '\n'
          << "prime powers:    " << to_string(ppow.outcome) << ": " << ppow.reason << '\n';
  return kOk;
}

// ---- test

struct TestArgs {
  std::uint64_t m = 0;
  std::string rows, cols;
  std::string oracle = "exact";
};

ordered_json verdict_json(const SubmatrixVerdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.decision);
  j["rule"] = rule_name(v.rule);
  j["witness"] = v.witness.describe();
  if (v.witness.deviation) j["deviation"] = *v.witness.deviation;
  return j;
}

std::string verdict_line(const SubmatrixVerdict& v) {
  std::ostringstream os;
  os << to_string(v.decision) << " (rule: " << rule_name(v.rule) << ')';
  if (!v.witness.empty()) os << "\n  witness: " << v.witness.describe();
  return os.str();
}

int cmd_test(Context& ctx, const TestArgs& a) {
  const SubmatrixSpec spec(parse_set(a.m, a.rows, "J"), parse_set(a.m, a.cols, "K"));
  if (!spec.square())
    throw UsageError("|J| = " + std::to_string(spec.rows().size()) + " but |K| = " + std::to_string(spec.cols().size()));

  std::vector<std::pair<std::string, SubmatrixVerdict>> runs;
  if (a.oracle != "numeric") runs.emplace_back("exact", is_hadamard(spec));
  if (a.oracle != "exact") runs.emplace_back("numeric", is_hadamard_numeric(spec));
  const bool agree = runs.front().second.decision == runs.back().second.decision;
  const bool hadamard = runs.front().second.hadamard();

  if (ctx.json) {
    ordered_json j;
    j["m"] = a.m;
    j["J"] = array_of(spec.rows());
    j["K"] = array_of(spec.cols());
    j["P_J"] = array_of(primitive_set(spec.rows()));
    j["P_K"] = array_of(primitive_set(spec.cols()));
    for (const auto& [name, v] : runs) j[name] = verdict_json(v);
    if (runs.size() == 2) j["agree"] = agree;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "m = " << a.m << ", J = " << spec.rows().to_string() << ", K = " << spec.cols().to_string() << '\n'
            << "P_m(J) = " << primitive_set(spec.rows()).to_string() << ", P_m(K) = "
            << primitive_set(spec.cols()).to_string() << '\n';
    for (const auto& [name, v] : runs) ctx.out << (runs.size() == 2 ? name + ": " : "") << verdict_line(v) << '\n';
  }
  if (!agree) {
    ctx.err << "exact and numeric oracles disagree\n";
    return kVerifyFailed;
  }
  return hadamard ? kOk : kNegative;
}

// ---- graph

struct GraphArgs {
  std::uint64_t m = 0, n = 0;
  std::string dot_path, json_path;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw UsageError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw UsageError("write to " + path + " failed");
}

int cmd_graph(Context& ctx, const GraphArgs& a) {
  if (a.n == 0 || a.n > a.m) throw UsageError("need 1 <= n <= m");
  const auto g = build_graph(a.m, a.n, {.threads = ctx.threads});
  if (auto bad = verify_edges(g); !bad.empty()) {
    ctx.err << "post-build verification failed: " << bad << '\n';
    return kVerifyFailed;
  }
  if (!a.dot_path.empty()) write_file(a.dot_path, export_dot(g));
  if (!a.json_path.empty()) write_file(a.json_path, export_json(g));
  const auto dom = dominant_vertices(g);

  if (ctx.json) {
    auto j = ordered_json::parse(export_json(g));
    j["dominant"] = ordered_json::array();
    for (const auto& v : dom) j["dominant"].push_back(array_of(v));
    ctx.out << j.dump(2) << '\n';
    return kOk;
  }
  if (g.empty()) {
    ctx.out << "G(" << a.m << ',' << a.n << ") is empty: F_" << a.m << " has no " << a.n << 'x' << a.n
            << " Hadamard submatrix\n";
    return kOk;
  }
  ctx.out << "G(" << a.m << ',' << a.n << "): |V| = " << g.vertices().size() << ", |E| = " << g.edges().size() << '\n';
  ctx.out << "vertices:\n";
  for (const auto& v : g.vertices()) {
    ctx.out << "  " << v.to_string() << "  rep " << g.representatives().at(v).to_string() << "  adj";
    for (const auto& u : g.vertices())
      if (has_edge(g, v, u)) ctx.out << ' ' << u.to_string();
    ctx.out << '\n';
  }
  ctx.out << "dominant:";
  if (dom.empty()) ctx.out << " none";
  for (const auto& v : dom) ctx.out << ' ' << v.to_string();
  ctx.out << '\n';
  return kOk;
}

// ---- verify

struct VerifyArgs {
  std::string suite;
  std::uint64_t m_max = 0, m = 0, n_max = 0, v_max = 0, seed = 1;
  unsigned q_max = 0;
  std::string n_values;
  std::optional<std::size_t> random;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  SweepOptions o;
  o.m_max = a.m_max;
  o.m = a.m;
  if (!a.n_values.empty()) o.n_values = parse_list(a.n_values, "--n", false);
  o.n_max = a.n_max;
  o.v_max = a.v_max;
  o.q_max = a.q_max;
  o.random_cases = a.random;
  o.seed = a.seed;
  o.threads = ctx.threads;

  std::vector<std::string_view> suites;
  if (a.suite == "all") suites = sweep_names();
  else suites.push_back(a.suite);

  std::vector<SweepReport> reports;
  for (auto s : suites) {
    try {
      reports.push_back(run_sweep(s, o));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (ctx.json) {
      ordered_json jr;
      jr["suite"] = r.suite;
      jr["passed"] = r.passed;
      jr["checks"] = r.checks;
      jr["lines"] = r.lines;
      jr["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr);
      j.push_back(std::move(jr));
      continue;
    }
    for (const auto& line : r.lines) ctx.out << r.suite << ": " << line << '\n';
    ctx.out << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
    if (r.counterexample) ctx.out << r.suite << ": counterexample " << *r.counterexample << '\n';
  }
  if (ctx.json) ctx.out << j.dump(2) << '\n';
  if (!ok) ctx.err << "verification failed\n";
  return ok ? kOk : kVerifyFailed;
}

// ---- classify

struct ClassifyArgs {
  std::string x, candidates;
};

int cmd_classify(Context& ctx, const ClassifyArgs& a) {
  const auto x = parse_list(a.x, "X", true);
  if (!x.empty() && x.front() == 0) throw UsageError("X: elements must be positive");
  if (a.candidates.empty()) throw UsageError("--m: candidate list is empty");
  const auto ms = parse_list(a.candidates, "--m", false);
  std::uint64_t n = 0;
  try {
    n = phi_classify(x, ms, {.threads = ctx.threads});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (ctx.json) {
    ordered_json j;
    j["X"] = x;
    j["candidates"] = ms;
    j["found"] = n != 0;
    j["n"] = n;
    ctx.out << j.dump(2) << '\n';
  } else if (n) {
    ctx.out << n << '\n';
  } else {
    ctx.out << "not found within candidates\n";
  }
  return kOk;
}

// ---- cyclotomic cache

std::optional<std::filesystem::path> cache_file() {
  const char* dir = std::getenv("FH_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "cyclotomic.bin";
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Context ctx;
  CLI::App app{"Hadamard submatrices of Fourier matrices", "fh"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--threads", ctx.threads, "Worker threads, 0 for all cores");

  PrimsetArgs pa;
  auto* primset = app.add_subcommand("primset", "Difference set, primitive set and C_m of X");
  primset->add_option("-m", pa.m, "Modulus")->required()->check(CLI::PositiveNumber);
  primset->add_option("elements", pa.elements, "Ascending residues, e.g. 0,5,375")->required();
  primset->add_flag("--json", pa.json, "Machine-readable output");

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Is H_{J,K} a Hadamard submatrix of F_m?");
  test->add_option("-m", ta.m, "Modulus")->required()->check(CLI::PositiveNumber);
  test->add_option("-J", ta.rows, "Row selection")->required();
  test->add_option("-K", ta.cols, "Column selection")->required();
  test->add_option("--oracle", ta.oracle, "exact, numeric or both")->check(CLI::IsMember({"exact", "numeric", "both"}));

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "Build the compatibility graph G(m,n)");
  graph->add_option("-m", ga.m, "Modulus")->required()->check(CLI::PositiveNumber);
  graph->add_option("-n", ga.n, "Submatrix size")->required();
  graph->add_option("--dot", ga.dot_path, "Write DOT to this file");
  graph->add_option("--json", ga.json_path, "Write JSON to this file");

  VerifyArgs va;
  std::vector<std::string> suite_names{"all"};
  for (auto s : sweep_names()) suite_names.emplace_back(s);
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("suite", va.suite, "compprop, disjoint, scaling, oracle2, oracle3, counts2q or all")
      ->required()
      ->check(CLI::IsMember(suite_names));
  verify->add_option("--m-max", va.m_max, "Largest m");
  verify->add_option("-m", va.m, "Single m (disjoint)");
  verify->add_option("--n", va.n_values, "n values to compare (disjoint)");
  verify->add_option("--n-max", va.n_max, "Largest n");
  verify->add_option("--v-max", va.v_max, "Largest scale factor (scaling)");
  verify->add_option("--q-max", va.q_max, "Largest q (counts2q)");
  verify->add_option("--random", va.random, "Random cases (compprop)");
  verify->add_option("--seed", va.seed, "Random seed (compprop)");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Submatrix size n with X as a row primitive set");
  classify->add_option("X", ca.x, "Ascending positive integers containing 1")->required();
  classify->add_option("--m", ca.candidates, "Candidate moduli, e.g. 12,21")->required();

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    result.exit_code = code == 0 ? kOk : kUsage;
    result.out = ctx.out.str();
    result.err = ctx.err.str();
    return result;
  }
  ctx.json = format == "json";

  const auto cache = cache_file();
  std::size_t cached = 0;
  bool loaded = false;
  if (cache) {
    loaded = cyclotomic_table().load(*cache);
    cached = cyclotomic_table().size();
  }

  try {
    if (*primset) result.exit_code = cmd_primset(ctx, pa);
    else if (*test) result.exit_code = cmd_test(ctx, ta);
    else if (*graph) result.exit_code = cmd_graph(ctx, ga);
    else if (*verify) result.exit_code = cmd_verify(ctx, va);
    else if (*classify) result.exit_code = cmd_classify(ctx, ca);
  } catch (const UsageError& e) {
    ctx.err << "error: " << e.what() << '\n';
    result.exit_code = kUsage;
  } catch (const std::invalid_argument& e) {
    ctx.err << "error: " << e.what() << '\n';
    result.exit_code = kUsage;
  }

  if (cache && (!loaded || cyclotomic_table().size() != cached)) {
    try {
      std::filesystem::create_directories(cache->parent_path());
      cyclotomic_table().save(*cache);
    } catch (const std::exception& e) {
      ctx.err << "warning: cyclotomic cache not saved: " << e.what() << '\n';
    }
  }
  result.out = ctx.out.str();
  result.err = ctx.err.str();
  return result;
}

}  // namespace fh::cli
