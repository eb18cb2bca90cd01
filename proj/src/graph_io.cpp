#include "fh/graph_io.hpp"

#include <json.hpp>

#include <sstream>

namespace fh {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json to_array(const PrimitiveSet& p) { return ordered_json(std::vector<std::uint64_t>(p.elements().begin(), p.elements().end())); }

std::string quoted(const PrimitiveSet& p) { return '"' + p.to_string() + '"'; }

std::vector<std::uint64_t> read_uints(const json& j, const std::string& where) {
  if (!j.is_array()) throw GraphError(where, "expected an array of nonnegative integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned()) throw GraphError(where + "/" + std::to_string(i), "expected a nonnegative integer");
    out.push_back(j[i].get<std::uint64_t>());
  }
  return out;
}

PrimitiveSet read_primitive(const json& j, const std::string& where) {
  auto elems = read_uints(j, where);
  try {
    return PrimitiveSet(std::move(elems));
  } catch (const std::invalid_argument& e) {
    throw GraphError(where, e.what());
  }
}

PrimitiveSet parse_label(const std::string& label, const std::string& where) {
  if (label.size() < 2 || label.front() != '{' || label.back() != '}')
    throw GraphError(where, "representative key must look like {1,2,...}");
  std::vector<std::uint64_t> elems;
  std::istringstream is(label.substr(1, label.size() - 2));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw GraphError(where, "bad element '" + tok + "' in key");
    elems.push_back(std::stoull(tok));
  }
  try {
    PrimitiveSet p(std::move(elems));
    if (p.to_string() != label) throw GraphError(where, "key is not in canonical form " + p.to_string());
    return p;
  } catch (const std::invalid_argument& e) {
    throw GraphError(where, e.what());
  }
}

const json& field(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) throw GraphError(std::string("/") + name, "missing field");
  return *it;
}

std::uint64_t read_positive(const json& root, const char* name) {
  const json& v = field(root, name);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw GraphError(std::string("/") + name, "expected a positive integer");
  return v.get<std::uint64_t>();
}

}  // namespace

std::string export_dot(const CompatGraph& g) {
  std::ostringstream os;
  os << "graph \"G(" << g.m() << ',' << g.n() << ")\" {\n";
  for (const auto& v : g.vertices()) os << "  " << quoted(v) << ";\n";
  for (const auto& [p, q] : g.edges()) os << "  " << quoted(p) << " -- " << quoted(q) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const CompatGraph& g) {
  ordered_json root;
  root["format"] = kGraphFormat;
  root["m"] = g.m();
  root["n"] = g.n();
  root["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) root["vertices"].push_back(to_array(v));
  root["edges"] = ordered_json::array();
  for (const auto& [p, q] : g.edges()) root["edges"].push_back(ordered_json::array({to_array(p), to_array(q)}));
  root["representatives"] = ordered_json::object();
  for (const auto& [p, r] : g.representatives())
    root["representatives"][p.to_string()] = std::vector<std::uint64_t>(r.elements().begin(), r.elements().end());
  return root.dump(2) + "\n";
}

CompatGraph import_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError("/", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw GraphError("/", "expected an object");
  const json& format = field(root, "format");
  if (!format.is_string() || format.get<std::string>() != kGraphFormat)
    throw GraphError("/format", "expected \"" + std::string(kGraphFormat) + "\"");
  const std::uint64_t m = read_positive(root, "m");
  const std::uint64_t n = read_positive(root, "n");
  if (n > m) throw GraphError("/n", "n exceeds m");

  const json& jv = field(root, "vertices");
  if (!jv.is_array()) throw GraphError("/vertices", "expected an array");
  std::set<PrimitiveSet> vertices;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    if (!vertices.insert(read_primitive(jv[i], where)).second) throw GraphError(where, "duplicate vertex");
  }

  const json& je = field(root, "edges");
  if (!je.is_array()) throw GraphError("/edges", "expected an array");
  std::set<CompatGraph::Edge> edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    if (!je[i].is_array() || je[i].size() != 2) throw GraphError(where, "expected a pair of vertices");
    auto p = read_primitive(je[i][0], where + "/0");
    auto q = read_primitive(je[i][1], where + "/1");
    if (!vertices.count(p)) throw GraphError(where + "/0", p.to_string() + " is not a vertex");
    if (!vertices.count(q)) throw GraphError(where + "/1", q.to_string() + " is not a vertex");
    if (q < p) std::swap(p, q);
    if (!edges.emplace(std::move(p), std::move(q)).second) throw GraphError(where, "duplicate edge");
  }

  const json& jr = field(root, "representatives");
  if (!jr.is_object()) throw GraphError("/representatives", "expected an object");
  std::map<PrimitiveSet, ResidueSet> reps;
  for (const auto& [key, value] : jr.items()) {
    const std::string where = "/representatives/" + key;
    auto p = parse_label(key, where);
    try {
      reps.emplace(std::move(p), ResidueSet(m, read_uints(value, where)));
    } catch (const std::invalid_argument& e) {
      throw GraphError(where, e.what());
    }
  }

  CompatGraph g(m, n, std::move(vertices), std::move(edges), std::move(reps));
  if (auto bad = verify_edges(g); !bad.empty()) throw GraphError("/edges", bad);
  return g;
}

}  // namespace fh
