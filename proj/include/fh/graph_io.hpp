// Text serializations of compatibility graphs.
//
// DOT: one node per vertex labeled "{1,2,3}", undirected edges, loops as
// self-edges, everything in sorted order so output is byte-stable.
//
// JSON ("format": "compatgraph/1"):
//   {"format": "compatgraph/1", "m": 6, "n": 2,
//    "vertices": [[1,2],[1,6]],
//    "edges": [[[1,2],[1,2]], [[1,2],[1,6]]],
//    "representatives": {"{1,2}": [0,3], "{1,6}": [0,1]}}
// Field order is fixed and all lists are sorted.

#pragma once

#include "fh/graphs.hpp"

#include <string>
#include <string_view>

namespace fh {

inline constexpr std::string_view kGraphFormat = "compatgraph/1";

std::string export_dot(const CompatGraph& g);
std::string export_json(const CompatGraph& g);

/// Inverse of export_json. Schema problems and invariant violations throw
/// GraphError whose where() is a JSON pointer or the offending vertex/edge.
/// Edges are re-checked with the exact oracle.
CompatGraph import_json(std::string_view text);

}  // namespace fh
