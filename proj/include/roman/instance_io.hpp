#pragma once

#include <string>
#include <string_view>

#include "roman/graph.hpp"
#include "roman/rdf.hpp"

namespace roman {

// CBG text format:
//   - lines starting with '#' are comments and ignored
//   - first significant line: "m n"
//   - then exactly n lines "lo hi"; "0 0" denotes an isolated Y vertex
//   - trailing newline optional
ConvexBipartiteGraph parse_cbg(std::string_view text);
std::string serialize_cbg(const ConvexBipartiteGraph& g);

// RDF text format (sentinels never serialized):
//   line 1: "X: d1 d2 ... dm"
//   line 2: "Y: d1 d2 ... dn"
// Each digit in {0,1,2}. The parsed assignment gets sentinel slots labeled 1.
RomanAssignment parse_rdf(std::string_view text, int m, int n);
std::string serialize_rdf(const RomanAssignment& a);

}  // namespace roman
