#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>

#include "ccmpc/graph.hpp"

namespace ccmpc {

struct LoadedGraph {
  Graph graph;
  IdTable ids;
};

// SNAP-style edge list: one "u v" pair per line, arbitrary whitespace,
// '#'-prefixed comment lines, blank lines ignored. Only ids that occur in some
// pair become vertices. Throws ParseError naming the 1-based line.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

// Writes canonical edges (u < v, lexicographic) using external ids.
// Isolated vertices are not representable in this format.
void write_edge_list(std::ostream& out, const Graph& g, const IdTable& ids);

// "external_id<TAB>representative" per vertex, sorted by external id.
void write_assignment_tsv(std::ostream& out, const ComponentAssignment& a,
                          const IdTable& ids);

// Parses the TSV above into external -> representative (external).
std::unordered_map<ExternalId, ExternalId> read_assignment_tsv(std::istream& in);

}  // namespace ccmpc
