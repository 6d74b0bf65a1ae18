#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "errold/graph.hpp"
#include "errold/vertex_set.hpp"

namespace errold {

// Edge-list text: '#' comment lines, an optional leading "n <count>" line,
// then one "<u> <v>" line per edge (single space, decimal). Without a
// declaration n is one more than the largest endpoint.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Always writes the "n <count>" declaration, then edges in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Detector-set text: whitespace-separated vertex ids, '#' starts a comment
// running to end of line. Ids must lie in 0..n-1; repeats are rejected.
VertexSet parse_detector_set(std::istream& in, int n);
VertexSet parse_detector_set(std::string_view text, int n);
VertexSet read_detector_set_file(const std::string& path, int n);
void write_detector_set(std::ostream& out, const VertexSet& s);

}  // namespace errold
