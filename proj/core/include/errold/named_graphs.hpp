#pragma once

#include "errold/graph.hpp"

namespace errold::named {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
// Incidence graph of the Fano plane: cubic, girth 6, 14 vertices.
Graph heawood();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace errold::named
