#pragma once

#include "domlab/graph.hpp"

namespace domlab::families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
Graph hypercube(int dim);

}  // namespace domlab::families
