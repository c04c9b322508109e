#ifndef NHP_HARDNESS_HPP
#define NHP_HARDNESS_HPP

#include <vector>

#include "nhp/graph.hpp"

namespace nhp {

// Co-bipartite graph with its clique bipartition.
struct CoBipartite {
    Graph g;
    std::vector<int> x;
    std::vector<int> y;
};

bool cobipartite_valid(const CoBipartite& cb);

// X = vertex copies 0..n-1, Y = vertices n..2n-1 then edges 2n..2n+m-1; F
// joins each copy to its vertex and to the incident edges. Guarantees
// alpha_n(result) = alpha(H).
CoBipartite reduce_alpha_to_an(const Graph& h);

// X = V(H) as 0..n-1, Y = E(H) as n..n+m-1, F = incidence. Guarantees
// tau(H) <= pn(result) <= tau(H) + 1. Requires at least one edge.
CoBipartite reduce_vc_to_pn(const Graph& h);

}  // namespace nhp

#endif
