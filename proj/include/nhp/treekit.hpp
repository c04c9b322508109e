#ifndef NHP_TREEKIT_HPP
#define NHP_TREEKIT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nhp/graph.hpp"

namespace nhp {
namespace treekit {

// All routines run an iterative post-order over an explicit stack; inputs up
// to path-like trees of 10^6 vertices are fine. Forest inputs are accepted
// where noted; a cycle raises InvalidInputError.

struct MatchingCover {
    std::vector<Edge> matching;  // maximum matching, nu(T) edges
    std::vector<int> cover;      // minimum vertex cover, tau(T) vertices
};
MatchingCover tree_matching_cover(const Graph& forest);

std::vector<int> tree_domination(const Graph& forest);  // minimum dominating set
std::vector<int> tree_alpha(const Graph& forest);       // maximum independent set
std::vector<int> tree_alpha2(const Graph& forest);      // maximum 2-independent set

// Vertex sequence of a longest (diameter) path; input must be connected.
std::vector<int> tree_longest_path(const Graph& tree);

// Maximum induced matching: no edge of the tree joins two matching edges.
std::vector<Edge> tree_induced_matching(const Graph& forest);

// Pair (x, y) with N(x) u N(y) = V, or nullopt. Needs n >= 2.
std::optional<std::pair<int, int>> total_dom_pair(const Graph& tree);

// For a co-tree G (complement(G) is a tree): two neighborhood-independent
// edges of G when alpha_n(G) > 1, else nullopt.
std::optional<std::pair<Edge, Edge>> cotree_ni_pair(const Graph& cotree);

}  // namespace treekit
}  // namespace nhp

#endif
