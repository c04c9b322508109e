#ifndef NHP_SETS_HPP
#define NHP_SETS_HPP

#include <string>
#include <vector>

#include "nhp/graph.hpp"

namespace nhp {

// One element of a mixed vertex/edge set. A vertex is stored with u == v.
struct MixedElem {
    int u = 0;
    int v = 0;
    static MixedElem vertex(int x) { return {x, x}; }
    static MixedElem edge(int a, int b) {
        return a < b ? MixedElem{a, b} : MixedElem{b, a};
    }
    bool is_edge() const { return u != v; }
    friend bool operator==(const MixedElem&, const MixedElem&) = default;
    friend auto operator<=>(const MixedElem&, const MixedElem&) = default;
};

// Ordered collection of vertices and edges; order is emission order.
using MixedSet = std::vector<MixedElem>;

std::string to_string(const MixedElem& e);

// Definitional validity checks, linear-ish in the certificate footprint.
bool is_dominating(const Graph& g, const std::vector<int>& verts);
bool is_two_independent(const Graph& g, const std::vector<int>& verts);
bool is_neighborhood_cover(const Graph& g, const std::vector<int>& verts);
bool is_neighborhood_independent(const Graph& g, const MixedSet& elems);

}  // namespace nhp

#endif
