#ifndef NHP_MDTREE_HPP
#define NHP_MDTREE_HPP

#include <memory>
#include <string>
#include <vector>

#include "nhp/graph.hpp"

namespace nhp {

struct MDNode {
    enum class Kind { Leaf, P, S, N };
    Kind kind = Kind::Leaf;
    int vertex = -1;            // Leaf only: the represented vertex
    int parent = -1;
    std::vector<int> children;  // sorted by smallest contained vertex
    int size = 1;               // n(h) = |M(h)|
    int min_vertex = -1;        // smallest vertex of M(h)
    Graph quotient;             // N only: pi(h), vertex i <-> children[i]
};

// Modular decomposition tree. Nodes are stored in a pool; traversals work on
// indices. Immutable after decompose() in normal use (tests mutate copies to
// exercise validate()).
struct MDTree {
    std::shared_ptr<const Graph> graph;
    std::vector<MDNode> nodes;
    int root = -1;

    const Graph& g() const { return *graph; }
    const MDNode& node(int h) const { return nodes[h]; }
    bool is_leaf(int h) const { return nodes[h].kind == MDNode::Kind::Leaf; }

    // children-before-parents order
    std::vector<int> postorder() const;
    // sorted original vertex ids of M(h)
    std::vector<int> module_vertices(int h) const;
};

MDTree decompose(const Graph& g);
MDTree decompose(std::shared_ptr<const Graph> g);

// pi(h) for internal nodes: edgeless for P, complete for S, stored for N.
Graph quotient_graph(const MDTree& t, int h);

// G[M(h)] with the vertex relabeling map.
Induced materialize(const MDTree& t, int h);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(int node, const std::string& rule) {
        ok = false;
        failures.push_back("node " + std::to_string(node) + ": " + rule);
    }
};

// Checks the definition of a modular decomposition tree against g: module
// property of every M(h), kind conditions, primality of N quotients, and the
// node-count and quotient-size bounds.
ValidationReport validate(const MDTree& t, const Graph& g);

// Indented text dump: "<kind> [vertices] (quotient edges for N)".
std::string dump(const MDTree& t);

// Maximal modules of a connected, co-connected graph not containing pivot,
// plus {pivot}; exposed for validate() and tests.
std::vector<std::vector<int>> maximal_strong_modules(const Graph& g);

}  // namespace nhp

#endif
