#ifndef NHP_GRAPH_HPP
#define NHP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nhp/error.hpp"

namespace nhp {

// Edge with normalized endpoints u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; all operations below return new graphs.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

Graph complement(const Graph& g);

// Induced subgraph together with the map from new vertex ids back to the
// ids they carry in the parent graph.
struct Induced {
    Graph g;
    std::vector<int> to_parent;
};
Induced induced(const Graph& g, const std::vector<int>& verts);

Graph join_all(const std::vector<Graph>& parts);
Graph disjoint_union_all(const std::vector<Graph>& parts);

std::vector<std::vector<int>> components(const Graph& g);
std::vector<std::vector<int>> anticomponents(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);    // connected and acyclic
bool is_forest(const Graph& g);

// Text format: `c` comment lines, one `p <n> <m>` header, `e <u> <v>` lines.
// write_graph_text emits the canonical form (sorted edges); reading it back
// is bit-exact.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g,
                      const std::vector<std::string>& comments = {});
Graph read_graph_file(const std::string& path);

}  // namespace nhp

#endif
