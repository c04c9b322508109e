#include "nhp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace nhp {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int t = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidInputError("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInputError("edge endpoint out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw InvalidInputError("loop edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
    }
    g.m /= 2;
    return g;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    c.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        c.adj[u].reserve(g.n - 1 - g.adj[u].size());
        size_t i = 0;
        for (int v = 0; v < g.n; ++v) {
            while (i < g.adj[u].size() && g.adj[u][i] < v) ++i;
            bool adjacent = i < g.adj[u].size() && g.adj[u][i] == v;
            if (v != u && !adjacent) c.adj[u].push_back(v);
        }
        c.m += static_cast<long long>(c.adj[u].size());
    }
    c.m /= 2;
    return c;
}

Induced induced(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n, -1);
    Induced out;
    out.to_parent = verts;
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                        out.to_parent.end());
    for (size_t i = 0; i < out.to_parent.size(); ++i) {
        int v = out.to_parent[i];
        if (v < 0 || v >= g.n) throw InvalidInputError("induced: vertex out of range");
        pos[v] = static_cast<int>(i);
    }
    Graph& s = out.g;
    s.n = static_cast<int>(out.to_parent.size());
    s.adj.assign(s.n, {});
    for (int i = 0; i < s.n; ++i) {
        for (int w : g.adj[out.to_parent[i]])
            if (pos[w] >= 0) s.adj[i].push_back(pos[w]);
        s.m += static_cast<long long>(s.adj[i].size());
    }
    s.m /= 2;
    return out;
}

Graph join_all(const std::vector<Graph>& parts) {
    if (parts.empty()) throw InvalidInputError("join_all: empty part sequence");
    Graph g = disjoint_union_all(parts);
    std::vector<int> offset(parts.size() + 1, 0);
    for (size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].n;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int u = offset[i]; u < offset[i + 1]; ++u) {
            for (int v = 0; v < offset[i]; ++v) g.adj[u].push_back(v);
            for (int v = offset[i + 1]; v < g.n; ++v) g.adj[u].push_back(v);
            std::sort(g.adj[u].begin(), g.adj[u].end());
        }
    }
    g.m = 0;
    for (auto& a : g.adj) g.m += static_cast<long long>(a.size());
    g.m /= 2;
    return g;
}

Graph disjoint_union_all(const std::vector<Graph>& parts) {
    if (parts.empty()) throw InvalidInputError("disjoint_union_all: empty part sequence");
    Graph g;
    for (const Graph& p : parts) g.n += p.n;
    g.adj.assign(g.n, {});
    int off = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.n; ++u) {
            g.adj[off + u].reserve(p.adj[u].size());
            for (int v : p.adj[u]) g.adj[off + u].push_back(off + v);
        }
        g.m += p.m;
        off += p.n;
    }
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<int> seen(g.n, 0), stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

// BFS over the complement without materializing it: keep the not-yet-visited
// vertices in a list and peel off the non-neighbors of each popped vertex.
std::vector<std::vector<int>> anticomponents(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<int> remaining(g.n);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<char> mark(g.n, 0);
    std::vector<int> queue;
    while (!remaining.empty()) {
        comps.emplace_back();
        auto& comp = comps.back();
        queue.clear();
        queue.push_back(remaining.back());
        remaining.pop_back();
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            comp.push_back(v);
            for (int w : g.adj[v]) mark[w] = 1;
            std::vector<int> keep;
            keep.reserve(remaining.size());
            for (int w : remaining) {
                if (mark[w])
                    keep.push_back(w);  // neighbor in g: not adjacent in complement
                else
                    queue.push_back(w);
            }
            remaining.swap(keep);
            for (int w : g.adj[v]) mark[w] = 0;
        }
        std::sort(comp.begin(), comp.end());
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return static_cast<int>(components(g)[0].size()) == g.n;
}

bool is_forest(const Graph& g) {
    return g.m == g.n - static_cast<long long>(components(g).size());
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.m == g.n - 1 && is_connected(g);
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed p line");
        } else if (tag == "e") {
            int u, v;
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": e before p");
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": malformed e line");
            edges.emplace_back(u, v);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing p line");
    Graph g;
    try {
        g = from_edge_list(n, edges);
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
    if (g.m != m)
        throw ParseError("header claims " + std::to_string(m) + " edges, found " +
                         std::to_string(g.m));
    return g;
}

void write_graph_text(std::ostream& out, const Graph& g,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p " << g.n << " " << g.m << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << "e " << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph_text(in);
}

}  // namespace nhp
