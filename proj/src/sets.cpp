#include "nhp/sets.hpp"

#include <algorithm>

namespace nhp {

std::string to_string(const MixedElem& e) {
    if (e.is_edge())
        return "e " + std::to_string(e.u) + " " + std::to_string(e.v);
    return "v " + std::to_string(e.u);
}

bool is_dominating(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> hit(g.n, 0);
    for (int v : verts) {
        if (v < 0 || v >= g.n) return false;
        hit[v] = 1;
        for (int w : g.adj[v]) hit[w] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_two_independent(const Graph& g, const std::vector<int>& verts) {
    // pairwise distance >= 3 <=> closed neighborhoods pairwise disjoint
    std::vector<char> stamped(g.n, 0);
    for (int v : verts) {
        if (v < 0 || v >= g.n) return false;
        if (stamped[v]) return false;
        for (int w : g.adj[v])
            if (stamped[w]) return false;
        stamped[v] = 1;
        for (int w : g.adj[v]) stamped[w] = 1;
    }
    return true;
}

bool is_neighborhood_cover(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in_r(g.n, 0), dominated(g.n, 0);
    for (int v : verts) {
        if (v < 0 || v >= g.n) return false;
        in_r[v] = 1;
        dominated[v] = 1;
        for (int w : g.adj[v]) dominated[w] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!dominated[v]) return false;
    // edge ab is covered iff some r in R has both a and b in N[r]
    for (int a = 0; a < g.n; ++a) {
        for (int b : g.adj[a]) {
            if (b < a) continue;
            int x = g.degree(a) <= g.degree(b) ? a : b;
            int y = x == a ? b : a;
            bool covered = (in_r[x] || in_r[y]);  // an endpoint in R covers its edge
            if (!covered)
                for (int r : g.adj[x]) {
                    if (in_r[r] && (r == y || g.has_edge(r, y))) {
                        covered = true;
                        break;
                    }
                }
            if (!covered) return false;
        }
    }
    return true;
}

bool is_neighborhood_independent(const Graph& g, const MixedSet& elems) {
    // element x lies in G[v] for v in containers(x); two elements are
    // dependent iff their container sets intersect
    std::vector<char> stamped(g.n, 0);
    std::vector<int> all;
    auto stamp = [&](int v) {
        if (stamped[v]) return false;
        stamped[v] = 1;
        all.push_back(v);
        return true;
    };
    bool ok = true;
    for (const MixedElem& e : elems) {
        if (e.u < 0 || e.v >= g.n) return false;
        if (!e.is_edge()) {
            if (!stamp(e.u)) ok = false;
            for (int w : g.adj[e.u])
                if (!stamp(w)) ok = false;
        } else {
            if (!g.has_edge(e.u, e.v)) return false;
            int x = g.degree(e.u) <= g.degree(e.v) ? e.u : e.v;
            int y = x == e.u ? e.v : e.u;
            if (!stamp(x)) ok = false;
            if (!stamp(y)) ok = false;
            for (int r : g.adj[x])
                if (r != y && g.has_edge(r, y) && !stamp(r)) ok = false;
        }
        if (!ok) break;
    }
    for (int v : all) stamped[v] = 0;
    return ok;
}

}  // namespace nhp
