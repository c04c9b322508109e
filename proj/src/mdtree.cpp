#include "nhp/mdtree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nhp {

namespace {

// Smallest module of g containing seed; closure by adding distinguishers.
std::vector<int> smallest_module(const Graph& g, std::vector<int> seed) {
    std::vector<char> in(g.n, 0);
    std::vector<int> cnt(g.n, 0);
    std::vector<int> members;
    auto add = [&](int v) {
        in[v] = 1;
        members.push_back(v);
        for (int w : g.adj[v]) ++cnt[w];
    };
    for (int v : seed) add(v);
    bool changed = true;
    while (changed) {
        changed = false;
        int sz = static_cast<int>(members.size());
        if (sz == g.n) break;
        for (int z = 0; z < g.n; ++z) {
            if (in[z]) continue;
            if (cnt[z] > 0 && cnt[z] < sz) {
                add(z);
                changed = true;
                break;
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Partition refinement: split classes by outside splitters until every class
// is a module. Started from {{pivot}, rest}, the fixpoint consists of {pivot}
// and the maximal modules not containing pivot.
std::vector<std::vector<int>> refine_from_pivot(const Graph& g, int pivot) {
    std::vector<int> cls(g.n, 0);
    cls[pivot] = 1;
    int nclasses = 2;
    std::vector<char> nbr(g.n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int z = 0; z < g.n; ++z) {
            for (int w : g.adj[z]) nbr[w] = 1;
            // split every class not containing z by N(z)
            std::map<int, std::pair<int, int>> seen;  // class -> (has nbr, has non-nbr)
            for (int v = 0; v < g.n; ++v) {
                if (v == z) continue;
                auto& s = seen[cls[v]];
                (nbr[v] ? s.first : s.second) = 1;
            }
            std::map<int, int> newcls;
            for (auto& [c, flags] : seen)
                if (flags.first && flags.second && c != cls[z]) newcls[c] = nclasses++;
            if (!newcls.empty()) {
                changed = true;
                for (int v = 0; v < g.n; ++v) {
                    auto it = newcls.find(cls[v]);
                    if (it != newcls.end() && nbr[v]) cls[v] = it->second;
                }
            }
            for (int w : g.adj[z]) nbr[w] = 0;
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < g.n; ++v) groups[cls[v]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : groups) out.push_back(std::move(vs));
    return out;
}

// False-twin classes (identical open neighborhoods).
std::vector<std::vector<int>> false_twin_classes(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.adj[a] < g.adj[b]; });
    std::vector<std::vector<int>> classes;
    for (int v : order) {
        if (!classes.empty() && g.adj[classes.back()[0]] == g.adj[v])
            classes.back().push_back(v);
        else
            classes.push_back({v});
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    return classes;
}

// True-twin classes (identical closed neighborhoods).
std::vector<std::vector<int>> true_twin_classes(const Graph& g) {
    std::vector<std::vector<int>> closed(g.n);
    for (int v = 0; v < g.n; ++v) {
        closed[v] = g.adj[v];
        closed[v].insert(
            std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
    }
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return closed[a] < closed[b]; });
    std::vector<std::vector<int>> classes;
    for (int v : order) {
        if (!classes.empty() && closed[classes.back()[0]] == closed[v])
            classes.back().push_back(v);
        else
            classes.push_back({v});
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    return classes;
}

}  // namespace

std::vector<std::vector<int>> maximal_strong_modules(const Graph& g) {
    // g is connected and co-connected with >= 4 vertices here
    if (is_tree(g)) return false_twin_classes(g);
    long long cotree_m = static_cast<long long>(g.n) * (g.n - 1) / 2 - (g.n - 1);
    if (g.m == cotree_m && is_tree(complement(g))) return true_twin_classes(g);

    int pivot = 0;
    auto classes = refine_from_pivot(g, pivot);
    // assemble the maximal module containing the pivot
    std::vector<int> mv = {pivot};
    std::vector<std::vector<int>> out;
    for (auto& c : classes) {
        if (c.size() == 1 && c[0] == pivot) continue;
        auto sm = smallest_module(g, {pivot, c[0]});
        if (static_cast<int>(sm.size()) < g.n)
            mv.insert(mv.end(), c.begin(), c.end());
        else
            out.push_back(std::move(c));
    }
    std::sort(mv.begin(), mv.end());
    out.push_back(std::move(mv));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

namespace {

struct WorkItem {
    std::vector<int> verts;  // original ids, sorted
    int node_id;
};

}  // namespace

MDTree decompose(std::shared_ptr<const Graph> gp) {
    const Graph& g = *gp;
    MDTree t;
    t.graph = gp;
    if (g.n == 0) throw InvalidInputError("decompose: empty graph");

    std::vector<WorkItem> work;
    t.nodes.emplace_back();
    t.root = 0;
    {
        std::vector<int> all(g.n);
        std::iota(all.begin(), all.end(), 0);
        work.push_back({std::move(all), 0});
    }
    while (!work.empty()) {
        WorkItem item = std::move(work.back());
        work.pop_back();
        int id = item.node_id;
        if (item.verts.size() == 1) {
            t.nodes[id].kind = MDNode::Kind::Leaf;
            t.nodes[id].vertex = item.verts[0];
            continue;
        }
        Induced local = induced(g, item.verts);
        std::vector<std::vector<int>> parts;  // local ids
        MDNode::Kind kind;
        auto comps = components(local.g);
        if (comps.size() > 1) {
            kind = MDNode::Kind::P;
            parts = std::move(comps);
        } else {
            auto anti = anticomponents(local.g);
            if (anti.size() > 1) {
                kind = MDNode::Kind::S;
                parts = std::move(anti);
            } else {
                kind = MDNode::Kind::N;
                parts = maximal_strong_modules(local.g);
            }
        }
        t.nodes[id].kind = kind;
        if (kind == MDNode::Kind::N) {
            // quotient on the parts, via representatives
            std::vector<std::pair<int, int>> qe;
            std::vector<int> part_of(local.g.n, -1);
            for (size_t i = 0; i < parts.size(); ++i)
                for (int v : parts[i]) part_of[v] = static_cast<int>(i);
            for (size_t i = 0; i < parts.size(); ++i)
                for (int w : local.g.adj[parts[i][0]]) {
                    int j = part_of[w];
                    if (static_cast<int>(i) < j) qe.emplace_back(i, j);
                }
            t.nodes[id].quotient =
                from_edge_list(static_cast<int>(parts.size()), qe);
        }
        for (auto& part : parts) {
            int child = static_cast<int>(t.nodes.size());
            t.nodes.emplace_back();
            t.nodes[child].parent = id;
            t.nodes[id].children.push_back(child);
            std::vector<int> orig;
            orig.reserve(part.size());
            for (int v : part) orig.push_back(local.to_parent[v]);
            std::sort(orig.begin(), orig.end());
            work.push_back({std::move(orig), child});
        }
    }

    // aggregates bottom-up, then canonical child order (children of a part
    // were created with sorted vertex sets, so min_vertex is part[0])
    for (int h : t.postorder()) {
        MDNode& nd = t.nodes[h];
        if (nd.kind == MDNode::Kind::Leaf) {
            nd.size = 1;
            nd.min_vertex = nd.vertex;
            continue;
        }
        nd.size = 0;
        nd.min_vertex = g.n;
        for (int c : nd.children) {
            nd.size += t.nodes[c].size;
            nd.min_vertex = std::min(nd.min_vertex, t.nodes[c].min_vertex);
        }
        std::vector<int> perm(nd.children.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            return t.nodes[nd.children[a]].min_vertex <
                   t.nodes[nd.children[b]].min_vertex;
        });
        std::vector<int> sorted_children(nd.children.size());
        for (size_t i = 0; i < perm.size(); ++i)
            sorted_children[i] = nd.children[perm[i]];
        if (nd.kind == MDNode::Kind::N) {
            std::vector<int> pos(perm.size());
            for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
            std::vector<std::pair<int, int>> qe;
            for (int u = 0; u < nd.quotient.n; ++u)
                for (int v : nd.quotient.adj[u])
                    if (u < v) qe.emplace_back(pos[u], pos[v]);
            nd.quotient = from_edge_list(nd.quotient.n, qe);
        }
        nd.children = std::move(sorted_children);
    }
    return t;
}

MDTree decompose(const Graph& g) {
    return decompose(std::make_shared<const Graph>(g));
}

std::vector<int> MDTree::postorder() const {
    std::vector<int> order, stack = {root};
    order.reserve(nodes.size());
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        order.push_back(h);
        for (int c : nodes[h].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<int> MDTree::module_vertices(int h) const {
    std::vector<int> out, stack = {h};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (nodes[x].kind == MDNode::Kind::Leaf)
            out.push_back(nodes[x].vertex);
        else
            for (int c : nodes[x].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph quotient_graph(const MDTree& t, int h) {
    const MDNode& nd = t.nodes[h];
    if (nd.kind == MDNode::Kind::Leaf)
        throw InvalidInputError("quotient_graph: leaf has no quotient");
    int k = static_cast<int>(nd.children.size());
    if (nd.kind == MDNode::Kind::N) return nd.quotient;
    std::vector<std::pair<int, int>> e;
    if (nd.kind == MDNode::Kind::S)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return from_edge_list(k, e);
}

Induced materialize(const MDTree& t, int h) {
    return induced(t.g(), t.module_vertices(h));
}

ValidationReport validate(const MDTree& t, const Graph& g) {
    ValidationReport rep;
    if (t.root < 0 || t.nodes.empty()) {
        rep.fail(-1, "empty tree");
        return rep;
    }
    // leaf count and coverage
    std::vector<int> leaf_of(g.n, -1);
    int leaves = 0;
    for (size_t h = 0; h < t.nodes.size(); ++h) {
        const MDNode& nd = t.nodes[h];
        if (nd.kind == MDNode::Kind::Leaf) {
            ++leaves;
            if (nd.vertex < 0 || nd.vertex >= g.n || leaf_of[nd.vertex] >= 0)
                rep.fail(static_cast<int>(h), "leaf-vertex");
            else
                leaf_of[nd.vertex] = static_cast<int>(h);
            if (!nd.children.empty()) rep.fail(static_cast<int>(h), "leaf-children");
        } else if (nd.children.size() < 2) {
            rep.fail(static_cast<int>(h), "internal>=2-children");
        }
    }
    if (leaves != g.n) rep.fail(t.root, "leaf-count");
    if (static_cast<int>(t.nodes.size()) >= std::max(2, 2 * g.n))
        rep.fail(t.root, "node-count<2n");
    long long sum_npi = 0;
    for (const MDNode& nd : t.nodes)
        if (nd.kind == MDNode::Kind::N) sum_npi += nd.children.size();
    if (sum_npi > 2LL * g.n) rep.fail(t.root, "sum-quotient-size<=2n");
    if (!rep.ok) return rep;

    for (int h : t.postorder()) {
        const MDNode& nd = t.nodes[h];
        auto module = t.module_vertices(h);
        // module property against the whole graph
        {
            std::vector<char> in(g.n, 0);
            for (int v : module) in[v] = 1;
            std::vector<int> cnt(g.n, 0);
            for (int v : module)
                for (int w : g.adj[v])
                    if (!in[w]) ++cnt[w];
            for (int z = 0; z < g.n; ++z)
                if (!in[z] && cnt[z] != 0 &&
                    cnt[z] != static_cast<int>(module.size()))
                    rep.fail(h, "module");
        }
        if (nd.kind == MDNode::Kind::Leaf) continue;
        // children partition M(h)
        {
            std::vector<int> all;
            for (int c : nd.children) {
                auto cm = t.module_vertices(c);
                all.insert(all.end(), cm.begin(), cm.end());
            }
            std::sort(all.begin(), all.end());
            if (all != module) rep.fail(h, "children-partition");
        }
        Induced sub = materialize(t, h);
        auto comps = components(sub.g);
        auto anti = anticomponents(sub.g);
        auto parts_match = [&](const std::vector<std::vector<int>>& parts) {
            if (parts.size() != nd.children.size()) return false;
            std::vector<std::vector<int>> want;
            for (int c : nd.children) want.push_back(t.module_vertices(c));
            std::vector<std::vector<int>> got;
            for (const auto& p : parts) {
                std::vector<int> orig;
                for (int v : p) orig.push_back(sub.to_parent[v]);
                std::sort(orig.begin(), orig.end());
                got.push_back(std::move(orig));
            }
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            return want == got;
        };
        switch (nd.kind) {
            case MDNode::Kind::P:
                if (comps.size() < 2 || !parts_match(comps))
                    rep.fail(h, "P-children=components");
                break;
            case MDNode::Kind::S:
                if (anti.size() < 2 || !parts_match(anti))
                    rep.fail(h, "S-children=anticomponents");
                break;
            case MDNode::Kind::N: {
                if (comps.size() != 1 || anti.size() != 1) {
                    rep.fail(h, "N-connected-coconnected");
                    break;
                }
                // stored quotient must match representative adjacency
                const Graph& q = nd.quotient;
                int k = static_cast<int>(nd.children.size());
                if (q.n != k) {
                    rep.fail(h, "N-quotient-size");
                    break;
                }
                bool edges_ok = true;
                for (int i = 0; i < k && edges_ok; ++i)
                    for (int j = i + 1; j < k && edges_ok; ++j) {
                        bool adj = g.has_edge(t.nodes[nd.children[i]].min_vertex,
                                              t.nodes[nd.children[j]].min_vertex);
                        if (adj != q.has_edge(i, j)) edges_ok = false;
                    }
                if (!edges_ok) rep.fail(h, "N-quotient-edges");
                // exhaustive nontrivial-module search on the quotient
                bool prime = true;
                for (int i = 0; i < k && prime; ++i)
                    for (int j = i + 1; j < k && prime; ++j) {
                        auto sm = smallest_module(q, {i, j});
                        if (static_cast<int>(sm.size()) < k) prime = false;
                    }
                if (!prime) rep.fail(h, "N-quotient prime");
                break;
            }
            case MDNode::Kind::Leaf:
                break;
        }
    }
    return rep;
}

namespace {

void dump_rec(const MDTree& t, int h, int depth, std::ostringstream& out) {
    const MDNode& nd = t.nodes[h];
    for (int i = 0; i < depth; ++i) out << "  ";
    switch (nd.kind) {
        case MDNode::Kind::Leaf: out << "Leaf"; break;
        case MDNode::Kind::P: out << "P"; break;
        case MDNode::Kind::S: out << "S"; break;
        case MDNode::Kind::N: out << "N"; break;
    }
    out << " [";
    auto module = t.module_vertices(h);
    for (size_t i = 0; i < module.size(); ++i)
        out << (i ? " " : "") << module[i];
    out << "]";
    if (nd.kind == MDNode::Kind::N) {
        out << " (";
        bool first = true;
        for (int u = 0; u < nd.quotient.n; ++u)
            for (int v : nd.quotient.adj[u])
                if (u < v) {
                    if (!first) out << " ";
                    out << u << "-" << v;
                    first = false;
                }
        out << ")";
    }
    out << "\n";
    for (int c : nd.children) dump_rec(t, c, depth + 1, out);
}

}  // namespace

std::string dump(const MDTree& t) {
    std::ostringstream out;
    dump_rec(t, t.root, 0, out);
    return out.str();
}

}  // namespace nhp
