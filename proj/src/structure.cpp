#include "nhp/structure.hpp"

#include <algorithm>

namespace nhp {

namespace {

bool all_children_leaves(const MDTree& t, int h) {
    for (int c : t.nodes[h].children)
        if (!t.is_leaf(c)) return false;
    return true;
}

// child represents K2 (S over two leaves) or 2K1 (P over two leaves)
bool represents_k2_or_2k1(const MDTree& t, int c, bool& two_k1) {
    const MDNode& nd = t.nodes[c];
    if (nd.size != 2 || nd.children.size() != 2) return false;
    if (!t.is_leaf(nd.children[0]) || !t.is_leaf(nd.children[1])) return false;
    if (nd.kind == MDNode::Kind::P) {
        two_k1 = true;
        return true;
    }
    if (nd.kind == MDNode::Kind::S) {
        two_k1 = false;
        return true;
    }
    return false;
}

// Walks a path graph; returns vertices end to end, or empty if not a path.
std::vector<int> path_order(const Graph& g) {
    std::vector<int> deg1;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) > 2) return {};
        if (g.degree(v) == 1) deg1.push_back(v);
    }
    if (g.n == 1) return {0};
    if (deg1.size() != 2 || g.m != g.n - 1) return {};
    std::vector<int> order{std::min(deg1[0], deg1[1])};
    int prev = -1;
    while (static_cast<int>(order.size()) < g.n) {
        int cur = order.back(), nxt = -1;
        for (int w : g.adj[cur])
            if (w != prev) nxt = w;
        if (nxt < 0) return {};
        prev = cur;
        order.push_back(nxt);
    }
    return order;
}

// Cycle order starting at vertex 0, stepping to its smaller neighbor.
std::vector<int> cycle_order(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return {};
    if (g.m != g.n || !is_connected(g)) return {};
    std::vector<int> order{0, std::min(g.adj[0][0], g.adj[0][1])};
    while (static_cast<int>(order.size()) < g.n) {
        int cur = order.back(), prev = order[order.size() - 2];
        order.push_back(g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0]);
    }
    return order;
}

struct SpiderShape {
    std::vector<int> ends, body;
    std::optional<int> head;
};

// Degree-count starfish detection: ends are the degree-1 vertices, the body
// their matched neighbors, an optional head adjacent to the whole body. The
// degree accounting forces the body to be a clique without scanning it.
std::optional<SpiderShape> detect_starfish(const Graph& q) {
    int k = q.n;
    bool head = k % 2;
    int t = k / 2;
    if (t < 2) return std::nullopt;
    long long expect = static_cast<long long>(t) * (t - 1) / 2 + t +
                       (head ? t : 0);
    if (q.m != expect) return std::nullopt;
    SpiderShape s;
    for (int v = 0; v < k; ++v)
        if (q.degree(v) == 1) s.ends.push_back(v);
    if (static_cast<int>(s.ends.size()) != t) return std::nullopt;
    std::vector<char> is_body(k, 0);
    for (int e : s.ends) {
        int c = q.adj[e][0];
        if (is_body[c]) return std::nullopt;  // two ends on one body vertex
        is_body[c] = 1;
        s.body.push_back(c);
    }
    int body_deg = t - 1 + 1 + (head ? 1 : 0);
    for (int c : s.body)
        if (q.degree(c) != body_deg) return std::nullopt;
    if (head) {
        int r = -1;
        std::vector<char> is_end(k, 0);
        for (int e : s.ends) is_end[e] = 1;
        for (int v = 0; v < k; ++v)
            if (!is_end[v] && !is_body[v]) r = v;
        if (r < 0 || q.degree(r) != t) return std::nullopt;
        for (int w : q.adj[r])
            if (!is_body[w]) return std::nullopt;
        s.head = r;
    }
    return s;
}

std::optional<SpiderShape> detect_urchin(const Graph& q) {
    int k = q.n;
    bool head = k % 2;
    int t = k / 2;
    if (t < 2) return std::nullopt;
    long long expect = static_cast<long long>(t) * (t - 1) / 2 +
                       static_cast<long long>(t) * (t - 1) + (head ? t : 0);
    if (q.m != expect) return std::nullopt;
    auto s = detect_starfish(complement(q));
    if (!s) return std::nullopt;
    // complementing swaps the sides: the urchin's clique body shows up as
    // the degree-1 ends of the complement starfish
    std::swap(s->ends, s->body);
    return s;
}

NodeClass reject(const std::string& why) {
    NodeClass nc;
    nc.tag = NodeTag::Other;
    nc.reject_reason = why;
    return nc;
}

}  // namespace

NodeClass classify_p4tidy_node(const MDTree& t, int h) {
    const MDNode& nd = t.nodes[h];
    if (nd.kind != MDNode::Kind::N)
        throw InvalidInputError("classify_p4tidy_node: not an N-node");
    const Graph& q = nd.quotient;

    if (q.n == 5) {
        if (q.m == 5) {
            auto ord = cycle_order(q);
            if (!ord.empty()) {
                if (!all_children_leaves(t, h))
                    return reject("C5 quotient with non-leaf child");
                NodeClass nc;
                nc.tag = NodeTag::C5;
                nc.order = ord;
                return nc;
            }
        }
        if (q.m == 4) {
            auto ord = path_order(q);
            if (!ord.empty()) {
                if (!all_children_leaves(t, h))
                    return reject("P5 quotient with non-leaf child");
                NodeClass nc;
                nc.tag = NodeTag::P5;
                nc.order = ord;
                return nc;
            }
        }
        if (q.m == 6) {
            auto ord = path_order(complement(q));
            if (!ord.empty()) {
                if (!all_children_leaves(t, h))
                    return reject("P5bar quotient with non-leaf child");
                NodeClass nc;
                nc.tag = NodeTag::P5bar;
                nc.order = ord;
                return nc;
            }
        }
    }

    bool urchin = false;
    auto shape = detect_starfish(q);
    if (!shape) {
        shape = detect_urchin(q);
        urchin = shape.has_value();
    }
    if (!shape) return reject("quotient is none of C5/P5/P5bar/starfish/urchin");

    SpiderPartition sp;
    sp.urchin = urchin;
    sp.ends = shape->ends;
    sp.body = shape->body;
    sp.head = shape->head;
    for (int i = 0; i < q.n; ++i) {
        if (sp.head && *sp.head == i) continue;  // head child is unconstrained
        int c = nd.children[i];
        if (t.is_leaf(c)) continue;
        bool two_k1 = false;
        if (!represents_k2_or_2k1(t, c, two_k1))
            return reject("spider child is neither leaf, head, K2 nor 2K1");
        if (sp.fat) return reject("two fat children in spider");
        bool on_body =
            std::find(sp.body.begin(), sp.body.end(), i) != sp.body.end();
        sp.fat = SpiderPartition::Fat{i, on_body, two_k1};
    }
    NodeClass nc;
    nc.tag = NodeTag::Spider;
    nc.spider = std::move(sp);
    return nc;
}

NodeClass classify_treecograph_node(const MDTree& t, int h) {
    const MDNode& nd = t.nodes[h];
    if (nd.kind != MDNode::Kind::N)
        throw InvalidInputError("classify_treecograph_node: not an N-node");
    const Graph& q = nd.quotient;
    int k = q.n;

    auto edgeless_module = [&](int c) {
        const MDNode& ch = t.nodes[c];
        return ch.kind == MDNode::Kind::P && all_children_leaves(t, c);
    };
    auto complete_module = [&](int c) {
        const MDNode& ch = t.nodes[c];
        return ch.kind == MDNode::Kind::S && all_children_leaves(t, c);
    };

    if (is_tree(q)) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int c = nd.children[i];
            if (t.is_leaf(c)) continue;
            if (q.degree(i) != 1 || !edgeless_module(c)) ok = false;
        }
        if (ok) {
            NodeClass nc;
            nc.tag = NodeTag::TreeLike;
            return nc;
        }
    }
    long long cotree_m = static_cast<long long>(k) * (k - 1) / 2 - (k - 1);
    if (q.m == cotree_m && is_tree(complement(q))) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int c = nd.children[i];
            if (t.is_leaf(c)) continue;
            if (q.degree(i) != k - 2 || !complete_module(c)) ok = false;
        }
        if (ok) {
            NodeClass nc;
            nc.tag = NodeTag::CoTreeLike;
            return nc;
        }
    }
    return reject("quotient is neither a tree nor a co-tree with valid children");
}

std::vector<NodeClass> classify_all_p4tidy(const MDTree& t) {
    std::vector<NodeClass> out(t.nodes.size());
    for (size_t h = 0; h < t.nodes.size(); ++h)
        if (t.nodes[h].kind == MDNode::Kind::N)
            out[h] = classify_p4tidy_node(t, static_cast<int>(h));
    return out;
}

std::vector<NodeClass> classify_all_treecograph(const MDTree& t) {
    std::vector<NodeClass> out(t.nodes.size());
    for (size_t h = 0; h < t.nodes.size(); ++h)
        if (t.nodes[h].kind == MDNode::Kind::N)
            out[h] = classify_treecograph_node(t, static_cast<int>(h));
    return out;
}

bool is_p4_tidy(const MDTree& t) {
    for (size_t h = 0; h < t.nodes.size(); ++h)
        if (t.nodes[h].kind == MDNode::Kind::N &&
            classify_p4tidy_node(t, static_cast<int>(h)).tag == NodeTag::Other)
            return false;
    return true;
}

bool is_tree_cograph(const MDTree& t) {
    for (size_t h = 0; h < t.nodes.size(); ++h)
        if (t.nodes[h].kind == MDNode::Kind::N &&
            classify_treecograph_node(t, static_cast<int>(h)).tag == NodeTag::Other)
            return false;
    return true;
}

}  // namespace nhp
