#include "nhp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

namespace nhp {
namespace oracle {

namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------- Bits ----

// Fixed-width dynamic bitset sized at construction.
struct Bits {
    std::vector<u64> w;
    explicit Bits(int nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= u64(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(u64(1) << (i & 63)); }
    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (u64 x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (u64 x : w) c += std::popcount(x);
        return c;
    }
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& andnot(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend bool operator==(const Bits&, const Bits&) = default;
    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            u64 x = w[i];
            while (x) {
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

// --------------------------------------------- maximum independent set ----

// Branch and bound with a greedy clique-cover bound; adjacency given as
// conflict masks. Returns the best mask found.
struct MisSolver {
    const std::vector<Bits>& adj;
    int n;
    Bits best;
    int best_size = 0;

    explicit MisSolver(const std::vector<Bits>& a)
        : adj(a), n(static_cast<int>(a.size())), best(n) {}

    int clique_cover_bound(const Bits& cand) const {
        std::vector<Bits> cliques;
        int bound = 0;
        cand.for_each([&](int v) {
            for (Bits& k : cliques) {
                Bits nonadj = k;
                nonadj.andnot(adj[v]);
                if (nonadj.empty()) {
                    k.set(v);
                    return;
                }
            }
            cliques.emplace_back(n);
            cliques.back().set(v);
            ++bound;
        });
        return bound;
    }

    void run(Bits cand, Bits cur, int cur_size) {
        if (cur_size > best_size) {
            best = cur;
            best_size = cur_size;
        }
        int c = cand.count();
        if (c == 0 || cur_size + c <= best_size) return;
        if (cur_size + clique_cover_bound(cand) <= best_size) return;
        // pivot on the candidate with most conflicts inside cand
        int pivot = -1, pdeg = -1;
        cand.for_each([&](int v) {
            Bits t = adj[v];
            t &= cand;
            int d = t.count();
            if (d > pdeg) {
                pdeg = d;
                pivot = v;
            }
        });
        Bits inc = cand;
        inc.andnot(adj[pivot]);
        inc.reset(pivot);
        Bits cur2 = cur;
        cur2.set(pivot);
        run(inc, cur2, cur_size + 1);
        Bits exc = cand;
        exc.reset(pivot);
        run(exc, cur, cur_size);
    }

    Bits solve() {
        Bits all(n);
        for (int i = 0; i < n; ++i) all.set(i);
        run(all, Bits(n), 0);
        return best;
    }
};

// ----------------------------------------------------- minimum cover ------

// Minimum number of candidate sets covering the whole universe. Branches on
// the uncovered element with fewest covering sets.
struct CoverSolver {
    std::vector<Bits> sets;      // element masks per candidate
    std::vector<u64> covers_by;  // per element: mask over candidate indices (<= 64)
    Bits full;
    int universe;
    std::vector<int> best;
    std::vector<int> cur;

    CoverSolver(std::vector<Bits> s, int u) : sets(std::move(s)), full(u), universe(u) {
        for (int e = 0; e < u; ++e) full.set(e);
        covers_by.assign(u, 0);
        for (size_t i = 0; i < sets.size(); ++i)
            sets[i].for_each([&](int e) { covers_by[e] |= u64(1) << i; });
    }

    void greedy_seed() {
        Bits covered(universe);
        std::vector<int> pick;
        while (covered != full) {
            int bi = -1, bc = -1;
            for (size_t i = 0; i < sets.size(); ++i) {
                Bits t = sets[i];
                t.andnot(covered);
                int c = t.count();
                if (c > bc) {
                    bc = c;
                    bi = static_cast<int>(i);
                }
            }
            if (bc <= 0) return;  // uncoverable element: caller checks
            pick.push_back(bi);
            covered |= sets[bi];
        }
        best = pick;
    }

    int disjoint_lb(const Bits& covered) const {
        u64 used = 0;
        int lb = 0;
        bool bad = false;
        Bits rest = full;
        rest.andnot(covered);
        rest.for_each([&](int e) {
            if (bad) return;
            if (covers_by[e] == 0) {
                bad = true;
                return;
            }
            if ((covers_by[e] & used) == 0) {
                ++lb;
                used |= covers_by[e];
            }
        });
        return bad ? universe + 1 : lb;
    }

    void rec(const Bits& covered) {
        if (covered == full) {
            if (best.empty() || cur.size() < best.size()) best = cur;
            return;
        }
        if (!best.empty() &&
            cur.size() + disjoint_lb(covered) >= best.size())
            return;
        // element with fewest candidate sets
        int elem = -1, ec = 65;
        Bits rest = full;
        rest.andnot(covered);
        rest.for_each([&](int e) {
            int c = std::popcount(covers_by[e]);
            if (c < ec) {
                ec = c;
                elem = e;
            }
        });
        if (elem < 0 || covers_by[elem] == 0) return;
        std::vector<int> cands;
        u64 cb = covers_by[elem];
        while (cb) {
            cands.push_back(std::countr_zero(cb));
            cb &= cb - 1;
        }
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            Bits ta = sets[a];
            ta.andnot(covered);
            Bits tb = sets[b];
            tb.andnot(covered);
            return ta.count() > tb.count();
        });
        for (int s : cands) {
            Bits nc = covered;
            nc |= sets[s];
            cur.push_back(s);
            rec(nc);
            cur.pop_back();
        }
    }

    std::vector<int> solve() {
        greedy_seed();
        rec(Bits(universe));
        std::sort(best.begin(), best.end());
        return best;
    }
};

// ------------------------------------------------- element machinery ------

struct Elements {
    std::vector<MixedElem> elems;
    std::vector<Bits> containers;  // over graph vertices
};

// Elements of V u E with their container masks (vertices v with the element
// inside G[v]), restricted to a vertex subset.
Elements build_elements(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.n, 0);
    for (int v : verts) in[v] = 1;
    Elements out;
    auto closed_in = [&](int v) {
        Bits b(g.n);
        b.set(v);
        for (int w : g.adj[v])
            if (in[w]) b.set(w);
        return b;
    };
    for (int v : verts) {
        out.elems.push_back(MixedElem::vertex(v));
        out.containers.push_back(closed_in(v));
    }
    for (int a : verts)
        for (int b : g.adj[a])
            if (a < b && in[b]) {
                out.elems.push_back(MixedElem::edge(a, b));
                Bits m = closed_in(a);
                m &= closed_in(b);
                out.containers.push_back(m);
            }
    return out;
}

std::vector<Bits> conflict_graph(const Elements& el) {
    int k = static_cast<int>(el.elems.size());
    std::vector<Bits> adj(k, Bits(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (el.containers[i].intersects(el.containers[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return adj;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void check_guard(const char* op, int n, int def, int max_n) {
    int lim = max_n >= 0 ? max_n : def;
    if (n > lim) throw SizeGuardError(op, n, lim);
}

// ----------------------------------------------- parameter computations ---

BruteOutcome brute_alpha(const Graph& g) {
    std::vector<Bits> adj(g.n, Bits(g.n));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) adj[u].set(v);
    MisSolver mis(adj);
    Bits b = mis.solve();
    BruteOutcome out;
    out.value = b.count();
    b.for_each([&](int v) { out.certificate.push_back(MixedElem::vertex(v)); });
    return out;
}

BruteOutcome brute_a2(const Graph& g) {
    std::vector<Bits> conf(g.n, Bits(g.n));
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            conf[u].set(v);
            for (int w : g.adj[v])
                if (w != u) conf[u].set(w);
        }
    }
    MisSolver mis(conf);
    Bits b = mis.solve();
    BruteOutcome out;
    out.value = b.count();
    b.for_each([&](int v) { out.certificate.push_back(MixedElem::vertex(v)); });
    return out;
}

BruteOutcome brute_an(const Graph& g) {
    Elements el = build_elements(g, all_vertices(g));
    MisSolver mis(conflict_graph(el));
    Bits b = mis.solve();
    BruteOutcome out;
    out.value = b.count();
    b.for_each([&](int i) { out.certificate.push_back(el.elems[i]); });
    return out;
}

BruteOutcome brute_pn(const Graph& g) {
    Elements el = build_elements(g, all_vertices(g));
    int universe = static_cast<int>(el.elems.size());
    std::vector<Bits> sets(g.n, Bits(universe));
    for (int v = 0; v < g.n; ++v)
        for (int e = 0; e < universe; ++e)
            if (el.containers[e].get(v)) sets[v].set(e);
    CoverSolver cover(std::move(sets), universe);
    auto pick = cover.solve();
    BruteOutcome out;
    out.value = static_cast<int>(pick.size());
    for (int v : pick) out.certificate.push_back(MixedElem::vertex(v));
    return out;
}

BruteOutcome brute_domination(const Graph& g, bool total) {
    std::vector<Bits> sets(g.n, Bits(g.n));
    for (int v = 0; v < g.n; ++v) {
        if (!total) sets[v].set(v);
        for (int w : g.adj[v]) sets[v].set(w);
        if (total && g.adj[v].empty())
            throw InvalidInputError("total domination undefined with isolated vertex");
    }
    CoverSolver cover(std::move(sets), g.n);
    auto pick = cover.solve();
    BruteOutcome out;
    out.value = static_cast<int>(pick.size());
    for (int v : pick) out.certificate.push_back(MixedElem::vertex(v));
    return out;
}

BruteOutcome brute_nu(const Graph& g) {
    std::map<u64, std::pair<int, Edge>> memo;  // avail mask -> (value, chosen edge)
    auto rec = [&](auto&& self, u64 avail) -> int {
        if (!avail) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second.first;
        int u = std::countr_zero(avail);
        u64 rest = avail & ~(u64(1) << u);
        int bestv = self(self, rest);  // u unmatched
        Edge beste{-1, -1};
        for (int w : g.adj[u])
            if (avail >> w & 1) {
                int v = 1 + self(self, rest & ~(u64(1) << w));
                if (v > bestv) {
                    bestv = v;
                    beste = Edge(u, w);
                }
            }
        memo[avail] = {bestv, beste};
        return bestv;
    };
    u64 full = g.n == 64 ? ~u64(0) : (u64(1) << g.n) - 1;
    BruteOutcome out;
    out.value = rec(rec, full);
    u64 avail = full;
    while (avail) {
        auto [val, e] = memo[avail];
        if (val == 0) break;
        int u = std::countr_zero(avail);
        if (e.u < 0) {
            avail &= ~(u64(1) << u);
            continue;
        }
        out.certificate.push_back(MixedElem::edge(e.u, e.v));
        avail &= ~(u64(1) << e.u);
        avail &= ~(u64(1) << e.v);
    }
    return out;
}

}  // namespace

int default_guard(ParamKind kind) {
    switch (kind) {
        case ParamKind::pn: return 12;
        case ParamKind::gamma_t: return 12;
        case ParamKind::an: return 10;
        default: return 16;
    }
}

std::optional<ParamKind> parse_param_kind(const std::string& name) {
    if (name == "pn") return ParamKind::pn;
    if (name == "an") return ParamKind::an;
    if (name == "a2") return ParamKind::a2;
    if (name == "gamma") return ParamKind::gamma;
    if (name == "gamma_t") return ParamKind::gamma_t;
    if (name == "tau") return ParamKind::tau;
    if (name == "nu") return ParamKind::nu;
    if (name == "alpha") return ParamKind::alpha;
    return std::nullopt;
}

std::string to_string(ParamKind kind) {
    switch (kind) {
        case ParamKind::pn: return "pn";
        case ParamKind::an: return "an";
        case ParamKind::a2: return "a2";
        case ParamKind::gamma: return "gamma";
        case ParamKind::gamma_t: return "gamma_t";
        case ParamKind::tau: return "tau";
        case ParamKind::nu: return "nu";
        case ParamKind::alpha: return "alpha";
    }
    return "?";
}

BruteOutcome brute_param(const Graph& g, ParamKind kind, int max_n) {
    check_guard(to_string(kind).c_str(), g.n, default_guard(kind), max_n);
    if (g.n > 64) throw SizeGuardError(to_string(kind).c_str(), g.n, 64);
    switch (kind) {
        case ParamKind::alpha: return brute_alpha(g);
        case ParamKind::a2: return brute_a2(g);
        case ParamKind::an: return brute_an(g);
        case ParamKind::pn: return brute_pn(g);
        case ParamKind::gamma: return brute_domination(g, false);
        case ParamKind::gamma_t: return brute_domination(g, true);
        case ParamKind::nu: return brute_nu(g);
        case ParamKind::tau: {
            BruteOutcome a = brute_alpha(g);
            std::vector<char> in(g.n, 0);
            for (const MixedElem& e : a.certificate) in[e.u] = 1;
            BruteOutcome out;
            out.value = g.n - a.value;
            for (int v = 0; v < g.n; ++v)
                if (!in[v]) out.certificate.push_back(MixedElem::vertex(v));
            return out;
        }
    }
    throw InvalidInputError("unknown parameter kind");
}

// ------------------------------------------ hereditary mask-based sweep ---

namespace {

// Value-only parameter evaluation on induced subgraphs given as vertex masks,
// for graphs with at most 10 vertices (element counts stay within 64 bits).
struct SubOracle {
    const Graph& g;
    std::vector<u64> nopen, nclosed;

    explicit SubOracle(const Graph& gg) : g(gg) {
        nopen.assign(g.n, 0);
        nclosed.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) {
            for (int w : g.adj[v]) nopen[v] |= u64(1) << w;
            nclosed[v] = nopen[v] | (u64(1) << v);
        }
    }

    struct Elems {
        int count = 0;
        u64 containers[64];  // over graph vertices
    };

    Elems elements(u64 s) const {
        Elems el;
        for (int v = 0; v < g.n; ++v)
            if (s >> v & 1) el.containers[el.count++] = nclosed[v] & s;
        for (int a = 0; a < g.n; ++a)
            if (s >> a & 1)
                for (int b : g.adj[a])
                    if (a < b && (s >> b & 1))
                        el.containers[el.count++] = nclosed[a] & nclosed[b] & s;
        return el;
    }

    static int mis64(const u64* adj, int k, u64 cand, int cur, int best) {
        if (cur > best) best = cur;
        int c = std::popcount(cand);
        if (c == 0 || cur + c <= best) return best;
        int pivot = -1, pdeg = -1;
        for (u64 x = cand; x;) {
            int v = std::countr_zero(x);
            x &= x - 1;
            int d = std::popcount(adj[v] & cand);
            if (d > pdeg) {
                pdeg = d;
                pivot = v;
            }
        }
        best = mis64(adj, k, cand & ~adj[pivot] & ~(u64(1) << pivot), cur + 1, best);
        best = mis64(adj, k, cand & ~(u64(1) << pivot), cur, best);
        return best;
    }

    int an(u64 s) const {
        Elems el = elements(s);
        u64 conf[64];
        for (int i = 0; i < el.count; ++i) conf[i] = 0;
        for (int i = 0; i < el.count; ++i)
            for (int j = i + 1; j < el.count; ++j)
                if (el.containers[i] & el.containers[j]) {
                    conf[i] |= u64(1) << j;
                    conf[j] |= u64(1) << i;
                }
        u64 cand = el.count == 64 ? ~u64(0) : (u64(1) << el.count) - 1;
        return mis64(conf, el.count, cand, 0, 0);
    }

    // Is there a neighborhood cover of G[s] with at most k vertices?
    bool pn_within(u64 s, int k) const {
        Elems el = elements(s);
        if (el.count == 0) return true;
        u64 full = el.count == 64 ? ~u64(0) : (u64(1) << el.count) - 1;
        int nv = 0;
        u64 sets[64];
        for (int v = 0; v < g.n; ++v)
            if (s >> v & 1) {
                u64 cover = 0;
                for (int e = 0; e < el.count; ++e)
                    if (el.containers[e] >> v & 1) cover |= u64(1) << e;
                sets[nv++] = cover;
            }
        auto can_cover = [&](auto&& self, u64 covered, int remaining) -> bool {
            if (covered == full) return true;
            if (remaining == 0) return false;
            // branch on the uncovered element with fewest covering sets
            int elem = -1, ec = 65;
            for (u64 x = full & ~covered; x;) {
                int e = std::countr_zero(x);
                x &= x - 1;
                int c = 0;
                for (int i = 0; i < nv; ++i)
                    if (sets[i] >> e & 1) ++c;
                if (c < ec) {
                    ec = c;
                    elem = e;
                }
            }
            if (ec == 0) return false;
            for (int i = 0; i < nv; ++i)
                if (sets[i] >> elem & 1)
                    if (self(self, covered | sets[i], remaining - 1)) return true;
            return false;
        };
        return can_cover(can_cover, 0, k);
    }

    int pn(u64 s) const {
        int nv = std::popcount(s);
        for (int k = 0; k < nv; ++k)
            if (pn_within(s, k)) return k;
        return nv;
    }

    int a2(u64 s) const {
        u64 conf[64];
        int verts[64];
        int nv = 0;
        for (int v = 0; v < g.n; ++v)
            if (s >> v & 1) verts[nv++] = v;
        for (int i = 0; i < nv; ++i) {
            u64 reach = nopen[verts[i]] & s;
            u64 r2 = reach;
            for (u64 x = reach; x;) {
                int w = std::countr_zero(x);
                x &= x - 1;
                r2 |= nopen[w] & s;
            }
            conf[i] = 0;
            for (int j = 0; j < nv; ++j)
                if (j != i && (r2 >> verts[j] & 1)) conf[i] |= u64(1) << j;
        }
        u64 cand = nv == 64 ? ~u64(0) : (u64(1) << nv) - 1;
        return mis64(conf, nv, cand, 0, 0);
    }
};

constexpr int kSweepHardCap = 10;  // element masks must fit in 64 bits

}  // namespace

bool brute_is_np(const Graph& g, int max_n) {
    check_guard("is_np", g.n, 8, max_n);
    if (g.n > kSweepHardCap) throw SizeGuardError("is_np", g.n, kSweepHardCap);
    SubOracle sub(g);
    u64 full = (u64(1) << g.n) - 1;
    // pn >= an always, so equality is "coverable with an(s) sets"
    for (u64 s = 0; s <= full; ++s)
        if (!sub.pn_within(s, sub.an(s))) return false;
    return true;
}

bool brute_is_mnnp(const Graph& g, int max_n) {
    check_guard("is_mnnp", g.n, 8, max_n);
    if (g.n > kSweepHardCap) throw SizeGuardError("is_mnnp", g.n, kSweepHardCap);
    SubOracle sub(g);
    u64 full = (u64(1) << g.n) - 1;
    if (sub.pn_within(full, sub.an(full))) return false;
    for (u64 s = 0; s < full; ++s)
        if (!sub.pn_within(s, sub.an(s))) return false;
    return true;
}

bool hereditary_a2_eq_pn(const Graph& g, int max_n) {
    check_guard("hereditary_a2_eq_pn", g.n, 8, max_n);
    if (g.n > kSweepHardCap)
        throw SizeGuardError("hereditary_a2_eq_pn", g.n, kSweepHardCap);
    SubOracle sub(g);
    u64 full = (u64(1) << g.n) - 1;
    // pn >= an >= a2 always
    for (u64 s = 0; s <= full; ++s)
        if (!sub.pn_within(s, sub.a2(s))) return false;
    return true;
}

bool hereditary_a2_eq_an(const Graph& g, int max_n) {
    check_guard("hereditary_a2_eq_an", g.n, 8, max_n);
    if (g.n > kSweepHardCap)
        throw SizeGuardError("hereditary_a2_eq_an", g.n, kSweepHardCap);
    SubOracle sub(g);
    u64 full = (u64(1) << g.n) - 1;
    for (u64 s = 0; s <= full; ++s)
        if (sub.a2(s) != sub.an(s)) return false;
    return true;
}

// ------------------------------------------------ induced subgraph iso ----

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    if (h.n > 12) throw SizeGuardError("contains_induced pattern", h.n, 12);
    if (g.n > 64) throw SizeGuardError("contains_induced host", g.n, 64);
    if (h.n > g.n) return std::nullopt;
    if (h.n == 0) return std::vector<int>{};

    // order pattern vertices: max degree first, then by connectivity
    std::vector<int> order;
    std::vector<char> placed(h.n, 0);
    int start = 0;
    for (int v = 1; v < h.n; ++v)
        if (h.degree(v) > h.degree(start)) start = v;
    order.push_back(start);
    placed[start] = 1;
    while (static_cast<int>(order.size()) < h.n) {
        int nxt = -1, score = -1;
        for (int v = 0; v < h.n; ++v) {
            if (placed[v]) continue;
            int s = 0;
            for (int u : order)
                if (h.has_edge(u, v)) ++s;
            int total = s * 100 + h.degree(v);
            if (total > score) {
                score = total;
                nxt = v;
            }
        }
        order.push_back(nxt);
        placed[nxt] = 1;
    }

    std::vector<u64> gadj(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) gadj[v] |= u64(1) << w;

    std::vector<int> assign(h.n, -1);  // by order index
    u64 used = 0;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == h.n) return true;
        int hv = order[i];
        u64 req = 0;
        for (int j = 0; j < i; ++j)
            if (h.has_edge(hv, order[j])) req |= u64(1) << assign[j];
        for (int c = 0; c < g.n; ++c) {
            if (used >> c & 1) continue;
            if (g.degree(c) < h.degree(hv)) continue;
            if ((gadj[c] & used) != req) continue;
            assign[i] = c;
            used |= u64(1) << c;
            if (self(self, i + 1)) return true;
            used &= ~(u64(1) << c);
            assign[i] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<int> map(h.n);
    for (int i = 0; i < h.n; ++i) map[order[i]] = assign[i];
    return map;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m != b.m) return false;
    auto da = std::vector<int>(a.n), db = std::vector<int>(b.n);
    for (int v = 0; v < a.n; ++v) da[v] = a.degree(v);
    for (int v = 0; v < b.n; ++v) db[v] = b.degree(v);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return contains_induced(a, b).has_value();
}

// ----------------------------------------------------------- chordality ---

bool is_chordal(const Graph& g) {
    // maximum cardinality search, then perfect elimination check
    std::vector<int> weight(g.n, 0), order;
    std::vector<char> done(g.n, 0);
    std::vector<int> pos(g.n, -1);
    for (int it = 0; it < g.n; ++it) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = 1;
        order.push_back(best);
        for (int w : g.adj[best])
            if (!done[w]) ++weight[w];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        int v = order[i];
        // later neighbors must form a clique; enough to check against the
        // earliest of them
        int first = -1;
        for (int w : g.adj[v])
            if (pos[w] > i && (first < 0 || pos[w] < pos[first])) first = w;
        if (first < 0) continue;
        for (int w : g.adj[v])
            if (pos[w] > pos[first] && !g.has_edge(first, w)) return false;
    }
    return true;
}

// ------------------------------------------------------------- odd suns ---

namespace {

bool find_sun(const Graph& g, int k) {
    int n = g.n;
    std::vector<u64> open(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[v]) open[v] |= u64(1) << w;

    std::vector<int> cyc(k, -1);
    u64 used = 0;

    auto place_outer = [&](auto&& self, int i, u64 used_all) -> bool {
        if (i == k) return true;
        int a = cyc[i], b = cyc[(i + 1) % k];
        u64 must = (u64(1) << a) | (u64(1) << b);
        u64 cyc_mask = 0;
        for (int j = 0; j < k; ++j) cyc_mask |= u64(1) << cyc[j];
        for (int w = 0; w < n; ++w) {
            if (used_all >> w & 1) continue;
            if ((open[w] & cyc_mask) != must) continue;        // exactly u_i, u_{i+1}
            if (open[w] & (used_all & ~cyc_mask)) continue;    // independent from other outers
            if (self(self, i + 1, used_all | (u64(1) << w))) return true;
        }
        return false;
    };

    auto place_cycle = [&](auto&& self, int i) -> bool {
        if (i == k) {
            if (!g.has_edge(cyc[k - 1], cyc[0])) return false;
            if (cyc[1] > cyc[k - 1]) return false;  // break direction symmetry
            return place_outer(place_outer, 0, used);
        }
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (i > 0) {
                if (!g.has_edge(cyc[i - 1], v)) continue;
                if (v < cyc[0]) continue;  // cyc[0] is the smallest cycle vertex
            }
            cyc[i] = v;
            used |= u64(1) << v;
            if (self(self, i + 1)) return true;
            used &= ~(u64(1) << v);
            cyc[i] = -1;
        }
        return false;
    };
    return place_cycle(place_cycle, 0);
}

}  // namespace

bool contains_induced_odd_sun(const Graph& g) {
    if (g.n > 64) throw SizeGuardError("odd sun search", g.n, 64);
    for (int k = 3; 2 * k <= g.n; k += 2)
        if (find_sun(g, k)) return true;
    return false;
}

bool is_strongly_np(const Graph& g) {
    if (!is_chordal(g)) return false;
    if (contains_induced_odd_sun(g)) return false;
    Graph p6 = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    return !contains_induced(g, p6).has_value();
}

// ----------------------------------------------- class definition checks --

bool p4tidy_by_definition(const Graph& g) {
    if (g.n > 16) throw SizeGuardError("p4tidy_by_definition", g.n, 16);
    auto induces_p4 = [&](int a, int b, int c, int d) {
        int vs[4] = {a, b, c, d};
        int deg[4] = {0, 0, 0, 0};
        int edges = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (g.has_edge(vs[i], vs[j])) {
                    ++edges;
                    ++deg[i];
                    ++deg[j];
                }
        if (edges != 3) return false;
        int ones = 0;
        for (int d2 : deg)
            if (d2 == 1)
                ++ones;
            else if (d2 != 2)
                return false;
        return ones == 2;
    };
    auto count_p4_in_5 = [&](const std::vector<int>& vs) {
        int cnt = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k)
                    for (int l = k + 1; l < 5; ++l)
                        if (induces_p4(vs[i], vs[j], vs[k], vs[l])) ++cnt;
        return cnt;
    };
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    if (!induces_p4(a, b, c, d)) continue;
                    int partners = 0;
                    for (int v = 0; v < g.n; ++v) {
                        if (v == a || v == b || v == c || v == d) continue;
                        // at least two induced P4s in G[{a,b,c,d,v}]
                        if (count_p4_in_5({a, b, c, d, v}) >= 2) ++partners;
                    }
                    if (partners > 1) return false;
                }
    return true;
}

bool tree_cograph_by_definition(const Graph& g) {
    if (g.n <= 1) return true;
    auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps)
            if (!tree_cograph_by_definition(induced(g, c).g)) return false;
        return true;
    }
    auto anti = anticomponents(g);
    if (anti.size() > 1) {
        for (const auto& c : anti)
            if (!tree_cograph_by_definition(induced(g, c).g)) return false;
        return true;
    }
    return is_tree(g) || is_tree(complement(g));
}

}  // namespace oracle
}  // namespace nhp
