#ifndef NHP_ORACLE_HPP
#define NHP_ORACLE_HPP

#include <optional>
#include <vector>

#include "nhp/graph.hpp"
#include "nhp/sets.hpp"

namespace nhp {
namespace oracle {

enum class ParamKind { pn, an, a2, gamma, gamma_t, tau, nu, alpha };

std::optional<ParamKind> parse_param_kind(const std::string& name);
std::string to_string(ParamKind kind);

struct BruteOutcome {
    int value = 0;
    MixedSet certificate;  // vertices for vertex params, edges for nu, mixed for an
};

// Exact optimum with witnessing set. Refuses inputs beyond the per-kind size
// guard unless max_n raises it. gamma_t throws InvalidInputError when the
// graph has an isolated vertex.
BruteOutcome brute_param(const Graph& g, ParamKind kind, int max_n = -1);

int default_guard(ParamKind kind);

// Hereditary equality pn = an over all induced subgraphs (guard n <= 8).
bool brute_is_np(const Graph& g, int max_n = -1);
// Not neighborhood-perfect, but every proper induced subgraph is.
bool brute_is_mnnp(const Graph& g, int max_n = -1);

// Hereditary equality sweeps used by the strongly-perfect cross-checks.
bool hereditary_a2_eq_pn(const Graph& g, int max_n = -1);
bool hereditary_a2_eq_an(const Graph& g, int max_n = -1);

// Induced-subgraph search; returns the embedding h-vertex -> g-vertex.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

bool isomorphic(const Graph& a, const Graph& b);

bool is_chordal(const Graph& g);

// Sun with independent outer vertices w_i attached to consecutive cycle
// vertices u_i, u_{i+1}; chords inside the inner cycle are allowed.
bool contains_induced_odd_sun(const Graph& g);

// chordal, P6-free and with no induced odd sun
bool is_strongly_np(const Graph& g);

// Definition-level class membership checks (exponential, for cross-tests).
bool p4tidy_by_definition(const Graph& g);
bool tree_cograph_by_definition(const Graph& g);

}  // namespace oracle
}  // namespace nhp

#endif
