#ifndef NHP_OPTIMAL_HPP
#define NHP_OPTIMAL_HPP

#include <vector>

#include "nhp/mdtree.hpp"
#include "nhp/sets.hpp"
#include "nhp/structure.hpp"

namespace nhp {

// The four certificate lists attached to a decomposition node (or the root):
// maximum neighborhood-independent set, minimum neighborhood cover, maximum
// 2-independent set, minimum dominating set.
struct OptimalLists {
    MixedSet a_n;
    std::vector<int> r_n;
    std::vector<int> a_2;
    std::vector<int> d;
};

// Parameter tuple of one join operand.
struct JoinParams {
    int gamma = 0;
    int pn = 0;
    int a2 = 0;
    int an = 0;
    friend bool operator==(const JoinParams&, const JoinParams&) = default;
};

// gamma, pn, a2, an of the join of the given operands (>= 2 of them).
JoinParams join_formulas(const std::vector<JoinParams>& parts);

struct OptimalResult {
    OptimalLists lists;
    long long pair_count = 0;  // edges built while pairing 2-independent lists
};

OptimalResult optimal_lists(const MDTree& t);
OptimalResult optimal_lists(const Graph& g);

// Definitional validity of all four lists against g.
bool lists_valid(const Graph& g, const OptimalLists& lists);

}  // namespace nhp

#endif
