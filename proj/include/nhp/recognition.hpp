#ifndef NHP_RECOGNITION_HPP
#define NHP_RECOGNITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "nhp/mdtree.hpp"
#include "nhp/structure.hpp"

namespace nhp {

// Per-node flags computed post-order over T(G).
struct NodeFlags {
    std::vector<char> c;    // G[h] contains an induced C4
    std::vector<char> p;    // G[h] contains an induced P6 (tree-cograph pass)
    std::vector<long long> alpha;  // independence number of G[h]
    // witnesses backing the flags (original vertex ids)
    std::vector<std::vector<int>> c4_witness;       // 4 vertices when c
    std::vector<std::vector<int>> p6_witness;       // 6 vertices when p
    std::vector<std::vector<int>> indep3_witness;   // up to 3 independent vertices
};

struct NPWitness {
    std::string rule;           // firing rule identifier
    int node = -1;              // tree node where the rule fired
    std::string forbidden;      // name of the forbidden induced subgraph
    std::vector<int> vertices;  // its vertices in the input graph
};

struct NPVerdict {
    bool perfect = true;
    std::optional<NPWitness> witness;
};

// C(h) for every node of a P4-tidy decomposition (with C4 witnesses).
NodeFlags c4_flags(const MDTree& t, const std::vector<NodeClass>& cls);

// C(h), P(h), alpha(h) for every node of a tree-cograph decomposition.
NodeFlags tc_flags(const MDTree& t, const std::vector<NodeClass>& cls);

NPVerdict recognize_p4tidy(const MDTree& t);
NPVerdict recognize_treecograph(const MDTree& t);

enum class GraphClass { P4Tidy, TreeCograph };

struct RecognizeResult {
    GraphClass cls;
    NPVerdict verdict;
};

// Decomposes, dispatches on class membership; throws UnsupportedClassError
// when the graph is in neither class.
RecognizeResult recognize(const Graph& g);
RecognizeResult recognize(const MDTree& t);

std::string to_string(GraphClass c);

}  // namespace nhp

#endif
