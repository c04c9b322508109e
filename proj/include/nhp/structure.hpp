#ifndef NHP_STRUCTURE_HPP
#define NHP_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nhp/mdtree.hpp"

namespace nhp {

// Spider partition of a prime quotient. Indices refer to quotient vertices
// (equivalently positions in the N-node's child list). Legs are aligned:
// ends[i] pairs with body[i]; in a starfish ends[i] is adjacent exactly to
// body[i], in an urchin exactly to the other body vertices.
struct SpiderPartition {
    bool urchin = false;
    std::vector<int> ends;
    std::vector<int> body;
    std::optional<int> head;  // quotient vertex of the head child
    struct Fat {
        int position;   // quotient vertex whose child carries the K2/2K1
        bool on_body;   // false: replaced end
        bool two_k1;    // false: K2
    };
    std::optional<Fat> fat;
    int t() const { return static_cast<int>(ends.size()); }
};

enum class NodeTag { C5, P5, P5bar, Spider, TreeLike, CoTreeLike, Other };

struct NodeClass {
    NodeTag tag = NodeTag::Other;
    std::optional<SpiderPartition> spider;
    // C5/P5/P5bar: quotient vertices in path/cycle order (complement path
    // order for P5bar)
    std::vector<int> order;
    std::string reject_reason;  // set when tag == Other
};

// Identifies pi(h) among C5, P5, P5bar, prime starfish, prime urchin and
// validates the child constraints (leaves everywhere except an optional head
// child and an optional fat child representing K2 or 2K1).
NodeClass classify_p4tidy_node(const MDTree& t, int h);

// TreeLike iff G[h] is a tree, checked structurally: pi(h) is a tree and
// every non-leaf child represents an edgeless graph sitting at a leaf of
// pi(h). CoTreeLike dually. Prefers TreeLike when both hold.
NodeClass classify_treecograph_node(const MDTree& t, int h);

bool is_p4_tidy(const MDTree& t);
bool is_tree_cograph(const MDTree& t);

// Per-node classification for the recognition and optimal-set passes;
// entries are meaningful only at N-nodes.
std::vector<NodeClass> classify_all_p4tidy(const MDTree& t);
std::vector<NodeClass> classify_all_treecograph(const MDTree& t);

}  // namespace nhp

#endif
