#ifndef NHP_FAMILIES_HPP
#define NHP_FAMILIES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "nhp/graph.hpp"

namespace nhp {

// Specification of a named graph family instance.
//
// Spider vertex layout: ends s_1..s_t are vertices 0..t-1, body c_1..c_t are
// t..2t-1 (leg i joins i and t+i for a starfish, i is adjacent to t+j for
// j != i in an urchin), head vertices follow from 2t. A fat spider replaces
// one end/body vertex by K2 or 2K1; the replacement keeps the original
// position and appends its twin as the last vertex id.
struct FamilySpec {
    enum class Kind {
        Path,         // k >= 1 vertices
        Cycle,        // k >= 3
        Complete,     // k >= 1
        Edgeless,     // k >= 1
        Sun,          // k-sun, k >= 3
        Starfish,     // t >= 2 ends, optional head
        Urchin,       // t >= 2 ends, optional head
        Fat,          // fat spider: base + replaced position + shape
        Named,        // one of the fixed graphs below
        RandomTree,         // n, seed
        RandomP4Tidy,       // n, seed
        RandomTreeCograph,  // n, seed
    };
    enum class NamedGraph { ThreeK2Bar, C6Join3K1, P6Join3K1, ThreeSun };
    enum class FatShape { K2, TwoK1 };
    enum class FatPos { End, Body };

    Kind kind = Kind::Path;
    int k = 1;                           // size / ends / order parameter
    std::uint64_t seed = 0;              // random families
    std::shared_ptr<FamilySpec> head;    // spiders (may be null)
    std::shared_ptr<FamilySpec> base;    // Fat: the starfish/urchin being fattened
    FatShape fat_shape = FatShape::K2;
    FatPos fat_pos = FatPos::End;
    int fat_index = 1;                   // 1-based leg index of the replaced vertex
    NamedGraph named = NamedGraph::ThreeK2Bar;

    static FamilySpec path(int k);
    static FamilySpec cycle(int k);
    static FamilySpec complete(int k);
    static FamilySpec edgeless(int k);
    static FamilySpec sun(int k);
    static FamilySpec starfish(int t, std::optional<FamilySpec> head = {});
    static FamilySpec urchin(int t, std::optional<FamilySpec> head = {});
    static FamilySpec fat(FamilySpec base, FatPos pos, int index, FatShape shape);
    static FamilySpec named_graph(NamedGraph g);
    static FamilySpec random_tree(int n, std::uint64_t seed);
    static FamilySpec random_p4tidy(int n, std::uint64_t seed);
    static FamilySpec random_treecograph(int n, std::uint64_t seed);
};

Graph generate(const FamilySpec& spec);

// Textual form used by the CLI, e.g. "path:5", "starfish:4,head=complete:3",
// "fat:starfish:3,pos=body:2,shape=2k1", "named:3K2bar", "random-tree:100".
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_to_string(const FamilySpec& spec);

}  // namespace nhp

#endif
