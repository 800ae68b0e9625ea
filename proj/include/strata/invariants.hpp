#pragma once

#include <array>

#include "strata/exfunctor.hpp"
#include "strata/groups.hpp"
#include "strata/homotopy.hpp"

namespace strata {

// A 2-truncated simplicial set: vertices, edges (d1 = source, d0 = target) and
// triangles given by their faces (d0, d1, d2) as edge indices, -1 for a degenerate face.
struct EdgePathData {
    int vertices = 0;
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> edge_names;
    std::vector<std::array<int, 3>> triangles;
};

struct EdgePathGroup {
    GroupPresentation group;
    int basepoint = 0;
    std::vector<int> component;          // vertices reachable from the basepoint
    std::vector<int> generator_of_edge;  // -1 for tree edges and edges outside the component
    std::vector<int> parent;             // spanning tree, -1 at the root and outside
    std::vector<int> parent_edge;
    std::vector<int> loop_of_generator;  // the edge of each generator
};

// spanning tree by breadth-first search; reverse_order scans edges from the last one
EdgePathGroup edge_path_group(const EdgePathData& d, int basepoint, bool reverse_order = false);
// images of the generators of gs under a map given on vertices and edges (edge image -1: degenerate)
std::vector<GroupWord> induced_homomorphism(const EdgePathData& src, const EdgePathGroup& gs, const EdgePathGroup& gt,
                                            const std::vector<int>& vertex_map, const std::vector<int>& edge_map);

struct ComplexEdgePath {
    EdgePathData data;
    std::vector<int> vertex_index;  // generator -> vertex index or -1
    std::vector<int> edge_index;    // generator -> edge index or -1
};
ComplexEdgePath edge_path_data(const ComplexPtr& k);
// edge-path group of the component of the given vertex generator
EdgePathGroup edge_path_pi1(const ComplexPtr& k, int basepoint_gen, bool reverse_order = false);
// the homomorphism induced by f on edge-path groups at basepoint_gen and its image
std::vector<GroupWord> induced_by_map(const FilteredMap& f, const EdgePathGroup& gs, const EdgePathGroup& gt);

// A pointing of X over a subcomplex V of N(P)
struct Pointing {
    ComplexPtr v;
    FilteredMap to_nerve;  // V -> N(P), a monomorphism
    FilteredMap phi;       // V -> X
};
Pointing empty_pointing(const ComplexPtr& x);
// V = the nerve simplex of the color word of s, φ its classifying map
Pointing simplex_pointing(const ComplexPtr& x, const SimplexRef& s);
void validate_pointing(const Pointing& p);
// φ restricted to Δ^w when the nerve simplex of w lies in V
std::optional<FilteredMap> restrict_pointing(const Pointing& p, const ColorWord& w);

// π_0 of Map(Δ^w, Ex^k X): vertices Hom(sd^k Δ^w, X), edges Hom(sd^k(Δ^w ⊗ Δ^1), X)
struct Spi0Level {
    ColorWord word;
    int stage = 0;
    std::vector<FilteredMap> elements;
    std::vector<int> cls;  // classes numbered by first member
    int classes = 0;
    SearchStatus status = SearchStatus::complete;
    std::optional<int> class_of(const FilteredMap& e) const;
};
Spi0Level spi0_level(const ComplexPtr& x, const ColorWord& w, int stage, long budget = default_budget());

// 2-truncation of Map(Δ^w, Ex^k X)
struct MappingTruncation {
    ColorWord word;
    int stage = 0;
    std::array<std::vector<FilteredMap>, 3> levels;
    EdgePathData data;
    std::vector<int> edge_of_level1;  // level-1 element -> edge index or -1 when degenerate
    SearchStatus status = SearchStatus::complete;
    std::optional<int> vertex_of(const FilteredMap& e) const;
};
MappingTruncation mapping_truncation(const ComplexPtr& x, const ColorWord& w, int stage, long budget = default_budget());

struct Spi1Result {
    EdgePathGroup group;
    std::vector<long> invariants;
    std::vector<long> previous;  // invariants at stage k-1 (stage 0: same as invariants)
    bool stable = true;
    SearchStatus status = SearchStatus::complete;
};
Spi1Result spi1_tower(const ComplexPtr& x, const Pointing& p, const ColorWord& w, int stage, long budget = default_budget());

struct SpiValue {
    ColorWord word;
    int classes = 0;  // n = 0
    GroupPresentation group;  // n = 1
    std::vector<long> invariants;
    bool stable = true;
};
struct SpiTransition {
    int from = -1, to = -1;  // value indices; `to` is the face
    int face = -1;
    std::vector<int> class_map;        // n = 0
    std::vector<GroupWord> images;     // n = 1
    std::vector<long> kernel, cokernel;
};
struct SpiDiagram {
    Poset poset;
    int n = 0;
    int stage = -1;  // -1: assembled
    std::string route;
    std::vector<SpiValue> values;
    std::vector<SpiTransition> transitions;
    SearchStatus status = SearchStatus::complete;
    bool stable = true;
    int find(const ColorWord& w) const;
};

// all non-degenerate words of N(P), by length then lexicographically
std::vector<ColorWord> nondegenerate_words(const Poset& p);

SpiDiagram spi0(const ComplexPtr& x, int stage = 2, long budget = default_budget());
SpiDiagram spi1(const ComplexPtr& x, const Pointing& p, int stage = 1, long budget = default_budget());
// class maps induced by f: X -> Y, per word of the diagrams of X and Y
std::vector<std::vector<int>> spi0_induced(const FilteredMap& f, int stage, long budget = default_budget());

// diagram over p0 < p1: π_n(E) with d_1 → π_n(M) induced by attach and d_0 → π_n(E') induced by reattach
SpiDiagram assemble_spi_from_bundle(const ComplexPtr& m, const ComplexPtr& e, const ComplexPtr& e2, const FilteredMap& attach,
                                    const FilteredMap& reattach, int n = 1);

struct Comparison {
    std::string verdict;  // distinguished | isomorphic-on-abelianized-invariants | inconclusive
    std::string witness;
};
Comparison compare_diagrams(const SpiDiagram& a, const SpiDiagram& b);

}  // namespace strata
