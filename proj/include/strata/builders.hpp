#pragma once

#include <functional>

#include "strata/morphism.hpp"

namespace strata {

// A subcomplex of Δ^w whose generators are faces named by vertex masks.
struct SimplexSub {
    ComplexPtr complex;
    ColorWord word;
    std::vector<std::uint32_t> mask;
    std::unordered_map<std::uint32_t, int> by_mask;

    std::optional<int> gen(std::uint32_t m) const {
        auto it = by_mask.find(m);
        if (it == by_mask.end()) return std::nullopt;
        return it->second;
    }
    // simplex with the given monotone vertex sequence (indices into w), if present
    std::optional<SimplexRef> lookup(std::span<const int> vertices) const;
};

SimplexSub simplex_sub(const Poset& p, const ColorWord& w, const std::function<bool(std::uint32_t)>& keep);
SimplexSub standard_simplex_sub(const Poset& p, const ColorWord& w);
SimplexSub boundary_sub(const Poset& p, const ColorWord& w);
SimplexSub horn_sub(const Poset& p, const ColorWord& w, int k);

ComplexPtr standard_simplex(const Poset& p, const ColorWord& w);
ComplexPtr boundary(const Poset& p, const ColorWord& w);
ComplexPtr horn(const Poset& p, const ColorWord& w, int k);
// plain Δ^n over the one-point poset
ComplexPtr plain_simplex(int n);
// non-degenerate simplices of N(P): the strictly increasing chains
ComplexPtr nerve(const Poset& p, int max_dim = -1);
ComplexPtr empty_complex(const Poset& p);

std::string face_name(std::uint32_t mask);

// the map Δ^w -> X classifying the simplex x of color w
FilteredMap classifying_map(const SimplexSub& simplex, const ComplexPtr& x, const SimplexRef& s);
// inclusion of one subcomplex of Δ^w into another
FilteredMap sub_inclusion(const SimplexSub& from, const SimplexSub& to);
// Δ^{w'} -> Δ^w induced by a monotone vertex map theta: [n'] -> [n]
FilteredMap simplex_operator(const SimplexSub& from, const SimplexSub& to, std::span<const int> theta);

// Fibered product over N(P) (colored) or product with an uncolored right factor (tensor).
struct Product {
    ComplexPtr complex;
    ComplexPtr left;
    ComplexPtr right;
    std::vector<std::pair<SimplexRef, SimplexRef>> parts;

    SimplexRef lookup(const SimplexRef& x, const SimplexRef& y) const;
    std::optional<SimplexRef> find(const SimplexRef& x, const SimplexRef& y) const;
    FilteredMap project_left() const;

    struct Key {
        int gx, gy;
        std::uint32_t dx, dy;
        int dim;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const noexcept;
    };
    std::unordered_map<Key, int, KeyHash> index;
};

Product filtered_product(const ComplexPtr& x, const ComplexPtr& y, int max_dim = 6);
// X ⊗ K: colors come from X, K is read as a plain simplicial set
Product tensor(const ComplexPtr& x, const ComplexPtr& k, int max_dim = 6);
// plain product of simplicial sets over the one-point poset
Product plain_product(const ComplexPtr& x, const ComplexPtr& y, int max_dim = 6);

// the map X ⊗ K -> Y ⊗ L induced by f and a map of plain sets g (either may be identity)
FilteredMap tensor_map(const Product& from, const Product& to, const FilteredMap* f, const FilteredMap* g);
// X -> X ⊗ K at the vertex v of K
FilteredMap tensor_end(const Product& to, int vertex);

struct Pushout {
    ComplexPtr complex;
    FilteredMap from_x;
    FilteredMap from_y;
};
// f: A -> X must be a monomorphism; result is Y ∪_A X
Pushout pushout(const FilteredMap& f, const FilteredMap& g, const std::string& x_prefix = "");

// join of an apex of color p with L (the filtered cone)
ComplexPtr filtered_cone(const ComplexPtr& l, int apex_color, const std::string& apex = "c");

ComplexPtr disjoint_union(const ComplexPtr& a, const ComplexPtr& b, const std::string& pa = "a.", const std::string& pb = "b.");

// ordered simplicial complex from facets over a total vertex order
ComplexPtr ordered_complex(const Poset& p, const std::vector<std::string>& vertex_names, const ColorWord& vertex_colors,
                           const std::vector<std::vector<int>>& facets);
// 1-dimensional complex from directed edges (source, target)
ComplexPtr graph_complex(const Poset& p, const std::vector<std::string>& vertex_names, const ColorWord& vertex_colors,
                         const std::vector<std::pair<int, int>>& edges);

// same generators and faces over another poset with a new coloring of generators
ComplexPtr recolor(const ComplexPtr& x, const Poset& p, const std::function<ColorWord(int)>& color_of_gen,
                   const std::string& prefix = "");
ComplexPtr constant_color(const ComplexPtr& x, const Poset& p, int q, const std::string& prefix = "");
// forget colors: the underlying simplicial set over the one-point poset
ComplexPtr underlying(const ComplexPtr& x);
// rebuild a map between recolored copies of domain and codomain
FilteredMap transport(const FilteredMap& f, const ComplexPtr& dom, const ComplexPtr& cod);

}  // namespace strata
