#pragma once

#include "strata/exfunctor.hpp"

namespace strata {

// A filtered anodyne presentation of a monomorphism X ↪ Y.  Simplices are
// generators of Y.  With a dimension bound D only simplices of dimension <= D
// are classified; type II simplices of dimension D whose partner would have
// dimension D+1 are listed in the frontier instead.
struct AnodynePresentation {
    FilteredMap inclusion;
    std::vector<int> type2;
    std::vector<int> type1;
    std::vector<int> phi;  // parallel to type2
    int dim_bound = -1;    // -1: no bound
    std::vector<int> frontier;
    // optional class label per generator of Y ('-' for none)
    std::string classes;
};

struct PresentationVerdict {
    bool ok = true;
    std::string condition;  // first violated condition
    std::string witness;
    long outside = 0;
    long pairs = 0;
    long frontier = 0;
    // maximal number of same-dimension ancestors of a type II simplex
    long max_same_dim_ancestors = 0;
    // a linear extension of the ancestral preorder (generators of Y), ancestors first
    std::vector<int> order;
};

PresentationVerdict verify_presentation(const AnodynePresentation& p);

// sd_P(Λ^J_k) ↪ sd_P(Δ^J) with classes (a)-(h); h must be admissible
AnodynePresentation generate_sdP_horn_presentation(const HornInclusion& h);
// the classes of a chain of sd_P(Δ^J) outside sd_P(Λ^J_k), matched independently against every pattern
std::string sdP_horn_classes(const ColorWord& w, int k, const SdChain& global);
int choose_k_prime(const ColorWord& w, int k);

// Truncation of Ex_P(X) to dimension D as a complex of non-degenerate elements
struct TruncatedEx {
    ComplexPtr base;
    int dim_bound = 0;
    ComplexPtr complex;
    std::vector<ColorWord> words;         // per generator
    std::vector<FilteredMap> elements;    // per generator: sd_P(Δ^w) -> X
    FilteredMap iota;                     // X -> complex
    SearchStatus status = SearchStatus::complete;
};
TruncatedEx truncated_ex(const ComplexPtr& x, int dim_bound, long budget = default_budget());

struct ExPresentation {
    TruncatedEx ex;
    AnodynePresentation presentation;
    // generators outside X whose Γ degree is 0, so that φ = σ∘r^h is undefined
    std::vector<int> undefined_phi;
};
ExPresentation generate_ex_presentation(const ComplexPtr& x, int dim_bound, long budget = default_budget());

// A subcomplex given by a face-closed set of generators, with its inclusion
struct Subcomplex {
    ComplexPtr complex;
    FilteredMap inclusion;
    std::vector<int> index;  // generator of the ambient complex -> generator of the subcomplex or -1
};
Subcomplex induced_subcomplex(const ComplexPtr& c, const std::vector<bool>& keep);

struct PrismPresentation {
    Product cylinder;  // Y ⊗ Δ^1
    Subcomplex sub;    // X ⊗ Δ^1 ∪ Y ⊗ {ε}
    AnodynePresentation presentation;
};
PrismPresentation generate_prism_presentation(const FilteredMap& mono, int end);

// Extends f: X -> Z along a verified presentation by filling the horns of
// the type I simplices in ancestral order.  Returns nullopt when a horn has no filler.
std::optional<FilteredMap> extend_along_presentation(const AnodynePresentation& p, const PresentationVerdict& v,
                                                     const FilteredMap& f, long budget = default_budget());

}  // namespace strata
