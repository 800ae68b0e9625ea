#pragma once

#include "strata/homotopy.hpp"

namespace strata {

struct HornInclusion {
    Poset poset;
    ColorWord word;
    int k = 0;
    SimplexSub simplex;  // Δ^J
    SimplexSub horn;     // Λ^J_k
    FilteredMap inclusion;
};

HornInclusion horn_inclusion(const Poset& p, const ColorWord& w, int k);

bool is_admissible(const ColorWord& w, int k);
inline bool is_admissible(const HornInclusion& h) { return is_admissible(h.word, h.k); }

struct FillerResult {
    SearchStatus status = SearchStatus::complete;
    std::optional<FilteredMap> filler;
};
FillerResult find_filler(const HornInclusion& h, const FilteredMap& lambda, long budget = default_budget());

struct HornProblem {
    ColorWord word;
    int k = 0;
    std::vector<SimplexRef> lambda;  // images of the horn generators
};

struct FibrancyReport {
    enum class Verdict { fibrant, not_fibrant, unknown } verdict = Verdict::fibrant;
    int dim_bound = 3;
    long horns_checked = 0;
    long problems_checked = 0;
    std::vector<HornProblem> failures;
};
// every admissible horn of word length 2..D+1 and every map from it into X
FibrancyReport check_fibrant(const ComplexPtr& x, int dim_bound = 3, long budget = default_budget());
std::string verdict_name(FibrancyReport::Verdict v);

struct HornWitness {
    HornInclusion horn;
    FilteredMap retraction;    // Δ^J -> Λ^J_k
    // the end of Δ^1 where the homotopies restrict to j∘r and r∘j; the identity sits at the other end
    int retraction_end = 0;
    Product simplex_cylinder;  // Δ^J ⊗ Δ^1
    FilteredMap h_simplex;
    Product horn_cylinder;     // Λ^J_k ⊗ Δ^1
    FilteredMap h_horn;
};
HornWitness admissible_horn_witness(const HornInclusion& h);
// validates the maps and the endpoint equations; throws ValidationError on failure
void validate_witness(const HornWitness& w);

// maps Δ^J -> Λ^J_k restricting to the identity on the horn
long count_retractions(const HornInclusion& h, long budget = default_budget());

}  // namespace strata
