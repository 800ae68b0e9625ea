#pragma once

#include "strata/horns.hpp"
#include "strata/subdivision.hpp"

namespace strata {

// One shared Δ^w per (poset, word), so that its subdivisions are memoized.
const SimplexSub& canonical_simplex(const Poset& p, const ColorWord& w);

// Ex^k_P(X)_w = Hom(sd_P^k(Δ^w), X)
struct ExLevel {
    ComplexPtr base;
    int stage = 1;
    ColorWord word;
    SimplexSub simplex;  // canonical Δ^w
    ComplexPtr domain;   // sd_P^k(Δ^w)
    SearchStatus status = SearchStatus::complete;
    std::vector<FilteredMap> elements;

    std::optional<int> find(const FilteredMap& e) const;
};

ExLevel ex_level(const ComplexPtr& x, const ColorWord& w, int stage = 1, long budget = default_budget());

// sd_P^k(θ): sd_P^k(Δ^{w∘θ}) -> sd_P^k(Δ^w) for a monotone θ: [m] -> [n]
FilteredMap ex_operator(const Poset& p, const ColorWord& w, std::span<const int> theta, int stage = 1);
// the simplicial operators of Ex^k_P(X), acting by precomposition
FilteredMap ex_act(const FilteredMap& e, const ColorWord& w, std::span<const int> theta, int stage = 1);
FilteredMap ex_face(const FilteredMap& e, const ColorWord& w, int i, int stage = 1);
FilteredMap ex_degeneracy(const FilteredMap& e, const ColorWord& w, int i, int stage = 1);
// plateau mask of the degeneracies e = s_i d_i e
std::uint32_t ex_degeneracy_mask(const FilteredMap& e, const ColorWord& w, int stage = 1);

// ι^k(x) = x ∘ l.v_P^k for a simplex x of X
FilteredMap iota(const ComplexPtr& x, const SimplexRef& s, int stage = 1);

// Γ^k membership at stage 1: e ∘ j^k = e
bool in_gamma(const FilteredMap& e, const ColorWord& w, int k);
// least k with e ∈ Γ^k
int gamma_degree(const FilteredMap& e, const ColorWord& w);

struct GammaFiltration {
    std::vector<int> degree;  // per element
    // membership[e][k]
    std::vector<std::vector<bool>> membership;
    bool monotone = true;
    bool top_is_everything = true;
};
GammaFiltration gamma_filtration(const ExLevel& level);

// The filler of an admissible horn problem Λ^J_k -> Ex_P(X), given in adjoint form
// λ♭: sd_P(Λ^J_k) -> X.  The result is adjoint to Δ^J -> Ex^3_P(X).
struct ExFiller {
    FilteredMap filler;  // sd_P^3(Δ^J) -> X
    // f_σ per generator σ of sd_P^2(Δ^J)
    std::vector<std::vector<int>> vertex_functions;
};
ExFiller ex_filler(const HornInclusion& h, const FilteredMap& lambda_flat);
// the stage-3 image of λ: sd_P^3(Λ^J_k) -> X, adjoint to λ ∘ l.v_P^2
FilteredMap ex_horn_restriction_target(const HornInclusion& h, const FilteredMap& lambda_flat);
// validates the filler and its bit-exact restriction to the horn; throws ValidationError
void validate_ex_filler(const HornInclusion& h, const FilteredMap& lambda_flat, const ExFiller& f);

// Uniform sample (reservoir, seeded) of admissible horn problems Λ^J_k -> Ex_P(X) in adjoint form,
// over all monotone words of length 2..max_length
struct ExFillerProblem {
    HornInclusion horn;
    FilteredMap lambda_flat;  // sd_P(Λ^J_k) -> X
};
struct ExFillerSample {
    std::vector<ExFillerProblem> problems;
    long population = 0;
    SearchStatus status = SearchStatus::complete;
};
ExFillerSample sample_ex_filler_problems(const ComplexPtr& x, int count, std::uint64_t seed, int max_length = 3,
                                         long budget = default_budget());

}  // namespace strata
