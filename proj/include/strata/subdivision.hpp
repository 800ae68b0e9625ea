#pragma once

#include <memory>

#include "strata/builders.hpp"

namespace strata {

enum class SdMode { filtered, naive, classical };
std::string mode_name(SdMode m);
SdMode parse_mode(std::string_view s);

// A pair (σ, q): σ a vertex mask of a simplex, q a color.  In naive and
// classical subdivisions q is the color of the last vertex of σ (classical: 0).
using SdPair = std::pair<std::uint32_t, int>;
using SdChain = std::vector<SdPair>;

struct SdCell {
    int base = -1;  // generator of the source complex
    SdChain chain;  // strictly increasing, top mask is the full vertex set of base
};

class Subdivision {
public:
    ComplexPtr source;
    ComplexPtr complex;
    SdMode mode = SdMode::filtered;
    std::vector<SdCell> cells;  // one per generator of complex

    // the simplex sd(x)(c) for a simplex x of the source and a chain c in sd(Δ^{dim x})
    SimplexRef locate(const SimplexRef& x, const SdChain& c) const;
    std::optional<int> find(int base, const SdChain& c) const;

    struct KeyHash {
        size_t operator()(const std::vector<std::uint64_t>& k) const noexcept;
    };
    std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> index;
};

using SubdivisionPtr = std::shared_ptr<const Subdivision>;

// memoized per (complex, mode)
SubdivisionPtr subdivide(const ComplexPtr& x, SdMode mode = SdMode::filtered);
// stages 1..k of sd_P^k, each subdividing the previous complex
std::vector<SubdivisionPtr> subdivide_iterated(const ComplexPtr& x, int k, SdMode mode = SdMode::filtered);
ComplexPtr iterated_complex(const ComplexPtr& x, int k, SdMode mode = SdMode::filtered);

// sd(f) between subdivisions of the domain and codomain of f
FilteredMap sd_map(const Subdivision& from, const Subdivision& to, const FilteredMap& f);
// sd^k(f)
FilteredMap sd_map_iterated(const ComplexPtr& dom, const ComplexPtr& cod, const FilteredMap& f, int k,
                            SdMode mode = SdMode::filtered);

// l.v_P (filtered), l.v (naive) into the source; classical maps into underlying(source)
FilteredMap last_vertex_map(const Subdivision& sd);
// l.v_P^k : sd_P^k(X) -> X
FilteredMap last_vertex_iterated(const ComplexPtr& x, int k);

// global vertex masks of a cell of the subdivision of a simplex subcomplex
SdChain global_chain(const Subdivision& sd, const SimplexSub& sub, int cell);
std::uint32_t deposit_bits(std::uint32_t local, std::uint32_t positions);
std::uint32_t extract_bits(std::uint32_t global, std::uint32_t positions);

// The lift of a union-type vertex function F (masks of `from` to masks of `to`):
// chains (σ_i, q_i) go to (F(σ_i), q_i) in the given mode.
FilteredMap lift_vertex_function(const SimplexSub& from, const SimplexSub& to,
                                 const std::function<std::uint32_t(std::uint32_t)>& f, SdMode mode = SdMode::filtered);

// G: from a map between naive subdivisions of simplices to the filtered subdivisions
FilteredMap functor_G(const SimplexSub& from, const SimplexSub& to, const FilteredMap& naive);

enum class StructuralKind { j, r, sd_d, sd_s };
struct StructuralMap {
    StructuralKind kind;
    int k = 0;
    SimplexSub from, to;
    FilteredMap map;  // sd(from) -> sd(to)
};
// j^k on Δ^w; r^k: sd(Δ^{s_k w}) -> sd(Δ^w); sd(d^k): sd(Δ^{d_k w}) -> sd(Δ^w); sd(s^k): sd(Δ^{s_k w}) -> sd(Δ^w)
StructuralMap structural_map(StructuralKind kind, int k, const Poset& p, const ColorWord& w, SdMode mode = SdMode::filtered);
// the same, with caller-supplied simplex subcomplexes (their complexes index the memoized subdivisions)
FilteredMap structural_map_on(StructuralKind kind, int k, const SimplexSub& from, const SimplexSub& to,
                              SdMode mode = SdMode::filtered);
std::function<std::uint32_t(std::uint32_t)> structural_vertex_function(StructuralKind kind, int k);

}  // namespace strata
