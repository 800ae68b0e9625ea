#include "strata/horns.hpp"

#include <set>

namespace strata {

namespace {

int bit_index(std::uint32_t mask) { return __builtin_ctz(mask); }

std::vector<int> horn_vars(const HornInclusion& h) {
    std::vector<int> vars;
    for (int g = 0; g < h.horn.complex->size(); ++g) vars.push_back(*h.simplex.gen(h.horn.mask[g]));
    return vars;
}

}  // namespace

HornInclusion horn_inclusion(const Poset& p, const ColorWord& w, int k) {
    if (w.size() < 2 || k < 0 || k >= static_cast<int>(w.size())) throw Error("horn index out of range");
    HornInclusion h;
    h.poset = p;
    h.word = w;
    h.k = k;
    h.simplex = standard_simplex_sub(p, w);
    h.horn = horn_sub(p, w, k);
    h.inclusion = sub_inclusion(h.horn, h.simplex);
    return h;
}

bool is_admissible(const ColorWord& w, int k) {
    const int n = static_cast<int>(w.size());
    if (k < 0 || k >= n) return false;
    return (k > 0 && w[k - 1] == w[k]) || (k + 1 < n && w[k + 1] == w[k]);
}

FillerResult find_filler(const HornInclusion& h, const FilteredMap& lambda, long budget) {
    SearchOptions o;
    o.budget = budget;
    MapSearch s(h.simplex.complex, lambda.codomain(), o);
    auto vars = horn_vars(h);
    for (size_t g = 0; g < vars.size(); ++g) s.fix(vars[g], lambda.image(static_cast<int>(g)));
    auto [st, f] = s.first();
    return FillerResult{st, f};
}

std::string verdict_name(FibrancyReport::Verdict v) {
    switch (v) {
        case FibrancyReport::Verdict::fibrant: return "fibrant up to D";
        case FibrancyReport::Verdict::not_fibrant: return "not fibrant";
        case FibrancyReport::Verdict::unknown: return "unknown (budget)";
    }
    return "";
}

FibrancyReport check_fibrant(const ComplexPtr& x, int dim_bound, long budget) {
    FibrancyReport rep;
    rep.dim_bound = dim_bound;
    bool unknown = false;
    const Poset& p = x->poset();
    for (int len = 2; len <= dim_bound + 1; ++len)
        for (auto& w : monotone_words(p, len))
            for (int k = 0; k < len; ++k) {
                if (!is_admissible(w, k)) continue;
                HornInclusion h = horn_inclusion(p, w, k);
                ++rep.horns_checked;
                SearchOptions o;
                o.budget = budget;
                std::set<std::vector<SimplexRef>> extendable;
                MapSearch full(h.simplex.complex, x, o);
                auto st = full.for_each_projection(horn_vars(h), [&](const std::vector<SimplexRef>& v) {
                    extendable.insert(v);
                    return true;
                });
                if (st == SearchStatus::budget_exhausted) unknown = true;
                MapSearch on_horn(h.horn.complex, x, o);
                auto st2 = on_horn.for_each([&](const std::vector<SimplexRef>& lam) {
                    ++rep.problems_checked;
                    if (!extendable.count(lam)) rep.failures.push_back(HornProblem{w, k, lam});
                    return true;
                });
                if (st2 == SearchStatus::budget_exhausted) unknown = true;
            }
    if (!rep.failures.empty())
        rep.verdict = FibrancyReport::Verdict::not_fibrant;
    else if (unknown)
        rep.verdict = FibrancyReport::Verdict::unknown;
    return rep;
}

HornWitness admissible_horn_witness(const HornInclusion& h) {
    if (!is_admissible(h)) throw Error("horn " + format_word(h.poset, h.word) + " at " + std::to_string(h.k) + " is not admissible");
    const int n = static_cast<int>(h.word.size());
    const int k = h.k;
    const int moved = (k + 1 < n && h.word[k + 1] == h.word[k]) ? k + 1 : k - 1;
    auto r = [&](int i) { return i == moved ? k : i; };
    HornWitness out;
    out.horn = h;
    out.retraction_end = moved == k + 1 ? 0 : 1;
    VertexIndex simplex_index(h.simplex.complex);
    VertexIndex horn_index(h.horn.complex);
    out.retraction = map_from_vertices(h.simplex.complex, horn_index, [&](int g) {
        return *h.horn.gen(1u << r(bit_index(h.simplex.mask[g])));
    });
    Poset pt = Poset::point();
    SimplexSub interval = standard_simplex_sub(pt, {0, 0});
    out.simplex_cylinder = tensor(h.simplex.complex, interval.complex, n);
    out.horn_cylinder = tensor(h.horn.complex, interval.complex, n);
    auto lift = [&](const Product& cyl, const SimplexSub& base, const VertexIndex& target, const SimplexSub& tsub) {
        return map_from_vertices(cyl.complex, target, [&](int g) {
            const auto& [xv, yv] = cyl.parts[g];
            const int i = bit_index(base.mask[xv.gen]);
            const int t = bit_index(interval.mask[yv.gen]);
            return *tsub.gen(1u << (t == out.retraction_end ? r(i) : i));
        });
    };
    out.h_simplex = lift(out.simplex_cylinder, h.simplex, simplex_index, h.simplex);
    out.h_horn = lift(out.horn_cylinder, h.horn, horn_index, h.horn);
    return out;
}

void validate_witness(const HornWitness& w) {
    const auto& h = w.horn;
    w.retraction.validate();
    w.h_simplex.validate();
    w.h_horn.validate();
    auto fail = [&](const std::string& what) {
        throw ValidationError("horn witness for " + format_word(h.poset, h.word) + " at " + std::to_string(h.k) + ": " + what);
    };
    const auto interval = standard_simplex_sub(Poset::point(), {0, 0});
    const int v0 = *interval.gen(1u << w.retraction_end);
    const int v1 = *interval.gen(1u << (1 - w.retraction_end));
    auto jr = compose(h.inclusion, w.retraction);
    auto rj = compose(w.retraction, h.inclusion);
    if (compose(w.h_simplex, tensor_end(w.simplex_cylinder, v0)).images() != jr.images()) fail("simplex homotopy does not start at j∘r");
    if (compose(w.h_simplex, tensor_end(w.simplex_cylinder, v1)).images() != identity_map(h.simplex.complex).images())
        fail("simplex homotopy does not end at the identity");
    if (compose(w.h_horn, tensor_end(w.horn_cylinder, v0)).images() != rj.images()) fail("horn homotopy does not start at r∘j");
    if (compose(w.h_horn, tensor_end(w.horn_cylinder, v1)).images() != identity_map(h.horn.complex).images())
        fail("horn homotopy does not end at the identity");
}

long count_retractions(const HornInclusion& h, long budget) {
    SearchOptions o;
    o.budget = budget;
    MapSearch s(h.simplex.complex, h.horn.complex, o);
    auto vars = horn_vars(h);
    for (size_t g = 0; g < vars.size(); ++g) s.fix(vars[g], h.horn.complex->ref(static_cast<int>(g)));
    long n = 0;
    auto st = s.for_each([&](const std::vector<SimplexRef>&) {
        ++n;
        return true;
    });
    if (st == SearchStatus::budget_exhausted) return -1;
    return n;
}

}  // namespace strata
