#include "strata/exfunctor.hpp"

#include <mutex>
#include <random>

namespace strata {

namespace {

std::mutex cache_mu;

const FilteredMap& cached_j(const Poset& p, const ColorWord& w, int k) {
    static std::map<std::tuple<const FilteredComplex*, int>, FilteredMap> cache;
    const SimplexSub& sub = canonical_simplex(p, w);
    std::lock_guard<std::mutex> lock(cache_mu);
    auto key = std::make_tuple(sub.complex.get(), k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, structural_map_on(StructuralKind::j, k, sub, sub)).first;
    return it->second;
}

ColorWord pull_word(const ColorWord& w, std::span<const int> theta) {
    ColorWord out;
    for (int t : theta) out.push_back(w.at(t));
    return out;
}

}  // namespace

const SimplexSub& canonical_simplex(const Poset& p, const ColorWord& w) {
    static std::vector<std::pair<Poset, std::map<ColorWord, SimplexSub>>> cache;
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& e) { return e.first == p; });
    if (it == cache.end()) {
        cache.emplace_back(p, std::map<ColorWord, SimplexSub>{});
        it = cache.end() - 1;
    }
    auto& subs = it->second;
    auto s = subs.find(w);
    if (s == subs.end()) s = subs.emplace(w, standard_simplex_sub(p, w)).first;
    return s->second;
}

std::optional<int> ExLevel::find(const FilteredMap& e) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].images() == e.images()) return static_cast<int>(i);
    return std::nullopt;
}

ExLevel ex_level(const ComplexPtr& x, const ColorWord& w, int stage, long budget) {
    ExLevel out;
    out.base = x;
    out.stage = stage;
    out.word = w;
    out.simplex = canonical_simplex(x->poset(), w);
    out.domain = iterated_complex(out.simplex.complex, stage);
    auto [st, maps] = enumerate_maps(out.domain, x, budget);
    out.status = st;
    out.elements = std::move(maps);
    return out;
}

FilteredMap ex_operator(const Poset& p, const ColorWord& w, std::span<const int> theta, int stage) {
    static std::map<std::tuple<const FilteredComplex*, std::vector<int>, int>, FilteredMap> cache;
    const SimplexSub& to = canonical_simplex(p, w);
    const SimplexSub& from = canonical_simplex(p, pull_word(w, theta));
    auto key = std::make_tuple(to.complex.get(), std::vector<int>(theta.begin(), theta.end()), stage);
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto op = sd_map_iterated(from.complex, to.complex, simplex_operator(from, to, theta), stage);
    std::lock_guard<std::mutex> lock(cache_mu);
    return cache.emplace(key, op).first->second;
}

FilteredMap ex_act(const FilteredMap& e, const ColorWord& w, std::span<const int> theta, int stage) {
    return compose(e, ex_operator(e.codomain()->poset(), w, theta, stage));
}

FilteredMap ex_face(const FilteredMap& e, const ColorWord& w, int i, int stage) {
    return ex_act(e, w, coface_map(static_cast<int>(w.size()) - 1, i), stage);
}

FilteredMap ex_degeneracy(const FilteredMap& e, const ColorWord& w, int i, int stage) {
    return ex_act(e, w, codegeneracy_map(static_cast<int>(w.size()) - 1, i), stage);
}

std::uint32_t ex_degeneracy_mask(const FilteredMap& e, const ColorWord& w, int stage) {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        if (w[i] != w[i + 1]) continue;
        auto d = ex_face(e, w, i, stage);
        auto s = ex_degeneracy(d, face(w, i), i, stage);
        if (s.images() == e.images()) mask |= 1u << i;
    }
    return mask;
}

FilteredMap iota(const ComplexPtr& x, const SimplexRef& s, int stage) {
    const SimplexSub& sub = canonical_simplex(x->poset(), x->color(s));
    return compose(classifying_map(sub, x, s), last_vertex_iterated(sub.complex, stage));
}

bool in_gamma(const FilteredMap& e, const ColorWord& w, int k) {
    return compose(e, cached_j(e.codomain()->poset(), w, k)).images() == e.images();
}

int gamma_degree(const FilteredMap& e, const ColorWord& w) {
    const int n = static_cast<int>(w.size()) - 1;
    for (int k = 0; k < n; ++k)
        if (in_gamma(e, w, k)) return k;
    return n;
}

GammaFiltration gamma_filtration(const ExLevel& level) {
    if (level.stage != 1) throw Error("the Γ filtration is defined on stage-1 levels");
    const int n = static_cast<int>(level.word.size()) - 1;
    GammaFiltration g;
    for (auto& e : level.elements) {
        std::vector<bool> m;
        for (int k = 0; k <= n; ++k) m.push_back(in_gamma(e, level.word, k));
        int deg = n;
        for (int k = n; k >= 0; --k)
            if (m[k]) deg = k;
        for (int k = 1; k <= n; ++k)
            if (m[k - 1] && !m[k]) g.monotone = false;
        if (!m[n]) g.top_is_everything = false;
        g.degree.push_back(deg);
        g.membership.push_back(std::move(m));
    }
    return g;
}

namespace {

SimplexRef eval_flat(const HornInclusion& h, const FilteredMap& lambda_flat, const SdChain& global) {
    const std::uint32_t top = global.back().first;
    auto y = h.horn.gen(top);
    if (!y) throw ValidationError("filler chain leaves the horn: top face " + face_name(top));
    SdChain local;
    for (auto& [s, q] : global) local.push_back({extract_bits(s, top), q});
    auto sdl = subdivide(h.horn.complex);
    return lambda_flat.apply(sdl->locate(h.horn.complex->ref(*y), local));
}

}  // namespace

ExFiller ex_filler(const HornInclusion& h, const FilteredMap& lambda_flat) {
    if (!is_admissible(h)) throw Error("ex_filler needs an admissible horn");
    const ComplexPtr& s0 = h.simplex.complex;
    auto stages = subdivide_iterated(s0, 3);
    const Subdivision& sd1 = *stages[0];
    const Subdivision& sd2 = *stages[1];
    const Subdivision& sd3 = *stages[2];
    const ComplexPtr& s2 = sd2.complex;
    if (lambda_flat.domain() != subdivide(h.horn.complex)->complex) throw Error("λ♭ must be defined on sd_P of the horn");
    const Poset& P = h.poset;
    const ColorWord& w = h.word;
    const int N = static_cast<int>(w.size()) - 1;
    const int p = w[h.k];
    const std::uint32_t full = (1u << (N + 1)) - 1u;
    const std::uint32_t dk = full & ~(1u << h.k);
    auto last_of_color = [&](std::uint32_t tau, int q) {
        int best = -1;
        for (int e = 0; e <= N; ++e)
            if ((tau >> e & 1u) && w[e] == q) best = e;
        if (best < 0) throw Error("face without a vertex of the requested color");
        return best;
    };
    ExFiller out;
    out.vertex_functions.resize(s2->size());
    for (int sigma = 0; sigma < s2->size(); ++sigma) {
        const int n = s2->gen(sigma).dim;
        auto& f = out.vertex_functions[sigma];
        for (int l = 0; l <= n; ++l) {
            const int v = s2->vertex(s2->ref(sigma), l);
            const auto& vcell = sd2.cells[v];
            const int ql = vcell.chain[0].second;
            const SdChain sl = global_chain(sd1, h.simplex, vcell.base);
            const std::uint32_t lv = sl.back().first;
            const bool at_top = lv == full || lv == dk;
            bool has_p = false;
            for (auto& pr : sl) has_p = has_p || pr.second == p;
            auto last_vertex_colored = [&](int q) {
                std::uint32_t tau = 0;
                for (auto& pr : sl)
                    if (pr.second == q) tau = pr.first;
                if (!tau) throw Error("simplex without a vertex of the requested color");
                return tau;
            };
            int img;
            if (P.lt(ql, p) || !has_p || !at_top)
                img = last_of_color(last_vertex_colored(ql), ql);
            else if (P.lt(p, ql))
                img = last_of_color(last_vertex_colored(p), ql);
            else if (p == ql)
                img = h.k;
            else
                throw Error("incomparable colors inside one simplex");
            f.push_back(img);
        }
    }
    std::vector<SimplexRef> images;
    images.reserve(sd3.cells.size());
    for (auto& cell : sd3.cells) {
        const auto& f = out.vertex_functions[cell.base];
        SdChain g;
        for (auto& [s, q] : cell.chain) {
            std::uint32_t m = 0;
            for (int b = 0; b < static_cast<int>(f.size()); ++b)
                if (s >> b & 1u) m |= 1u << f[b];
            g.push_back({m, q});
        }
        images.push_back(eval_flat(h, lambda_flat, g));
    }
    out.filler = FilteredMap(sd3.complex, lambda_flat.codomain(), std::move(images));
    return out;
}

FilteredMap ex_horn_restriction_target(const HornInclusion& h, const FilteredMap& lambda_flat) {
    const ComplexPtr& horn = h.horn.complex;
    auto stages = subdivide_iterated(horn, 3);
    auto lv2 = last_vertex_iterated(horn, 2);
    auto sdl = subdivide(horn);
    std::vector<SimplexRef> images;
    for (auto& cell : stages[2]->cells) images.push_back(lambda_flat.apply(sdl->locate(lv2.image(cell.base), cell.chain)));
    return FilteredMap(stages[2]->complex, lambda_flat.codomain(), std::move(images));
}

void validate_ex_filler(const HornInclusion& h, const FilteredMap& lambda_flat, const ExFiller& f) {
    f.filler.validate();
    auto inc3 = sd_map_iterated(h.horn.complex, h.simplex.complex, h.inclusion, 3);
    auto restricted = compose(f.filler, inc3);
    auto target = ex_horn_restriction_target(h, lambda_flat);
    if (restricted.images() != target.images())
        throw ValidationError("Ex filler for " + format_word(h.poset, h.word) + " at " + std::to_string(h.k) +
                              " does not restrict to the horn data");
}

ExFillerSample sample_ex_filler_problems(const ComplexPtr& x, int count, std::uint64_t seed, int max_length, long budget) {
    const Poset& P = x->poset();
    ExFillerSample out;
    std::mt19937_64 rng(seed);
    std::vector<HornInclusion> horns;
    for (int len = 2; len <= max_length; ++len)
        for (auto& w : monotone_words(P, len))
            for (int k = 0; k < len; ++k)
                if (is_admissible(w, k)) horns.push_back(horn_inclusion(P, w, k));
    for (auto& h : horns) {
        auto sd = subdivide(h.horn.complex);
        SearchOptions o;
        o.budget = budget;
        MapSearch search(sd->complex, x, o);
        auto st = search.for_each([&](const std::vector<SimplexRef>& im) {
            const long seen = out.population++;
            if (static_cast<long>(out.problems.size()) < count) {
                out.problems.push_back({h, FilteredMap(sd->complex, x, im)});
            } else {
                std::uniform_int_distribution<long> pick(0, seen);
                const long slot = pick(rng);
                if (slot < count) out.problems[slot] = {h, FilteredMap(sd->complex, x, im)};
            }
            return true;
        });
        if (st == SearchStatus::budget_exhausted) out.status = st;
    }
    return out;
}

}  // namespace strata
