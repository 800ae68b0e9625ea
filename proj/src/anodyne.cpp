#include "strata/anodyne.hpp"

#include <deque>
#include <mutex>

namespace strata {

namespace {

enum Role : char { none = 0, type2_role, type1_role, frontier_role, inside_role };

std::vector<bool> image_generators(const FilteredMap& inc) {
    std::vector<bool> in(inc.codomain()->size(), false);
    for (auto& r : inc.images())
        if (r.deg == 0) in[r.gen] = true;
    return in;
}

}  // namespace

PresentationVerdict verify_presentation(const AnodynePresentation& p) {
    PresentationVerdict v;
    const FilteredComplex& Y = *p.inclusion.codomain();
    auto fail = [&](std::string cond, std::string witness) {
        if (v.ok) {
            v.ok = false;
            v.condition = std::move(cond);
            v.witness = std::move(witness);
        }
        return v;
    };
    auto name = [&](int g) { return g >= 0 && g < Y.size() ? Y.gen(g).name : std::string("#") + std::to_string(g); };
    try {
        p.inclusion.validate();
    } catch (const Error& e) {
        return fail("monomorphism", e.what());
    }
    if (!p.inclusion.is_monomorphism()) return fail("monomorphism", "the inclusion is not injective");
    const int D = p.dim_bound < 0 ? Y.dim() : p.dim_bound;
    std::vector<char> role(Y.size(), none);
    auto inside = image_generators(p.inclusion);
    for (int g = 0; g < Y.size(); ++g)
        if (inside[g]) role[g] = inside_role;
    auto mark = [&](const std::vector<int>& gens, Role r) -> bool {
        for (int g : gens) {
            if (g < 0 || g >= Y.size()) return fail("partition", "unknown simplex " + name(g)), false;
            if (role[g] == inside_role) return fail("partition", name(g) + " lies in the subcomplex"), false;
            if (role[g] != none) return fail("partition", name(g) + " is listed twice"), false;
            if (Y.gen(g).dim > D) return fail("partition", name(g) + " exceeds the dimension bound"), false;
            role[g] = r;
        }
        return true;
    };
    if (!mark(p.type2, type2_role) || !mark(p.type1, type1_role) || !mark(p.frontier, frontier_role)) return v;
    for (int g : p.frontier)
        if (Y.gen(g).dim != D) return fail("frontier", name(g) + " is below the dimension bound");
    for (int g = 0; g < Y.size(); ++g) {
        if (Y.gen(g).dim > D || role[g] != none) continue;
        return fail("partition", name(g) + " is not classified");
    }
    if (p.phi.size() != p.type2.size()) return fail("bijection", "φ has the wrong length");
    std::vector<int> partner_of(Y.size(), -1);
    for (size_t i = 0; i < p.type2.size(); ++i) {
        const int t = p.type2[i], ps = p.phi[i];
        if (ps < 0 || ps >= Y.size()) return fail("bijection", "φ is undefined on " + name(t));
        if (role[ps] != type1_role) return fail("bijection", "φ(" + name(t) + ") = " + name(ps) + " is not of type I");
        if (partner_of[ps] >= 0) return fail("bijection", name(ps) + " is the image of two simplices");
        partner_of[ps] = t;
    }
    for (int g : p.type1)
        if (partner_of[g] < 0) return fail("bijection", name(g) + " is not in the image of φ");
    for (size_t i = 0; i < p.type2.size(); ++i) {
        const int t = p.type2[i], ps = p.phi[i];
        if (Y.gen(ps).dim != Y.gen(t).dim + 1) return fail("face", name(ps) + " is not one dimension above " + name(t));
        int found = -1, count = 0;
        for (int k = 0; k <= Y.gen(ps).dim; ++k)
            if (Y.face(Y.ref(ps), k) == Y.ref(t)) {
                found = k;
                ++count;
            }
        if (count != 1)
            return fail("face", name(t) + " is " + (count ? "several faces" : "not a face") + " of " + name(ps));
        if (!contains_color(Y.gen(t).color, Y.gen(ps).color[found]))
            return fail("color", "the vertex deleted from " + name(ps) + " has a color absent from " + name(t));
    }
    // ancestral relation: below[g] lists the simplices directly below g
    std::vector<std::vector<int>> below(Y.size());
    auto is_node = [&](int g) { return role[g] == type2_role || role[g] == type1_role || role[g] == frontier_role; };
    std::vector<int> phi_of(Y.size(), -1);
    for (size_t i = 0; i < p.type2.size(); ++i) phi_of[p.type2[i]] = p.phi[i];
    for (int g = 0; g < Y.size(); ++g) {
        if (!is_node(g)) continue;
        ++v.outside;
        auto add_faces = [&](int of, int skip) {
            for (int k = 0; k <= Y.gen(of).dim && Y.gen(of).dim > 0; ++k) {
                const int r = Y.face(Y.ref(of), k).gen;
                if (r != skip && is_node(r)) below[g].push_back(r);
            }
        };
        add_faces(g, -1);
        if (phi_of[g] >= 0) add_faces(phi_of[g], g);
        std::sort(below[g].begin(), below[g].end());
        below[g].erase(std::unique(below[g].begin(), below[g].end()), below[g].end());
    }
    v.pairs = static_cast<long>(p.type2.size());
    v.frontier = static_cast<long>(p.frontier.size());
    std::vector<int> pending(Y.size(), 0);
    std::vector<std::vector<int>> above(Y.size());
    for (int g = 0; g < Y.size(); ++g)
        for (int r : below[g]) {
            above[r].push_back(g);
            ++pending[g];
        }
    std::deque<int> ready;
    for (int g = 0; g < Y.size(); ++g)
        if (is_node(g) && pending[g] == 0) ready.push_back(g);
    while (!ready.empty()) {
        int g = ready.front();
        ready.pop_front();
        v.order.push_back(g);
        for (int u : above[g])
            if (--pending[u] == 0) ready.push_back(u);
    }
    if (static_cast<long>(v.order.size()) != v.outside) {
        // walk down through unsorted nodes until a node repeats
        int start = -1;
        for (int g = 0; g < Y.size() && start < 0; ++g)
            if (is_node(g) && pending[g] > 0) start = g;
        std::vector<int> seen(Y.size(), -1), path;
        int cur = start;
        while (seen[cur] < 0) {
            seen[cur] = static_cast<int>(path.size());
            path.push_back(cur);
            for (int r : below[cur])
                if (pending[r] > 0) {
                    cur = r;
                    break;
                }
        }
        std::string w;
        for (size_t i = seen[cur]; i < path.size(); ++i) w += name(path[i]) + " > ";
        w += name(cur);
        return fail("well-founded", "ancestral cycle " + w);
    }
    for (int t : p.type2) {
        const int d = Y.gen(t).dim;
        std::vector<char> seen(Y.size(), 0);
        std::vector<int> stack{t};
        long same = 0;
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            for (int r : below[g])
                if (!seen[r]) {
                    seen[r] = 1;
                    if (Y.gen(r).dim == d) ++same;
                    stack.push_back(r);
                }
        }
        v.max_same_dim_ancestors = std::max(v.max_same_dim_ancestors, same);
    }
    return v;
}

int choose_k_prime(const ColorWord& w, int k) {
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (i != k && w[i] == w[k]) return i;
    throw Error("no other vertex shares the color of e_k");
}

namespace {

struct HornShape {
    std::uint32_t full, dk;
    int k, kp;
};

// index of the first pair with the given mask, or -1
int first_with(const SdChain& c, std::uint32_t m) {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].first == m) return static_cast<int>(i);
    return -1;
}

int last_with(const SdChain& c, std::uint32_t m) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i].first == m) return i;
    return -1;
}

// end (inclusive) of the color run at the start and of the color steps at its last mask
std::pair<int, int> run_and_steps(const SdChain& c) {
    int t = 0;
    while (t + 1 < static_cast<int>(c.size()) && c[t + 1].second == c[0].second) ++t;
    int i = t;
    while (i + 1 < static_cast<int>(c.size()) && c[i + 1].first == c[t].first) ++i;
    return {t, i};
}

bool match_a(const HornShape& s, const SdChain& c) {
    const int b = last_with(c, s.dk);
    if (b < 0) return false;
    const int g = first_with(c, s.full);
    return g < 0 || c[b].second != c[g].second;
}

bool match_b(const HornShape& s, const SdChain& c) {
    const int b = last_with(c, s.dk);
    const int g = first_with(c, s.full);
    return b >= 0 && g >= 0 && c[b].second == c[g].second;
}

bool uniform_prefix(const HornShape& s, const SdChain& c) {
    const int g = first_with(c, s.full);
    return g >= 0 && c[0].second == c[g].second;
}

bool match_c(const HornShape& s, const SdChain& c) {
    if (first_with(c, s.dk) >= 0 || first_with(c, s.full) < 0 || uniform_prefix(s, c)) return false;
    auto [t, i] = run_and_steps(c);
    if (c[t].first == s.full) return false;
    return i == t || c[i].second != c[i + 1].second;
}

bool match_d(const HornShape& s, const SdChain& c) {
    if (first_with(c, s.dk) >= 0 || first_with(c, s.full) < 0 || uniform_prefix(s, c)) return false;
    auto [t, i] = run_and_steps(c);
    if (c[t].first == s.full) return false;
    return i > t && c[i].second == c[i + 1].second;
}

int last_without(const SdChain& c, int bit) {
    int w = -1;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i].first >> bit & 1u)) w = static_cast<int>(i);
    return w;
}

bool ef_shape(const HornShape& s, const SdChain& c) {
    return first_with(c, s.dk) < 0 && uniform_prefix(s, c) && !(c[0].first >> s.k & 1u);
}

bool gh_shape(const HornShape& s, const SdChain& c) {
    return first_with(c, s.dk) < 0 && uniform_prefix(s, c) && (c[0].first >> s.k & 1u);
}

bool match_e(const HornShape& s, const SdChain& c) {
    if (!ef_shape(s, c)) return false;
    const int w = last_without(c, s.k);
    return c[w + 1].first != (c[w].first | 1u << s.k);
}

bool match_f(const HornShape& s, const SdChain& c) {
    if (!ef_shape(s, c)) return false;
    const int w = last_without(c, s.k);
    return c[w + 1].first == (c[w].first | 1u << s.k) && c[w + 1].first != s.full;
}

bool match_g(const HornShape& s, const SdChain& c) {
    if (!gh_shape(s, c)) return false;
    const int y = last_without(c, s.kp) + 1;
    return y == 0 || c[y].first != (c[y - 1].first | 1u << s.kp);
}

bool match_h(const HornShape& s, const SdChain& c) {
    if (!gh_shape(s, c)) return false;
    const int y = last_without(c, s.kp) + 1;
    return y > 0 && c[y - 1].first == (c[y].first & ~(1u << s.kp));
}

HornShape shape_of(const ColorWord& w, int k) {
    const std::uint32_t full = (1u << w.size()) - 1u;
    return HornShape{full, full & ~(1u << k), k, choose_k_prime(w, k)};
}

SdChain partner_chain(const HornShape& s, char cls, const SdChain& c) {
    SdChain out = c;
    switch (cls) {
        case 'a': {
            const int b = last_with(c, s.dk);
            out.insert(out.begin() + b + 1, {s.full, c[b].second});
            break;
        }
        case 'c': {
            auto [t, i] = run_and_steps(c);
            out.insert(out.begin() + i + 1, {c[t].first, c[i + 1].second});
            break;
        }
        case 'e': {
            const int w = last_without(c, s.k);
            out.insert(out.begin() + w + 1, {c[w].first | 1u << s.k, c[w].second});
            break;
        }
        case 'g': {
            const int y = last_without(c, s.kp) + 1;
            out.insert(out.begin() + y, {c[y].first & ~(1u << s.kp), c[y].second});
            break;
        }
        default: throw Error("not a type II class");
    }
    return out;
}

}  // namespace

std::string sdP_horn_classes(const ColorWord& w, int k, const SdChain& c) {
    const HornShape s = shape_of(w, k);
    std::string out;
    if (match_a(s, c)) out += 'a';
    if (match_b(s, c)) out += 'b';
    if (match_c(s, c)) out += 'c';
    if (match_d(s, c)) out += 'd';
    if (match_e(s, c)) out += 'e';
    if (match_f(s, c)) out += 'f';
    if (match_g(s, c)) out += 'g';
    if (match_h(s, c)) out += 'h';
    return out;
}

AnodynePresentation generate_sdP_horn_presentation(const HornInclusion& h) {
    if (!is_admissible(h)) throw Error("the sd_P horn presentation needs an admissible horn");
    auto sdS = subdivide(h.simplex.complex);
    auto sdL = subdivide(h.horn.complex);
    AnodynePresentation p;
    p.inclusion = sd_map(*sdL, *sdS, h.inclusion);
    const FilteredComplex& Y = *sdS->complex;
    const HornShape s = shape_of(h.word, h.k);
    auto inside = image_generators(p.inclusion);
    p.classes.assign(Y.size(), '-');
    auto find_global = [&](const SdChain& c) -> int {
        const std::uint32_t top = c.back().first;
        SdChain local;
        for (auto& [m, q] : c) local.push_back({extract_bits(m, top), q});
        auto id = sdS->find(*h.simplex.gen(top), local);
        if (!id) throw Error("partner chain is not a simplex of the subdivision");
        return *id;
    };
    for (int g = 0; g < Y.size(); ++g) {
        if (inside[g]) continue;
        const SdChain c = global_chain(*sdS, h.simplex, g);
        const std::string cls = sdP_horn_classes(h.word, h.k, c);
        if (cls.size() != 1) throw Error("classification " + std::string(cls.empty() ? "gap" : "overlap") + " at " + Y.gen(g).name);
        p.classes[g] = cls[0];
        if (cls[0] == 'a' || cls[0] == 'c' || cls[0] == 'e' || cls[0] == 'g') {
            p.type2.push_back(g);
            p.phi.push_back(find_global(partner_chain(s, cls[0], c)));
        } else {
            p.type1.push_back(g);
        }
    }
    return p;
}

namespace {

std::mutex r_mu;

const FilteredMap& cached_r(const Poset& p, const ColorWord& w, int h) {
    static std::map<std::pair<const FilteredComplex*, int>, FilteredMap> cache;
    const SimplexSub& to = canonical_simplex(p, w);
    const SimplexSub& from = canonical_simplex(p, degeneracy(w, h));
    std::lock_guard<std::mutex> lock(r_mu);
    auto key = std::make_pair(to.complex.get(), h);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, structural_map_on(StructuralKind::r, h, from, to)).first;
    return it->second;
}

}  // namespace

TruncatedEx truncated_ex(const ComplexPtr& x, int dim_bound, long budget) {
    TruncatedEx t;
    t.base = x;
    t.dim_bound = dim_bound;
    const Poset& P = x->poset();
    FilteredComplex c(P);
    std::map<ColorWord, std::map<std::vector<SimplexRef>, int>> lookup;
    for (int n = 0; n <= dim_bound; ++n)
        for (auto& w : monotone_words(P, n + 1)) {
            auto level = ex_level(x, w, 1, budget);
            if (level.status == SearchStatus::budget_exhausted) t.status = SearchStatus::budget_exhausted;
            for (size_t idx = 0; idx < level.elements.size(); ++idx) {
                const auto& e = level.elements[idx];
                if (ex_degeneracy_mask(e, w) != 0) continue;
                std::vector<SimplexRef> faces;
                for (int i = 0; i <= n && n > 0; ++i) {
                    const ColorWord fw = face(w, i);
                    auto f = ex_face(e, w, i);
                    const std::uint32_t m = ex_degeneracy_mask(f, fw);
                    std::vector<int> theta;
                    for (int j = 0; j < n; ++j)
                        if (j == 0 || !(m >> (j - 1) & 1u)) theta.push_back(j);
                    ColorWord rw;
                    for (int j : theta) rw.push_back(fw[j]);
                    auto root = ex_act(f, fw, theta);
                    auto& tab = lookup[rw];
                    auto it = tab.find(root.images());
                    if (it == tab.end()) throw Error("face of an Ex element is missing from the truncation");
                    faces.push_back(SimplexRef{it->second, n - 1, m});
                }
                const int id = c.add("e" + std::to_string(idx) + format_word(P, w), w, std::move(faces));
                lookup[w].emplace(e.images(), id);
                t.words.push_back(w);
                t.elements.push_back(e);
            }
        }
    t.complex = finalize(std::move(c));
    std::vector<SimplexRef> im;
    for (int g = 0; g < x->size(); ++g) {
        if (x->gen(g).dim > dim_bound) throw Error("the complex has simplices above the truncation bound");
        auto e = iota(x, x->ref(g));
        auto& tab = lookup[x->gen(g).color];
        auto it = tab.find(e.images());
        if (it == tab.end()) throw Error("ι(x) is missing from the truncation");
        im.push_back(t.complex->ref(it->second));
    }
    t.iota = FilteredMap(x, t.complex, std::move(im));
    return t;
}

ExPresentation generate_ex_presentation(const ComplexPtr& x, int dim_bound, long budget) {
    ExPresentation out;
    out.ex = truncated_ex(x, dim_bound, budget);
    if (out.ex.status == SearchStatus::budget_exhausted) throw Error("budget exhausted while enumerating Ex levels");
    auto& p = out.presentation;
    p.inclusion = out.ex.iota;
    p.dim_bound = dim_bound;
    const FilteredComplex& Y = *out.ex.complex;
    const Poset& P = x->poset();
    auto inside = image_generators(p.inclusion);
    std::map<ColorWord, std::map<std::vector<SimplexRef>, int>> lookup;
    for (int g = 0; g < Y.size(); ++g) lookup[out.ex.words[g]].emplace(out.ex.elements[g].images(), g);
    p.classes.assign(Y.size(), '-');
    for (int g = 0; g < Y.size(); ++g) {
        if (inside[g]) continue;
        const ColorWord& w = out.ex.words[g];
        const FilteredMap& e = out.ex.elements[g];
        const int n = static_cast<int>(w.size()) - 1;
        bool type1 = false;
        for (int k = 1; k + 1 <= n && !type1; ++k) {
            if (w[k] != w[k + 1]) continue;
            const ColorWord u = face(w, k + 1);
            auto tau = ex_face(e, w, k + 1);
            if (gamma_degree(tau, u) != k) continue;
            if (compose(tau, cached_r(P, u, k)).images() == e.images()) type1 = true;
        }
        if (type1) {
            p.type1.push_back(g);
            p.classes[g] = 'I';
            continue;
        }
        const int h = gamma_degree(e, w);
        p.classes[g] = 'X';
        if (h == 0) {
            out.undefined_phi.push_back(g);
            p.type2.push_back(g);
            p.phi.push_back(-1);
            continue;
        }
        if (n == dim_bound) {
            p.frontier.push_back(g);
            continue;
        }
        auto psi = compose(e, cached_r(P, w, h));
        auto& tab = lookup[degeneracy(w, h)];
        auto it = tab.find(psi.images());
        p.type2.push_back(g);
        p.phi.push_back(it == tab.end() ? -1 : it->second);
        if (it == tab.end()) out.undefined_phi.push_back(g);
    }
    for (int g : p.type2) p.classes[g] = 'X';
    return out;
}

Subcomplex induced_subcomplex(const ComplexPtr& c, const std::vector<bool>& keep) {
    Subcomplex s;
    s.index.assign(c->size(), -1);
    FilteredComplex sub(c->poset());
    std::vector<SimplexRef> im;
    for (int g = 0; g < c->size(); ++g) {
        if (!keep[g]) continue;
        std::vector<SimplexRef> faces;
        for (auto f : c->gen(g).faces) {
            if (s.index[f.gen] < 0) throw Error("subcomplex is not closed under faces at " + c->gen(g).name);
            f.gen = s.index[f.gen];
            faces.push_back(f);
        }
        s.index[g] = sub.add(c->gen(g).name, c->gen(g).color, std::move(faces));
        im.push_back(c->ref(g));
    }
    s.complex = finalize(std::move(sub));
    s.inclusion = FilteredMap(s.complex, c, std::move(im));
    return s;
}

PrismPresentation generate_prism_presentation(const FilteredMap& mono, int end) {
    if (end != 0 && end != 1) throw Error("prism end must be 0 or 1");
    if (!mono.is_monomorphism()) throw Error("prism presentations need a monomorphism");
    const ComplexPtr& Y = mono.codomain();
    SimplexSub interval = standard_simplex_sub(Poset::point(), {0, 0});
    PrismPresentation out;
    out.cylinder = tensor(Y, interval.complex, Y->dim() + 1);
    const FilteredComplex& C = *out.cylinder.complex;
    auto in_x = image_generators(mono);
    auto ones = [&](const SimplexRef& b) {
        std::vector<int> bits;
        for (int v : interval.complex->vertices(b)) bits.push_back(interval.mask[v] == 0b10 ? 1 : 0);
        return bits;
    };
    std::vector<bool> keep(C.size());
    for (int g = 0; g < C.size(); ++g) {
        const auto& [a, b] = out.cylinder.parts[g];
        auto bits = ones(b);
        const bool constant_end = std::all_of(bits.begin(), bits.end(), [&](int t) { return t == end; });
        keep[g] = in_x[a.gen] || constant_end;
    }
    out.sub = induced_subcomplex(out.cylinder.complex, keep);
    auto& p = out.presentation;
    p.inclusion = out.sub.inclusion;
    p.classes.assign(C.size(), '-');
    const SimplexRef edge = interval.complex->ref(*interval.gen(0b11));
    for (int g = 0; g < C.size(); ++g) {
        if (keep[g]) continue;
        const auto& [a, b] = out.cylinder.parts[g];
        if (a.deg != 0) {
            p.type1.push_back(g);
            p.classes[g] = 'C';
            continue;
        }
        auto bits = ones(b);
        const int n = a.dim;
        const int z0 = static_cast<int>(std::count(bits.begin(), bits.end(), 0));
        const int j = end == 0 ? z0 : z0 - 1;
        std::vector<int> theta;
        for (int i = 0; i <= j; ++i) theta.push_back(0);
        while (static_cast<int>(theta.size()) < n + 2) theta.push_back(1);
        auto psi = out.cylinder.lookup(Y->degeneracy(a, j), interval.complex->act(edge, theta));
        if (psi.deg != 0) throw Error("prism partner is degenerate");
        p.type2.push_back(g);
        p.phi.push_back(psi.gen);
        p.classes[g] = end == 0 ? 'A' : 'B';
    }
    return out;
}

std::optional<FilteredMap> extend_along_presentation(const AnodynePresentation& p, const PresentationVerdict& v,
                                                     const FilteredMap& f, long budget) {
    if (!v.ok) throw Error("cannot extend along a rejected presentation");
    if (!p.frontier.empty()) throw Error("cannot extend along a truncated presentation with a frontier");
    const FilteredComplex& Y = *p.inclusion.codomain();
    const ComplexPtr& Z = f.codomain();
    std::vector<std::optional<SimplexRef>> val(Y.size());
    for (int g = 0; g < p.inclusion.domain()->size(); ++g) val[p.inclusion.image(g).gen] = f.image(g);
    auto apply = [&](const SimplexRef& r) -> SimplexRef {
        if (!val[r.gen]) throw Error("extension order reaches an undefined simplex " + Y.gen(r.gen).name);
        return Z->act(*val[r.gen], surj::values(r.dim, r.deg));
    };
    std::vector<int> phi_of(Y.size(), -1);
    for (size_t i = 0; i < p.type2.size(); ++i) phi_of[p.type2[i]] = p.phi[i];
    for (int t : v.order) {
        if (phi_of[t] < 0 || val[t]) continue;
        const int psi = phi_of[t];
        const ColorWord w = Y.gen(psi).color;
        int k = 0;
        while (Y.face(Y.ref(psi), k) != Y.ref(t)) ++k;
        HornInclusion h = horn_inclusion(Z->poset(), w, k);
        std::vector<SimplexRef> lam;
        for (int hg = 0; hg < h.horn.complex->size(); ++hg) lam.push_back(apply(Y.restrict(Y.ref(psi), h.horn.mask[hg])));
        auto fill = find_filler(h, FilteredMap(h.horn.complex, Z, std::move(lam)), budget);
        if (!fill.filler) return std::nullopt;
        val[psi] = fill.filler->image(*h.simplex.gen((1u << w.size()) - 1u));
        val[t] = Z->face(*val[psi], k);
    }
    std::vector<SimplexRef> im;
    for (int g = 0; g < Y.size(); ++g) {
        if (!val[g]) throw Error("extension left " + Y.gen(g).name + " undefined");
        im.push_back(*val[g]);
    }
    return FilteredMap(p.inclusion.codomain(), Z, std::move(im));
}

}  // namespace strata
