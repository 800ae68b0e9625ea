#include "strata/subdivision.hpp"

#include <mutex>

namespace strata {

namespace {

int top_bit(std::uint32_t m) { return 31 - __builtin_clz(m); }

std::uint64_t encode(const SdPair& p) { return (static_cast<std::uint64_t>(p.first) << 16) | static_cast<std::uint64_t>(p.second); }

std::vector<std::uint64_t> key_of(int base, const SdChain& c) {
    std::vector<std::uint64_t> k;
    k.reserve(c.size() + 1);
    k.push_back(static_cast<std::uint64_t>(base));
    for (auto& p : c) k.push_back(encode(p));
    return k;
}

std::string mask_digits(std::uint32_t m) {
    std::string s;
    bool wide = m >> 10 != 0;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1u) {
            if (wide && !s.empty()) s += '_';
            s += std::to_string(i);
        }
    return s;
}

// strictly increasing chains ending at the full mask
void enumerate_chains(const Poset& p, const ColorWord& w, SdMode mode, const std::function<void(const SdChain&)>& out) {
    const int n = static_cast<int>(w.size());
    const std::uint32_t full = (1u << n) - 1u;
    auto color_of = [&](std::uint32_t s) {
        if (mode == SdMode::classical) return 0;
        return w[top_bit(s)];
    };
    SdChain chain;
    if (mode != SdMode::filtered) {
        std::function<void(std::uint32_t)> rec = [&](std::uint32_t s) {
            chain.push_back({s, color_of(s)});
            if (s == full)
                out(chain);
            else
                for (std::uint32_t t = full; t > s; t = (t - 1) & full)
                    if ((t & s) == s && t != s) rec(t);
            chain.pop_back();
        };
        // ascending order of the bottom mask for determinism
        for (std::uint32_t s = 1; s <= full; ++s) rec(s);
        return;
    }
    std::vector<int> allowed;
    std::function<void()> rec = [&]() {
        const auto [s, q] = chain.back();
        if (s == full) out(chain);
        for (std::uint32_t t = s; t <= full; ++t) {
            if ((t & s) != s) continue;
            for (int r : allowed) {
                if (!p.leq(q, r)) continue;
                if (t == s && r == q) continue;
                chain.push_back({t, r});
                rec();
                chain.pop_back();
            }
        }
    };
    for (std::uint32_t s = 1; s <= full; ++s) {
        allowed.clear();
        for (int i = 0; i < n; ++i)
            if (s >> i & 1u)
                if (std::find(allowed.begin(), allowed.end(), w[i]) == allowed.end()) allowed.push_back(w[i]);
        std::sort(allowed.begin(), allowed.end());
        for (int q : allowed) {
            chain.assign(1, {s, q});
            rec();
        }
    }
}

std::string cell_name(const Poset& p, const std::string& base, const SdChain& c, SdMode mode) {
    std::string s = base + "<";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += '|';
        s += mask_digits(c[i].first);
        if (mode == SdMode::filtered) s += ":" + p.name(c[i].second);
    }
    return s + ">";
}

SubdivisionPtr build(const ComplexPtr& x, SdMode mode) {
    auto sd = std::make_shared<Subdivision>();
    sd->source = x;
    sd->mode = mode;
    const Poset out_poset = mode == SdMode::classical ? Poset::point() : x->poset();
    std::vector<std::vector<SdCell>> by_dim;
    for (int g = 0; g < x->size(); ++g) {
        const auto& gen = x->gen(g);
        enumerate_chains(x->poset(), gen.color, mode, [&](const SdChain& c) {
            const size_t d = c.size() - 1;
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].push_back(SdCell{g, c});
        });
    }
    FilteredComplex c(out_poset);
    for (size_t d = 0; d < by_dim.size(); ++d)
        for (auto& cell : by_dim[d]) {
            std::vector<SimplexRef> faces;
            if (d > 0)
                for (size_t i = 0; i <= d; ++i) {
                    SdChain f = cell.chain;
                    f.erase(f.begin() + static_cast<long>(i));
                    faces.push_back(sd->locate(x->ref(cell.base), f));
                }
            ColorWord color;
            for (auto& pr : cell.chain) color.push_back(pr.second);
            int id = c.add(cell_name(x->poset(), x->gen(cell.base).name, cell.chain, mode), color, std::move(faces));
            sd->index.emplace(key_of(cell.base, cell.chain), id);
            sd->cells.push_back(cell);
        }
    sd->complex = finalize(std::move(c));
    return sd;
}

}  // namespace

std::string mode_name(SdMode m) {
    switch (m) {
        case SdMode::filtered: return "filtered";
        case SdMode::naive: return "naive";
        case SdMode::classical: return "classical";
    }
    return "";
}

SdMode parse_mode(std::string_view s) {
    if (s == "filtered") return SdMode::filtered;
    if (s == "naive") return SdMode::naive;
    if (s == "classical") return SdMode::classical;
    throw Error("unknown subdivision mode '" + std::string(s) + "'");
}

size_t Subdivision::KeyHash::operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) h = (h ^ v) * 1099511628211ull;
    return static_cast<size_t>(h);
}

std::uint32_t deposit_bits(std::uint32_t local, std::uint32_t positions) {
    std::uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i)
        if (positions >> i & 1u) {
            if (local >> j & 1u) out |= 1u << i;
            ++j;
        }
    return out;
}

std::uint32_t extract_bits(std::uint32_t global, std::uint32_t positions) {
    std::uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i)
        if (positions >> i & 1u) {
            if (global >> i & 1u) out |= 1u << j;
            ++j;
        }
    return out;
}

std::optional<int> Subdivision::find(int base, const SdChain& c) const {
    auto it = index.find(key_of(base, c));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

SimplexRef Subdivision::locate(const SimplexRef& x, const SdChain& c) const {
    if (c.empty()) throw Error("empty chain");
    const std::uint32_t top = c.back().first;
    const SimplexRef y = source->restrict(x, top);
    const auto vals = surj::values(y.dim, y.deg);
    SdChain pushed;
    pushed.reserve(c.size());
    for (auto& [s, q] : c) {
        std::uint32_t local = extract_bits(s, top);
        std::uint32_t img = 0;
        for (int b = 0; b <= y.dim; ++b)
            if (local >> b & 1u) img |= 1u << vals[b];
        pushed.push_back({img, q});
    }
    SdChain nd;
    std::uint32_t mask = 0;
    for (size_t j = 0; j < pushed.size(); ++j) {
        if (j > 0 && pushed[j] == pushed[j - 1]) {
            mask |= 1u << (j - 1);
            continue;
        }
        nd.push_back(pushed[j]);
    }
    auto id = find(y.gen, nd);
    if (!id) throw Error("chain outside the subdivision of '" + source->gen(y.gen).name + "'");
    return SimplexRef{*id, static_cast<int>(c.size()) - 1, mask};
}

SubdivisionPtr subdivide(const ComplexPtr& x, SdMode mode) {
    static std::mutex mu;
    static std::map<std::pair<const FilteredComplex*, int>, SubdivisionPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(x.get(), static_cast<int>(mode));
    auto it = cache.find(key);
    if (it != cache.end() && it->second->source == x) return it->second;
    auto sd = build(x, mode);
    cache[key] = sd;
    return sd;
}

std::vector<SubdivisionPtr> subdivide_iterated(const ComplexPtr& x, int k, SdMode mode) {
    std::vector<SubdivisionPtr> out;
    ComplexPtr cur = x;
    for (int i = 0; i < k; ++i) {
        out.push_back(subdivide(cur, mode));
        cur = out.back()->complex;
    }
    return out;
}

ComplexPtr iterated_complex(const ComplexPtr& x, int k, SdMode mode) {
    if (k == 0) return x;
    return subdivide_iterated(x, k, mode).back()->complex;
}

FilteredMap sd_map(const Subdivision& from, const Subdivision& to, const FilteredMap& f) {
    std::vector<SimplexRef> im;
    im.reserve(from.cells.size());
    for (auto& cell : from.cells) im.push_back(to.locate(f.image(cell.base), cell.chain));
    return FilteredMap(from.complex, to.complex, std::move(im));
}

FilteredMap sd_map_iterated(const ComplexPtr& dom, const ComplexPtr& cod, const FilteredMap& f, int k, SdMode mode) {
    FilteredMap g = f;
    ComplexPtr a = dom, b = cod;
    for (int i = 0; i < k; ++i) {
        auto sa = subdivide(a, mode), sb = subdivide(b, mode);
        g = sd_map(*sa, *sb, g);
        a = sa->complex;
        b = sb->complex;
    }
    return g;
}

FilteredMap last_vertex_map(const Subdivision& sd) {
    const auto& x = *sd.source;
    std::vector<SimplexRef> im;
    im.reserve(sd.cells.size());
    for (auto& cell : sd.cells) {
        const auto& w = x.gen(cell.base).color;
        std::vector<int> theta;
        for (auto& [s, q] : cell.chain) {
            int best = -1;
            for (int i = 0; i < static_cast<int>(w.size()); ++i)
                if ((s >> i & 1u) && (sd.mode != SdMode::filtered || w[i] == q)) best = i;
            theta.push_back(best);
        }
        im.push_back(x.act(x.ref(cell.base), theta));
    }
    ComplexPtr cod = sd.mode == SdMode::classical ? underlying(sd.source) : sd.source;
    return FilteredMap(sd.complex, cod, std::move(im));
}

FilteredMap last_vertex_iterated(const ComplexPtr& x, int k) {
    if (k == 0) return identity_map(x);
    auto stages = subdivide_iterated(x, k);
    FilteredMap g = last_vertex_map(*stages[0]);
    for (int i = 1; i < k; ++i) g = compose(g, last_vertex_map(*stages[i]));
    return g;
}

SdChain global_chain(const Subdivision& sd, const SimplexSub& sub, int cell) {
    const auto& c = sd.cells.at(cell);
    const std::uint32_t pos = sub.mask.at(c.base);
    SdChain out;
    out.reserve(c.chain.size());
    for (auto& [s, q] : c.chain) out.push_back({deposit_bits(s, pos), q});
    return out;
}

FilteredMap lift_vertex_function(const SimplexSub& from, const SimplexSub& to,
                                 const std::function<std::uint32_t(std::uint32_t)>& f, SdMode mode) {
    auto sf = subdivide(from.complex, mode);
    auto st = subdivide(to.complex, mode);
    const std::uint32_t full = (1u << to.word.size()) - 1u;
    auto top = to.gen(full);
    if (!top) throw Error("lift target must be a full simplex");
    const SimplexRef topref = to.complex->ref(*top);
    std::vector<SimplexRef> im;
    im.reserve(sf->cells.size());
    for (int c = 0; c < static_cast<int>(sf->cells.size()); ++c) {
        SdChain g = global_chain(*sf, from, c);
        for (auto& [s, q] : g) {
            const std::uint32_t t = f(s);
            if (t == 0 || (t & ~full)) throw Error("vertex function leaves the target simplex");
            if (mode == SdMode::naive && to.word[top_bit(t)] != q) throw Error("vertex function does not preserve colors");
            s = t;
        }
        if (mode == SdMode::filtered) {
            ColorWord base;
            for (int i = 0; i < static_cast<int>(to.word.size()); ++i)
                if (g.front().first >> i & 1u) base.push_back(to.word[i]);
            for (auto& pr : g)
                if (!contains_color(base, pr.second)) throw Error("lifted chain loses a color of its smallest face");
        }
        im.push_back(st->locate(topref, g));
    }
    return FilteredMap(sf->complex, st->complex, std::move(im));
}

FilteredMap functor_G(const SimplexSub& from, const SimplexSub& to, const FilteredMap& naive) {
    auto nf = subdivide(from.complex, SdMode::naive);
    auto nt = subdivide(to.complex, SdMode::naive);
    if (naive.domain() != nf->complex || naive.codomain()->size() != nt->complex->size())
        throw Error("G expects a map between the naive subdivisions");
    std::map<std::uint32_t, std::uint32_t> table;
    for (int c = 0; c < static_cast<int>(nf->cells.size()); ++c) {
        if (nf->cells[c].chain.size() != 1) continue;
        const SimplexRef& v = naive.image(c);
        if (v.dim != 0) throw Error("naive map sends a vertex to a higher simplex");
        table[global_chain(*nf, from, c)[0].first] = global_chain(*nt, to, v.gen)[0].first;
    }
    return lift_vertex_function(from, to, [&](std::uint32_t s) { return table.at(s); }, SdMode::filtered);
}

std::function<std::uint32_t(std::uint32_t)> structural_vertex_function(StructuralKind kind, int k) {
    auto single = [kind, k](int i) -> std::uint32_t {
        switch (kind) {
            case StructuralKind::j: return i <= k ? 1u << i : (1u << (i + 1)) - 1u;
            case StructuralKind::r:
                if (i <= k) return 1u << i;
                if (i == k + 1) return (1u << (k + 1)) - 1u;
                return 1u << (i - 1);
            case StructuralKind::sd_d: return 1u << (i < k ? i : i + 1);
            case StructuralKind::sd_s: return 1u << (i <= k ? i : i - 1);
        }
        return 0;
    };
    return [single](std::uint32_t s) {
        std::uint32_t out = 0;
        for (int i = 0; i < 32; ++i)
            if (s >> i & 1u) out |= single(i);
        return out;
    };
}

FilteredMap structural_map_on(StructuralKind kind, int k, const SimplexSub& from, const SimplexSub& to, SdMode mode) {
    return lift_vertex_function(from, to, structural_vertex_function(kind, k), mode);
}

StructuralMap structural_map(StructuralKind kind, int k, const Poset& p, const ColorWord& w, SdMode mode) {
    const int n = static_cast<int>(w.size()) - 1;
    StructuralMap out{kind, k, {}, {}, {}};
    out.to = standard_simplex_sub(p, w);
    switch (kind) {
        case StructuralKind::j:
            if (k < 0 || k > n) throw Error("j^k needs 0 <= k <= n");
            out.from = out.to;
            break;
        case StructuralKind::r:
            if (k < 1 || k > n) throw Error("r^k needs 1 <= k <= n");
            out.from = standard_simplex_sub(p, degeneracy(w, k));
            break;
        case StructuralKind::sd_d:
            if (n < 1 || k < 0 || k > n) throw Error("sd(d^k) needs 0 <= k <= n and n >= 1");
            out.from = standard_simplex_sub(p, face(w, k));
            break;
        case StructuralKind::sd_s:
            if (k < 0 || k > n) throw Error("sd(s^k) needs 0 <= k <= n");
            out.from = standard_simplex_sub(p, degeneracy(w, k));
            break;
    }
    out.map = structural_map_on(kind, k, out.from, out.to, mode);
    return out;
}

}  // namespace strata
