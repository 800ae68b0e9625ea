#include "strata/invariants.hpp"

#include <deque>
#include <mutex>
#include <numeric>

namespace strata {

namespace {

SearchStatus merge(SearchStatus a, SearchStatus b) {
    return a == SearchStatus::budget_exhausted || b == SearchStatus::budget_exhausted ? SearchStatus::budget_exhausted
                                                                                      : SearchStatus::complete;
}

int find_root(std::vector<int>& p, int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
}

// classes numbered by first member
std::pair<std::vector<int>, int> number_classes(std::vector<int>& uf) {
    std::vector<int> cls(uf.size(), -1), of_root(uf.size(), -1);
    int count = 0;
    for (size_t i = 0; i < uf.size(); ++i) {
        const int r = find_root(uf, static_cast<int>(i));
        if (of_root[r] < 0) of_root[r] = count++;
        cls[i] = of_root[r];
    }
    return {cls, count};
}

std::mutex cyl_mu;

// Δ^w ⊗ Δ^n with a stable address per (word, n)
const Product& simplex_cylinder(const Poset& p, const ColorWord& w, int n) {
    static std::map<std::tuple<const FilteredComplex*, int>, Product> cache;
    const SimplexSub& s = canonical_simplex(p, w);
    std::lock_guard<std::mutex> lock(cyl_mu);
    auto key = std::make_tuple(s.complex.get(), n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, tensor(s.complex, plain_simplex(n), static_cast<int>(w.size()) - 1 + n)).first;
    return it->second;
}

// sd^k of id ⊗ θ: Δ^w ⊗ Δ^m -> Δ^w ⊗ Δ^n
FilteredMap cylinder_operator(const Poset& p, const ColorWord& w, int m, int n, std::span<const int> theta, int k) {
    const Product& lower = simplex_cylinder(p, w, m);
    const Product& upper = simplex_cylinder(p, w, n);
    FilteredMap op = plain_operator(m, n, theta);
    return sd_map_iterated(lower.complex, upper.complex, tensor_map(lower, upper, nullptr, &op), k);
}

// sd^k of θ ⊗ id: Δ^{θ*w} ⊗ Δ^n -> Δ^w ⊗ Δ^n
FilteredMap cylinder_base_operator(const Poset& p, const ColorWord& w, std::span<const int> theta, int n, int k) {
    ColorWord u;
    for (int t : theta) u.push_back(w.at(t));
    const Product& lower = simplex_cylinder(p, u, n);
    const Product& upper = simplex_cylinder(p, w, n);
    FilteredMap op = simplex_operator(canonical_simplex(p, u), canonical_simplex(p, w), theta);
    return sd_map_iterated(lower.complex, upper.complex, tensor_map(lower, upper, &op, nullptr), k);
}

std::map<std::vector<SimplexRef>, int> index_maps(const std::vector<FilteredMap>& maps) {
    std::map<std::vector<SimplexRef>, int> idx;
    for (size_t i = 0; i < maps.size(); ++i) idx.emplace(maps[i].images(), static_cast<int>(i));
    return idx;
}

}  // namespace

EdgePathGroup edge_path_group(const EdgePathData& d, int basepoint, bool reverse_order) {
    if (basepoint < 0 || basepoint >= d.vertices) throw Error("basepoint is not a vertex");
    EdgePathGroup g;
    g.basepoint = basepoint;
    g.parent.assign(d.vertices, -1);
    g.parent_edge.assign(d.vertices, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(d.vertices);
    const int ne = static_cast<int>(d.edges.size());
    for (int k = 0; k < ne; ++k) {
        const int e = reverse_order ? ne - 1 - k : k;
        auto [s, t] = d.edges[e];
        if (s == t) continue;
        adj[s].push_back({e, t});
        adj[t].push_back({e, s});
    }
    std::vector<char> seen(d.vertices, 0);
    std::deque<int> q{basepoint};
    seen[basepoint] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        g.component.push_back(v);
        for (auto [e, u] : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                g.parent[u] = v;
                g.parent_edge[u] = e;
                q.push_back(u);
            }
    }
    std::sort(g.component.begin(), g.component.end());
    std::vector<char> tree(ne, 0);
    for (int v = 0; v < d.vertices; ++v)
        if (g.parent_edge[v] >= 0) tree[g.parent_edge[v]] = 1;
    g.generator_of_edge.assign(ne, -1);
    for (int e = 0; e < ne; ++e) {
        if (tree[e] || !seen[d.edges[e].first]) continue;
        g.generator_of_edge[e] = g.group.generators++;
        g.group.names.push_back(e < static_cast<int>(d.edge_names.size()) ? d.edge_names[e] : "e" + std::to_string(e));
        g.loop_of_generator.push_back(e);
    }
    auto letter = [&](int e, int sign, GroupWord& w) {
        if (e >= 0 && g.generator_of_edge[e] >= 0) w.push_back(sign * (g.generator_of_edge[e] + 1));
    };
    for (auto& t : d.triangles) {
        int any = -1;
        for (int e : t)
            if (e >= 0) any = e;
        if (any < 0 || !seen[d.edges[any].first]) continue;
        GroupWord w;
        letter(t[2], 1, w);
        letter(t[0], 1, w);
        letter(t[1], -1, w);
        w = free_reduce(std::move(w));
        if (!w.empty()) g.group.relators.push_back(std::move(w));
    }
    return g;
}

namespace {

// tree path from the root to v as (edge, sign) steps
std::vector<std::pair<int, int>> root_path(const EdgePathData& d, const EdgePathGroup& g, int v) {
    std::vector<std::pair<int, int>> up;
    while (g.parent[v] >= 0) {
        const int e = g.parent_edge[v];
        up.push_back({e, d.edges[e].first == g.parent[v] ? 1 : -1});
        v = g.parent[v];
    }
    std::reverse(up.begin(), up.end());
    return up;
}

}  // namespace

std::vector<GroupWord> induced_homomorphism(const EdgePathData& src, const EdgePathGroup& gs, const EdgePathGroup& gt,
                                            const std::vector<int>& vertex_map, const std::vector<int>& edge_map) {
    const int b = vertex_map.at(gs.basepoint);
    if (!std::binary_search(gt.component.begin(), gt.component.end(), b))
        throw Error("the image of the basepoint lies outside the target component");
    std::vector<GroupWord> out;
    auto push = [&](int e, int sign, GroupWord& w) {
        const int te = edge_map.at(e);
        if (te >= 0 && gt.generator_of_edge[te] >= 0) w.push_back(sign * (gt.generator_of_edge[te] + 1));
    };
    for (int e : gs.loop_of_generator) {
        GroupWord w;
        auto [s, t] = src.edges[e];
        for (auto [pe, sg] : root_path(src, gs, s)) push(pe, sg, w);
        push(e, 1, w);
        auto back = root_path(src, gs, t);
        for (auto it = back.rbegin(); it != back.rend(); ++it) push(it->first, -it->second, w);
        out.push_back(free_reduce(std::move(w)));
    }
    return out;
}

ComplexEdgePath edge_path_data(const ComplexPtr& k) {
    ComplexEdgePath c;
    c.vertex_index.assign(k->size(), -1);
    c.edge_index.assign(k->size(), -1);
    for (int v : k->of_dim(0)) {
        c.vertex_index[v] = c.data.vertices++;
        c.data.vertex_names.push_back(k->gen(v).name);
    }
    if (k->dim() >= 1)
        for (int e : k->of_dim(1)) {
            c.edge_index[e] = static_cast<int>(c.data.edges.size());
            const auto& f = k->gen(e).faces;
            c.data.edges.push_back({c.vertex_index[f[1].gen], c.vertex_index[f[0].gen]});
            c.data.edge_names.push_back(k->gen(e).name);
        }
    if (k->dim() >= 2)
        for (int t : k->of_dim(2)) {
            std::array<int, 3> tri{};
            for (int i = 0; i < 3; ++i) {
                const auto& f = k->gen(t).faces[i];
                tri[i] = f.deg == 0 ? c.edge_index[f.gen] : -1;
            }
            c.data.triangles.push_back(tri);
        }
    return c;
}

EdgePathGroup edge_path_pi1(const ComplexPtr& k, int basepoint_gen, bool reverse_order) {
    if (basepoint_gen < 0 || basepoint_gen >= k->size() || k->gen(basepoint_gen).dim != 0)
        throw Error("basepoint is not a vertex of the complex");
    auto c = edge_path_data(k);
    return edge_path_group(c.data, c.vertex_index[basepoint_gen], reverse_order);
}

std::vector<GroupWord> induced_by_map(const FilteredMap& f, const EdgePathGroup& gs, const EdgePathGroup& gt) {
    auto src = edge_path_data(f.domain());
    auto tgt = edge_path_data(f.codomain());
    std::vector<int> vmap(src.data.vertices), emap(src.data.edges.size());
    for (int g = 0; g < f.domain()->size(); ++g) {
        const SimplexRef& r = f.image(g);
        if (src.vertex_index[g] >= 0) vmap[src.vertex_index[g]] = tgt.vertex_index[r.gen];
        if (src.edge_index[g] >= 0) emap[src.edge_index[g]] = r.deg == 0 ? tgt.edge_index[r.gen] : -1;
    }
    return induced_homomorphism(src.data, gs, gt, vmap, emap);
}

Pointing empty_pointing(const ComplexPtr& x) {
    Pointing p;
    p.v = empty_complex(x->poset());
    p.to_nerve = FilteredMap(p.v, nerve(x->poset()), {});
    p.phi = FilteredMap(p.v, x, {});
    return p;
}

Pointing simplex_pointing(const ComplexPtr& x, const SimplexRef& s) {
    const Poset& P = x->poset();
    const ColorWord w = x->color(s);
    if (!is_strict(P, w)) throw Error("a simplex pointing needs a simplex with a non-degenerate color word");
    const SimplexSub& sub = canonical_simplex(P, w);
    auto n = nerve(P);
    int target = -1;
    for (int g = 0; g < n->size() && target < 0; ++g)
        if (n->gen(g).color == w) target = g;
    if (target < 0) throw Error("word missing from the nerve");
    Pointing p;
    p.v = sub.complex;
    p.to_nerve = classifying_map(sub, n, n->ref(target));
    p.phi = classifying_map(sub, x, s);
    return p;
}

void validate_pointing(const Pointing& p) {
    p.to_nerve.validate();
    p.phi.validate();
    if (p.to_nerve.domain() != p.v || p.phi.domain() != p.v) throw ValidationError("pointing maps must start at V");
    if (!p.to_nerve.is_monomorphism()) throw ValidationError("V is not a subcomplex of the nerve");
}

std::optional<FilteredMap> restrict_pointing(const Pointing& p, const ColorWord& w) {
    for (int g = 0; g < p.v->size(); ++g)
        if (p.v->gen(g).color == w)
            return compose(p.phi, classifying_map(canonical_simplex(p.v->poset(), w), p.v, p.v->ref(g)));
    return std::nullopt;
}

std::optional<int> Spi0Level::class_of(const FilteredMap& e) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].images() == e.images()) return cls[i];
    return std::nullopt;
}

Spi0Level spi0_level(const ComplexPtr& x, const ColorWord& w, int stage, long budget) {
    const Poset& P = x->poset();
    Spi0Level out;
    out.word = w;
    out.stage = stage;
    auto level = ex_level(x, w, stage, budget);
    out.status = level.status;
    out.elements = std::move(level.elements);
    if (out.status == SearchStatus::budget_exhausted) {
        out.cls.resize(out.elements.size());
        std::iota(out.cls.begin(), out.cls.end(), 0);
        out.classes = static_cast<int>(out.elements.size());
        return out;
    }
    auto idx = index_maps(out.elements);
    const Product& cyl = simplex_cylinder(P, w, 1);
    const ComplexPtr& base = canonical_simplex(P, w).complex;
    auto s0 = sd_map_iterated(base, cyl.complex, tensor_end(cyl, 0), stage);
    auto s1 = sd_map_iterated(base, cyl.complex, tensor_end(cyl, 1), stage);
    std::vector<int> vars;
    for (auto& r : s0.images()) vars.push_back(r.gen);
    for (auto& r : s1.images()) vars.push_back(r.gen);
    std::vector<int> uf(out.elements.size());
    std::iota(uf.begin(), uf.end(), 0);
    SearchOptions o;
    o.budget = budget;
    MapSearch search(iterated_complex(cyl.complex, stage), x, o);
    const size_t n = s0.images().size();
    auto ends = [&](const std::vector<SimplexRef>& v) {
        auto a = idx.find(std::vector<SimplexRef>(v.begin(), v.begin() + n));
        auto b = idx.find(std::vector<SimplexRef>(v.begin() + n, v.end()));
        if (a == idx.end() || b == idx.end()) throw Error("homotopy end outside the enumerated level");
        return std::pair{a->second, b->second};
    };
    size_t roots = out.elements.size();
    auto st = roots <= 1 ? SearchStatus::complete : search.for_each_projection(
        vars,
        [&](const std::vector<SimplexRef>& v) {
            auto [a, b] = ends(v);
            const int ra = find_root(uf, a), rb = find_root(uf, b);
            if (ra != rb) {
                uf[ra] = rb;
                --roots;
            }
            return roots > 1;
        },
        [&](const std::vector<SimplexRef>& v) {
            auto [a, b] = ends(v);
            return find_root(uf, a) != find_root(uf, b);
        });
    if (st == SearchStatus::stopped) st = SearchStatus::complete;
    out.status = merge(out.status, st);
    std::tie(out.cls, out.classes) = number_classes(uf);
    return out;
}

std::optional<int> MappingTruncation::vertex_of(const FilteredMap& e) const {
    for (size_t i = 0; i < levels[0].size(); ++i)
        if (levels[0][i].images() == e.images()) return static_cast<int>(i);
    return std::nullopt;
}

MappingTruncation mapping_truncation(const ComplexPtr& x, const ColorWord& w, int stage, long budget) {
    const Poset& P = x->poset();
    MappingTruncation mt;
    mt.word = w;
    mt.stage = stage;
    for (int n = 0; n <= 2; ++n) {
        const Product& cyl = simplex_cylinder(P, w, n);
        auto [st, maps] = enumerate_maps(iterated_complex(cyl.complex, stage), x, budget);
        mt.status = merge(mt.status, st);
        mt.levels[n] = std::move(maps);
    }
    auto face_op = [&](int n, int i) {
        auto theta = coface_map(n, i);
        return cylinder_operator(P, w, n - 1, n, theta, stage);
    };
    const std::vector<int> collapse{0, 0};
    const FilteredMap d0 = face_op(1, 0), d1 = face_op(1, 1);
    const FilteredMap s0 = cylinder_operator(P, w, 1, 0, collapse, stage);
    auto idx0 = index_maps(mt.levels[0]);
    auto idx1 = index_maps(mt.levels[1]);
    mt.data.vertices = static_cast<int>(mt.levels[0].size());
    for (int v = 0; v < mt.data.vertices; ++v) mt.data.vertex_names.push_back("v" + std::to_string(v));
    mt.edge_of_level1.assign(mt.levels[1].size(), -1);
    for (size_t h = 0; h < mt.levels[1].size(); ++h) {
        const FilteredMap& e = mt.levels[1][h];
        auto src = compose(e, d1), tgt = compose(e, d0);
        if (compose(tgt, s0).images() == e.images()) continue;
        mt.edge_of_level1[h] = static_cast<int>(mt.data.edges.size());
        mt.data.edges.push_back({idx0.at(src.images()), idx0.at(tgt.images())});
        mt.data.edge_names.push_back("h" + std::to_string(h));
    }
    std::array<FilteredMap, 3> f2{face_op(2, 0), face_op(2, 1), face_op(2, 2)};
    for (auto& t : mt.levels[2]) {
        std::array<int, 3> tri{};
        for (int i = 0; i < 3; ++i) tri[i] = mt.edge_of_level1[idx1.at(compose(t, f2[i]).images())];
        mt.data.triangles.push_back(tri);
    }
    return mt;
}

namespace {

struct Spi1Stage {
    MappingTruncation mt;
    EdgePathGroup group;
};

Spi1Stage spi1_stage(const ComplexPtr& x, const FilteredMap& phi, const ColorWord& w, int stage, long budget) {
    Spi1Stage s;
    s.mt = mapping_truncation(x, w, stage, budget);
    auto base = compose(phi, last_vertex_iterated(canonical_simplex(x->poset(), w).complex, stage));
    auto v = s.mt.vertex_of(base);
    if (!v) throw Error("the pointing is missing from the mapping space");
    s.group = edge_path_group(s.mt.data, *v);
    return s;
}

}  // namespace

Spi1Result spi1_tower(const ComplexPtr& x, const Pointing& p, const ColorWord& w, int stage, long budget) {
    auto phi = restrict_pointing(p, w);
    if (!phi) throw Error("the pointing is not defined over " + format_word(x->poset(), w));
    Spi1Result r;
    auto s = spi1_stage(x, *phi, w, stage, budget);
    r.group = s.group;
    r.status = s.mt.status;
    r.invariants = abelian_invariants(r.group.group);
    r.previous = r.invariants;
    if (stage > 0) {
        auto prev = spi1_stage(x, *phi, w, stage - 1, budget);
        r.status = merge(r.status, prev.mt.status);
        r.previous = abelian_invariants(prev.group.group);
    }
    r.stable = stage > 0 && r.previous == r.invariants;
    return r;
}

int SpiDiagram::find(const ColorWord& w) const {
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i].word == w) return static_cast<int>(i);
    return -1;
}

std::vector<ColorWord> nondegenerate_words(const Poset& p) {
    std::vector<ColorWord> out;
    for (int len = 1; len <= p.size(); ++len)
        for (auto& w : monotone_words(p, len))
            if (is_strict(p, w)) out.push_back(w);
    return out;
}

SpiDiagram spi0(const ComplexPtr& x, int stage, long budget) {
    const Poset& P = x->poset();
    SpiDiagram d;
    d.poset = P;
    d.n = 0;
    d.stage = stage;
    d.route = "tower";
    std::vector<Spi0Level> levels;
    for (auto& w : nondegenerate_words(P)) {
        levels.push_back(spi0_level(x, w, stage, budget));
        const Spi0Level& lv = levels.back();
        d.status = merge(d.status, lv.status);
        if (d.status == SearchStatus::budget_exhausted) {
            d.stable = false;
            return d;
        }
        SpiValue v;
        v.word = w;
        v.classes = lv.classes;
        v.stable = false;
        if (stage > 0) {
            auto prev = spi0_level(x, w, stage - 1, budget);
            d.status = merge(d.status, prev.status);
            if (d.status == SearchStatus::budget_exhausted) {
                d.stable = false;
                return d;
            }
            auto lvmap = last_vertex_map(*subdivide(iterated_complex(canonical_simplex(P, w).complex, stage - 1)));
            std::vector<int> image(prev.classes, -1);
            for (size_t i = 0; i < prev.elements.size(); ++i) {
                auto c = lv.class_of(compose(prev.elements[i], lvmap));
                if (!c) throw Error("tower map leaves the enumerated level");
                image[prev.cls[i]] = *c;
            }
            std::vector<int> sorted = image;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> all(lv.classes);
            std::iota(all.begin(), all.end(), 0);
            v.stable = sorted == all;
        }
        d.stable = d.stable && v.stable;
        d.values.push_back(std::move(v));
    }
    for (size_t a = 0; a < levels.size(); ++a) {
        const ColorWord& w = levels[a].word;
        const int n = static_cast<int>(w.size()) - 1;
        for (int i = 0; i <= n && n > 0; ++i) {
            SpiTransition t;
            t.from = static_cast<int>(a);
            t.to = d.find(face(w, i));
            t.face = i;
            t.class_map.assign(levels[a].classes, -1);
            auto op = ex_operator(P, w, coface_map(n, i), stage);
            for (size_t e = 0; e < levels[a].elements.size(); ++e) {
                auto c = levels[t.to].class_of(compose(levels[a].elements[e], op));
                if (!c) throw Error("face restriction leaves the enumerated level");
                int& slot = t.class_map[levels[a].cls[e]];
                if (slot >= 0 && slot != *c) throw Error("face restriction is not constant on a class");
                slot = *c;
            }
            d.transitions.push_back(std::move(t));
        }
    }
    return d;
}

std::vector<std::vector<int>> spi0_induced(const FilteredMap& f, int stage, long budget) {
    const Poset& P = f.domain()->poset();
    std::vector<std::vector<int>> out;
    for (auto& w : nondegenerate_words(P)) {
        auto lx = spi0_level(f.domain(), w, stage, budget);
        auto ly = spi0_level(f.codomain(), w, stage, budget);
        std::vector<int> m(lx.classes, -1);
        for (size_t e = 0; e < lx.elements.size(); ++e) {
            auto c = ly.class_of(compose(f, lx.elements[e]));
            if (!c) throw Error("induced element leaves the enumerated level");
            m[lx.cls[e]] = *c;
        }
        out.push_back(std::move(m));
    }
    return out;
}

SpiDiagram spi1(const ComplexPtr& x, const Pointing& p, int stage, long budget) {
    const Poset& P = x->poset();
    SpiDiagram d;
    d.poset = P;
    d.n = 1;
    d.stage = stage;
    d.route = "tower";
    std::vector<Spi1Stage> stages;
    for (auto& w : nondegenerate_words(P)) {
        auto phi = restrict_pointing(p, w);
        if (!phi) continue;
        auto r = spi1_tower(x, p, w, stage, budget);
        d.status = merge(d.status, r.status);
        SpiValue v;
        v.word = w;
        v.group = r.group.group;
        v.invariants = r.invariants;
        v.stable = r.stable;
        d.stable = d.stable && v.stable;
        d.values.push_back(std::move(v));
        stages.push_back(spi1_stage(x, *phi, w, stage, budget));
    }
    for (size_t a = 0; a < d.values.size(); ++a) {
        const ColorWord& w = d.values[a].word;
        const int n = static_cast<int>(w.size()) - 1;
        for (int i = 0; i <= n && n > 0; ++i) {
            const int to = d.find(face(w, i));
            if (to < 0) continue;
            const auto& src = stages[a].mt;
            const auto& tgt = stages[to].mt;
            auto theta = coface_map(n, i);
            auto op0 = ex_operator(P, w, theta, stage);
            auto op1 = cylinder_base_operator(P, w, theta, 1, stage);
            auto idx0 = index_maps(tgt.levels[0]);
            auto idx1 = index_maps(tgt.levels[1]);
            std::vector<int> vmap, emap(src.data.edges.size(), -1);
            for (auto& e : src.levels[0]) vmap.push_back(idx0.at(compose(e, op0).images()));
            for (size_t h = 0; h < src.levels[1].size(); ++h) {
                const int se = src.edge_of_level1[h];
                if (se >= 0) emap[se] = tgt.edge_of_level1[idx1.at(compose(src.levels[1][h], op1).images())];
            }
            SpiTransition t;
            t.from = static_cast<int>(a);
            t.to = to;
            t.face = i;
            t.images = induced_homomorphism(src.data, stages[a].group, stages[to].group, vmap, emap);
            t.kernel = kernel_invariants(d.values[a].group, d.values[to].group, t.images);
            t.cokernel = cokernel_invariants(d.values[a].group, d.values[to].group, t.images);
            d.transitions.push_back(std::move(t));
        }
    }
    return d;
}

namespace {

std::pair<std::vector<int>, int> components(const ComplexEdgePath& c) {
    std::vector<int> uf(c.data.vertices);
    std::iota(uf.begin(), uf.end(), 0);
    for (auto [s, t] : c.data.edges) uf[find_root(uf, s)] = find_root(uf, t);
    return number_classes(uf);
}

}  // namespace

SpiDiagram assemble_spi_from_bundle(const ComplexPtr& m, const ComplexPtr& e, const ComplexPtr& e2, const FilteredMap& attach,
                                    const FilteredMap& reattach, int n) {
    if (n != 0 && n != 1) throw Error("assembled diagrams are available for n = 0 and n = 1");
    if (attach.domain() != e || attach.codomain() != m || reattach.domain() != e || reattach.codomain() != e2)
        throw Error("bundle maps must be E -> M and E -> E'");
    attach.validate();
    reattach.validate();
    SpiDiagram d;
    d.poset = Poset::chain(2);
    d.n = n;
    d.route = "assembled";
    d.values.resize(3);
    d.values[0].word = {0};
    d.values[1].word = {1};
    d.values[2].word = {0, 1};
    const std::array<ComplexPtr, 3> models{m, e2, e};
    const std::array<const FilteredMap*, 2> maps{&reattach, &attach};  // face 0 -> [p1], face 1 -> [p0]
    if (n == 0) {
        std::array<std::pair<std::vector<int>, int>, 3> comps;
        std::array<ComplexEdgePath, 3> paths;
        for (int i = 0; i < 3; ++i) {
            paths[i] = edge_path_data(models[i]);
            comps[i] = components(paths[i]);
            d.values[i].classes = comps[i].second;
        }
        for (int f = 0; f < 2; ++f) {
            SpiTransition t;
            t.from = 2;
            t.to = f == 0 ? 1 : 0;
            t.face = f;
            t.class_map.assign(comps[2].second, -1);
            for (int v : e->of_dim(0)) {
                const int img = maps[f]->image(v).gen;
                t.class_map[comps[2].first[paths[2].vertex_index[v]]] = comps[t.to].first[paths[t.to].vertex_index[img]];
            }
            d.transitions.push_back(std::move(t));
        }
        return d;
    }
    if (e->of_dim(0).empty()) throw Error("the holink model is empty");
    const int base = e->of_dim(0)[0];
    std::array<EdgePathGroup, 3> groups{edge_path_pi1(m, attach.image(base).gen), edge_path_pi1(e2, reattach.image(base).gen),
                                        edge_path_pi1(e, base)};
    for (int i = 0; i < 3; ++i) {
        d.values[i].group = groups[i].group;
        d.values[i].invariants = abelian_invariants(groups[i].group);
    }
    for (int f = 0; f < 2; ++f) {
        SpiTransition t;
        t.from = 2;
        t.to = f == 0 ? 1 : 0;
        t.face = f;
        t.images = induced_by_map(*maps[f], groups[2], groups[t.to]);
        t.kernel = kernel_invariants(groups[2].group, groups[t.to].group, t.images);
        t.cokernel = cokernel_invariants(groups[2].group, groups[t.to].group, t.images);
        d.transitions.push_back(std::move(t));
    }
    return d;
}

namespace {

std::vector<int> fiber_profile(const SpiTransition& t, int target_classes) {
    std::vector<int> sizes(target_classes, 0);
    for (int c : t.class_map) ++sizes.at(c);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string format_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

Comparison compare_diagrams(const SpiDiagram& a, const SpiDiagram& b) {
    if (!(a.poset == b.poset)) return {"inconclusive", "the diagrams live over different posets"};
    if (a.n != b.n) return {"inconclusive", "the diagrams have different degrees"};
    const Poset& P = a.poset;
    const std::string tag = a.n == 0 ? "sπ_0" : "sπ_1";
    for (auto& va : a.values) {
        const int j = b.find(va.word);
        if (j < 0) return {"inconclusive", "word " + format_word(P, va.word) + " is missing from the second diagram"};
        const auto& vb = b.values[j];
        if (a.n == 0 && va.classes != vb.classes)
            return {"distinguished", tag + format_word(P, va.word) + ": " + std::to_string(va.classes) + " vs " +
                                         std::to_string(vb.classes) + " classes"};
        if (a.n == 1 && va.invariants != vb.invariants)
            return {"distinguished", tag + format_word(P, va.word) + ": " + format_invariants(va.invariants) + " vs " +
                                         format_invariants(vb.invariants)};
    }
    if (a.values.size() != b.values.size()) return {"inconclusive", "the diagrams have different word sets"};
    for (auto& ta : a.transitions) {
        const ColorWord& wf = a.values[ta.from].word;
        const SpiTransition* tb = nullptr;
        for (auto& t : b.transitions)
            if (b.values[t.from].word == wf && t.face == ta.face) tb = &t;
        const std::string where = "d" + std::to_string(ta.face) + ": " + format_word(P, wf) + " -> " +
                                  format_word(P, a.values[ta.to].word);
        if (!tb) return {"inconclusive", "transition " + where + " is missing from the second diagram"};
        if (a.n == 0) {
            auto fa = fiber_profile(ta, a.values[ta.to].classes);
            auto fb = fiber_profile(*tb, b.values[tb->to].classes);
            if (fa != fb) return {"distinguished", "fibers " + format_ints(fa) + " vs " + format_ints(fb) + " at " + where};
        } else {
            if (ta.cokernel != tb->cokernel)
                return {"distinguished",
                        "cokernel " + format_invariants(ta.cokernel) + " vs " + format_invariants(tb->cokernel) + " at " + where};
            if (ta.kernel != tb->kernel)
                return {"distinguished",
                        "kernel " + format_invariants(ta.kernel) + " vs " + format_invariants(tb->kernel) + " at " + where};
        }
    }
    if (a.status == SearchStatus::budget_exhausted || b.status == SearchStatus::budget_exhausted)
        return {"inconclusive", "budget exhausted"};
    return {"isomorphic-on-abelianized-invariants", ""};
}

}  // namespace strata
