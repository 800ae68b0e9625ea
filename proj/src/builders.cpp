#include "strata/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strata {

namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::vector<int> bits_of(std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1u) v.push_back(i);
    return v;
}

// subsets of `allowed` with exactly r elements, increasing as integers
std::vector<std::uint32_t> subsets_of_size(std::uint32_t allowed, int r) {
    std::vector<std::uint32_t> out;
    auto pos = bits_of(allowed);
    const int n = static_cast<int>(pos.size());
    if (r < 0 || r > n) return out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (popcount(s) != r) continue;
        std::uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1u) m |= 1u << pos[i];
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ref_text(const FilteredComplex& c, const SimplexRef& r) {
    if (r.deg == 0) return c.gen(r.gen).name;
    return surj::sword(r.deg) + "." + c.gen(r.gen).name;
}

// collapse the plateau positions in c (a subset of r.deg)
SimplexRef collapse(const SimplexRef& r, std::uint32_t c) {
    std::vector<int> vals;
    for (int a = 0; a <= r.dim; ++a) {
        if (a > 0 && (c >> (a - 1) & 1u)) continue;
        vals.push_back(surj::value(r.deg, a));
    }
    return SimplexRef{r.gen, static_cast<int>(vals.size()) - 1, surj::from_values(vals)};
}

}  // namespace

std::string face_name(std::uint32_t mask) {
    auto v = bits_of(mask);
    bool small = std::all_of(v.begin(), v.end(), [](int i) { return i < 10; });
    std::string s = "e";
    for (size_t i = 0; i < v.size(); ++i) {
        if (!small && i) s += "_";
        s += std::to_string(v[i]);
    }
    return s;
}

std::optional<SimplexRef> SimplexSub::lookup(std::span<const int> vertices) const {
    std::uint32_t m = 0;
    std::vector<int> vals;
    int prev = -1;
    for (int v : vertices) {
        if (v < prev) return std::nullopt;
        if (v != prev) m |= 1u << v;
        prev = v;
    }
    auto g = gen(m);
    if (!g) return std::nullopt;
    for (int v : vertices) vals.push_back(popcount(m & ((1u << v) - 1u)));
    return SimplexRef{*g, static_cast<int>(vertices.size()) - 1, surj::from_values(vals)};
}

SimplexSub simplex_sub(const Poset& p, const ColorWord& w, const std::function<bool(std::uint32_t)>& keep) {
    if (w.empty()) throw Error("empty color word");
    if (!is_monotone(p, w)) throw Error("color word is not monotone");
    const int n = static_cast<int>(w.size()) - 1;
    if (n > surj::kMaxDim) throw Error("simplex dimension too large");
    std::vector<std::uint32_t> masks;
    for (int k = 1; k <= n + 1; ++k)
        for (auto m : subsets_of_size((n >= 31 ? 0xFFFFFFFFu : (1u << (n + 1)) - 1u), k))
            if (keep(m)) masks.push_back(m);
    SimplexSub out;
    out.word = w;
    FilteredComplex c(p);
    for (auto m : masks) {
        auto v = bits_of(m);
        ColorWord col;
        for (int i : v) col.push_back(w[i]);
        std::vector<SimplexRef> faces;
        if (v.size() > 1)
            for (int i : v) {
                auto it = out.by_mask.find(m & ~(1u << i));
                if (it == out.by_mask.end()) throw Error("face selection is not closed under faces");
                faces.push_back(SimplexRef{it->second, static_cast<int>(v.size()) - 2, 0});
            }
        int id = c.add(face_name(m), std::move(col), std::move(faces));
        out.by_mask.emplace(m, id);
        out.mask.push_back(m);
    }
    out.complex = finalize(std::move(c));
    return out;
}

SimplexSub standard_simplex_sub(const Poset& p, const ColorWord& w) {
    return simplex_sub(p, w, [](std::uint32_t) { return true; });
}

SimplexSub boundary_sub(const Poset& p, const ColorWord& w) {
    const std::uint32_t full = (1u << w.size()) - 1u;
    return simplex_sub(p, w, [full](std::uint32_t m) { return m != full; });
}

SimplexSub horn_sub(const Poset& p, const ColorWord& w, int k) {
    const int len = static_cast<int>(w.size());
    if (len < 2) throw Error("horns need a word of length at least 2");
    if (k < 0 || k >= len) throw Error("horn index out of range");
    const std::uint32_t full = (1u << len) - 1u;
    const std::uint32_t opp = full & ~(1u << k);
    return simplex_sub(p, w, [full, opp](std::uint32_t m) { return m != full && m != opp; });
}

ComplexPtr standard_simplex(const Poset& p, const ColorWord& w) { return standard_simplex_sub(p, w).complex; }
ComplexPtr boundary(const Poset& p, const ColorWord& w) {
    if (w.size() < 2) return empty_complex(p);
    return boundary_sub(p, w).complex;
}
ComplexPtr horn(const Poset& p, const ColorWord& w, int k) { return horn_sub(p, w, k).complex; }

ComplexPtr plain_simplex(int n) { return standard_simplex(Poset::point(), ColorWord(n + 1, 0)); }

ComplexPtr empty_complex(const Poset& p) { return finalize(FilteredComplex(p)); }

ComplexPtr nerve(const Poset& p, int max_dim) {
    FilteredComplex c(p);
    std::map<ColorWord, int> ids;
    for (auto& w : nerve_words(p, max_dim < 0 ? -1 : max_dim + 1)) {
        std::vector<SimplexRef> faces;
        if (w.size() > 1)
            for (size_t i = 0; i < w.size(); ++i)
                faces.push_back(SimplexRef{ids.at(face(w, static_cast<int>(i))), static_cast<int>(w.size()) - 2, 0});
        ids[w] = c.add(format_word(p, w), w, std::move(faces));
    }
    return finalize(std::move(c));
}

FilteredMap classifying_map(const SimplexSub& simplex, const ComplexPtr& x, const SimplexRef& s) {
    if (x->color(s) != simplex.word) throw Error("simplex does not have the color of the classifying simplex");
    std::vector<SimplexRef> im;
    for (auto m : simplex.mask) im.push_back(x->restrict(s, m));
    return FilteredMap(simplex.complex, x, std::move(im));
}

FilteredMap sub_inclusion(const SimplexSub& from, const SimplexSub& to) {
    std::vector<SimplexRef> im;
    for (size_t g = 0; g < from.mask.size(); ++g) {
        auto t = to.gen(from.mask[g]);
        if (!t) throw Error("subcomplex is not contained in the target");
        im.push_back(to.complex->ref(*t));
    }
    return FilteredMap(from.complex, to.complex, std::move(im));
}

FilteredMap simplex_operator(const SimplexSub& from, const SimplexSub& to, std::span<const int> theta) {
    std::vector<SimplexRef> im;
    for (size_t g = 0; g < from.mask.size(); ++g) {
        std::vector<int> v;
        for (int i : bits_of(from.mask[g])) v.push_back(theta[i]);
        auto r = to.lookup(v);
        if (!r) throw Error("operator leaves the target subcomplex");
        im.push_back(*r);
    }
    return FilteredMap(from.complex, to.complex, std::move(im));
}

size_t Product::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(k.gx);
    h = h * 1000003u ^ static_cast<std::uint32_t>(k.gy);
    h = h * 1000003u ^ k.dx;
    h = h * 1000003u ^ k.dy;
    h = h * 1000003u ^ static_cast<std::uint32_t>(k.dim);
    return static_cast<size_t>(h ^ (h >> 31));
}

std::optional<SimplexRef> Product::find(const SimplexRef& x, const SimplexRef& y) const {
    if (x.dim != y.dim) throw Error("product lookup with mismatched dimensions");
    const std::uint32_t c = x.deg & y.deg;
    SimplexRef a = collapse(x, c);
    SimplexRef b = collapse(y, c);
    auto it = index.find(Key{a.gen, b.gen, a.deg, b.deg, a.dim});
    if (it == index.end()) return std::nullopt;
    return SimplexRef{it->second, x.dim, c};
}

SimplexRef Product::lookup(const SimplexRef& x, const SimplexRef& y) const {
    auto r = find(x, y);
    if (!r) throw Error("simplex pair is missing from the product (dimension bound too small?)");
    return *r;
}

FilteredMap Product::project_left() const {
    std::vector<SimplexRef> im;
    for (auto& pr : parts) im.push_back(pr.first);
    return FilteredMap(complex, left, std::move(im));
}

namespace {

enum class ProductKind { Filtered, Tensor, Plain };

Product make_product(const ComplexPtr& x, const ComplexPtr& y, int max_dim, ProductKind kind) {
    if (kind == ProductKind::Filtered && !(x->poset() == y->poset()))
        throw Error("filtered product of complexes over different posets");
    Product out;
    out.left = x;
    out.right = y;
    FilteredComplex c(kind == ProductKind::Plain ? Poset::point() : x->poset());
    const int top = std::min(max_dim, std::max(0, x->dim()) + std::max(0, y->dim()));
    for (int n = 0; n <= top; ++n) {
        const std::uint32_t positions = n == 0 ? 0u : (1u << n) - 1u;
        for (int a = 0; a <= std::min(n, x->dim()); ++a)
            for (int gx : x->of_dim(a))
                for (int b = std::max(0, n - a); b <= std::min(n, y->dim()); ++b)
                    for (int gy : y->of_dim(b))
                        for (auto dx : subsets_of_size(positions, n - a))
                            for (auto dy : subsets_of_size(positions & ~dx, n - b)) {
                                SimplexRef sx{gx, n, dx};
                                SimplexRef sy{gy, n, dy};
                                ColorWord col;
                                if (kind == ProductKind::Plain) {
                                    col.assign(n + 1, 0);
                                } else {
                                    col = x->color(sx);
                                    if (kind == ProductKind::Filtered && col != y->color(sy)) continue;
                                }
                                std::vector<SimplexRef> faces;
                                for (int i = 0; i <= n && n > 0; ++i)
                                    faces.push_back(out.lookup(x->face(sx, i), y->face(sy, i)));
                                std::string name = "(" + ref_text(*x, sx) + "," + ref_text(*y, sy) + ")";
                                int id = c.add(std::move(name), std::move(col), std::move(faces));
                                out.index.emplace(Product::Key{gx, gy, dx, dy, n}, id);
                                out.parts.emplace_back(sx, sy);
                            }
    }
    out.complex = finalize(std::move(c));
    return out;
}

}  // namespace

Product filtered_product(const ComplexPtr& x, const ComplexPtr& y, int max_dim) {
    return make_product(x, y, max_dim, ProductKind::Filtered);
}
Product tensor(const ComplexPtr& x, const ComplexPtr& k, int max_dim) {
    return make_product(x, k, max_dim, ProductKind::Tensor);
}
Product plain_product(const ComplexPtr& x, const ComplexPtr& y, int max_dim) {
    return make_product(x, y, max_dim, ProductKind::Plain);
}

FilteredMap tensor_map(const Product& from, const Product& to, const FilteredMap* f, const FilteredMap* g) {
    std::vector<SimplexRef> im;
    for (auto& [x, y] : from.parts) {
        SimplexRef a = f ? f->apply(x) : x;
        SimplexRef b = g ? g->apply(y) : y;
        im.push_back(to.lookup(a, b));
    }
    return FilteredMap(from.complex, to.complex, std::move(im));
}

FilteredMap tensor_end(const Product& to, int vertex) {
    std::vector<SimplexRef> im;
    for (int g = 0; g < to.left->size(); ++g) {
        SimplexRef x = to.left->ref(g);
        std::vector<int> zeros(x.dim + 1, 0);
        SimplexRef v = to.right->act(to.right->ref(vertex), zeros);
        im.push_back(to.lookup(x, v));
    }
    return FilteredMap(to.left, to.complex, std::move(im));
}

Pushout pushout(const FilteredMap& f, const FilteredMap& g, const std::string& x_prefix) {
    if (f.domain()->size() != g.domain()->size()) throw Error("pushout legs have different domains");
    if (!f.is_monomorphism()) {
        if (g.is_monomorphism()) {
            Pushout swapped = pushout(g, f, x_prefix);
            return Pushout{swapped.complex, swapped.from_y, swapped.from_x};
        }
        throw Error("pushout requires one leg to be a monomorphism");
    }
    const auto& X = *f.codomain();
    const auto& Y = *g.codomain();
    std::vector<int> preimage(X.size(), -1);
    for (int a = 0; a < f.domain()->size(); ++a) preimage[f.image(a).gen] = a;
    FilteredComplex c(Y.poset());
    for (int y = 0; y < Y.size(); ++y) c.add(Y.gen(y).name, Y.gen(y).color, Y.gen(y).faces);
    std::vector<SimplexRef> x_image(X.size());
    for (int x = 0; x < X.size(); ++x) {
        if (preimage[x] >= 0) {
            x_image[x] = g.image(preimage[x]);
            continue;
        }
        const auto& G = X.gen(x);
        std::vector<SimplexRef> faces;
        for (auto& fc : G.faces) {
            const SimplexRef& base = x_image[fc.gen];
            faces.push_back(fc.deg == 0 ? base : c.act(base, surj::values(fc.dim, fc.deg)));
        }
        int id = c.add(x_prefix + G.name, G.color, std::move(faces));
        x_image[x] = c.ref(id);
    }
    auto result = finalize(std::move(c));
    std::vector<SimplexRef> from_y;
    for (int y = 0; y < Y.size(); ++y) from_y.push_back(result->ref(y));
    return Pushout{result, FilteredMap(f.codomain(), result, std::move(x_image)),
                   FilteredMap(g.codomain(), result, std::move(from_y))};
}

ComplexPtr filtered_cone(const ComplexPtr& l, int apex_color, const std::string& apex) {
    FilteredComplex c(l->poset());
    for (int g = 0; g < l->size(); ++g)
        if (!l->poset().leq(apex_color, l->gen(g).color.front()))
            throw Error("cone apex color must lie below the colors of the base");
    const int a = c.add(apex, {apex_color}, {});
    std::vector<int> base(l->size()), cone(l->size());
    for (int g = 0; g < l->size(); ++g) {
        const auto& G = l->gen(g);
        std::vector<SimplexRef> faces;
        for (auto& f : G.faces) faces.push_back(SimplexRef{base[f.gen], f.dim, f.deg});
        base[g] = c.add(G.name, G.color, std::move(faces));
    }
    for (int g = 0; g < l->size(); ++g) {
        const auto& G = l->gen(g);
        ColorWord col{apex_color};
        col.insert(col.end(), G.color.begin(), G.color.end());
        std::vector<SimplexRef> faces{SimplexRef{base[g], G.dim, 0}};
        if (G.dim == 0)
            faces.push_back(SimplexRef{a, 0, 0});
        else
            for (auto& f : G.faces) faces.push_back(SimplexRef{cone[f.gen], f.dim + 1, f.deg << 1});
        cone[g] = c.add(apex + "*" + G.name, std::move(col), std::move(faces));
    }
    return finalize(std::move(c));
}

ComplexPtr disjoint_union(const ComplexPtr& a, const ComplexPtr& b, const std::string& pa, const std::string& pb) {
    if (!(a->poset() == b->poset())) throw Error("disjoint union over different posets");
    FilteredComplex c(a->poset());
    for (int g = 0; g < a->size(); ++g) c.add(pa + a->gen(g).name, a->gen(g).color, a->gen(g).faces);
    const int off = a->size();
    for (int g = 0; g < b->size(); ++g) {
        auto faces = b->gen(g).faces;
        for (auto& f : faces) f.gen += off;
        c.add(pb + b->gen(g).name, b->gen(g).color, std::move(faces));
    }
    return finalize(std::move(c));
}

ComplexPtr ordered_complex(const Poset& p, const std::vector<std::string>& names, const ColorWord& colors,
                           const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> simplices;
    for (int v = 0; v < static_cast<int>(names.size()); ++v) simplices.insert({v});
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        const int k = static_cast<int>(f.size());
        for (std::uint32_t s = 1; s < (1u << k); ++s) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (s >> i & 1u) sub.push_back(f[i]);
            simplices.insert(sub);
        }
    }
    std::vector<std::vector<int>> order(simplices.begin(), simplices.end());
    std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
    FilteredComplex c(p);
    std::map<std::vector<int>, int> ids;
    for (auto& s : order) {
        ColorWord col;
        std::string name;
        for (size_t i = 0; i < s.size(); ++i) {
            col.push_back(colors.at(s[i]));
            name += (i ? "-" : "") + names.at(s[i]);
        }
        std::vector<SimplexRef> faces;
        if (s.size() > 1)
            for (size_t i = 0; i < s.size(); ++i) {
                auto t = s;
                t.erase(t.begin() + static_cast<long>(i));
                faces.push_back(SimplexRef{ids.at(t), static_cast<int>(t.size()) - 1, 0});
            }
        ids[s] = c.add(std::move(name), std::move(col), std::move(faces));
    }
    return finalize(std::move(c));
}

ComplexPtr graph_complex(const Poset& p, const std::vector<std::string>& names, const ColorWord& colors,
                         const std::vector<std::pair<int, int>>& edges) {
    FilteredComplex c(p);
    for (size_t v = 0; v < names.size(); ++v) c.add(names[v], {colors.at(v)}, {});
    for (auto [s, t] : edges)
        c.add(names.at(s) + "-" + names.at(t), {colors[s], colors[t]}, {SimplexRef{t, 0, 0}, SimplexRef{s, 0, 0}});
    return finalize(std::move(c));
}

ComplexPtr recolor(const ComplexPtr& x, const Poset& p, const std::function<ColorWord(int)>& color_of_gen,
                   const std::string& prefix) {
    FilteredComplex c(p);
    for (int g = 0; g < x->size(); ++g) c.add(prefix + x->gen(g).name, color_of_gen(g), x->gen(g).faces);
    return finalize(std::move(c));
}

ComplexPtr constant_color(const ComplexPtr& x, const Poset& p, int q, const std::string& prefix) {
    return recolor(x, p, [&](int g) { return ColorWord(x->gen(g).dim + 1, q); }, prefix);
}

ComplexPtr underlying(const ComplexPtr& x) { return constant_color(x, Poset::point(), 0); }

FilteredMap transport(const FilteredMap& f, const ComplexPtr& dom, const ComplexPtr& cod) {
    return FilteredMap(dom, cod, f.images());
}

}  // namespace strata
