#include "strata/morphism.hpp"

namespace strata {

FilteredMap::FilteredMap(ComplexPtr dom, ComplexPtr cod, std::vector<SimplexRef> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
    if (!dom_ || !cod_) throw Error("map with a null complex");
    if (static_cast<int>(images_.size()) != dom_->size()) throw Error("map table has the wrong size");
}

SimplexRef FilteredMap::apply(const SimplexRef& x) const {
    const SimplexRef& y = images_.at(x.gen);
    if (x.deg == 0) return y;
    auto v = surj::values(x.dim, x.deg);
    return cod_->act(y, v);
}

void FilteredMap::validate() const {
    if (!(dom_->poset() == cod_->poset())) throw ValidationError("map between complexes over different posets");
    for (int g = 0; g < dom_->size(); ++g) {
        const auto& G = dom_->gen(g);
        const SimplexRef& y = images_[g];
        if (!cod_->valid_ref(y) || y.dim != G.dim)
            throw ValidationError("image of '" + G.name + "' is malformed");
        if (cod_->color(y) != G.color) throw ValidationError("map does not preserve the color of '" + G.name + "'");
        for (int i = 0; i <= G.dim && G.dim > 0; ++i) {
            if (cod_->face(y, i) != apply(G.faces[i]))
                throw ValidationError("map does not commute with d" + std::to_string(i) + " at '" + G.name + "'");
        }
    }
}

bool FilteredMap::is_monomorphism() const {
    std::vector<char> hit(cod_->size(), 0);
    for (const auto& y : images_) {
        if (!y.nondegenerate() || hit[y.gen]) return false;
        hit[y.gen] = 1;
    }
    return true;
}

FilteredMap identity_map(const ComplexPtr& x) {
    std::vector<SimplexRef> im;
    im.reserve(x->size());
    for (int g = 0; g < x->size(); ++g) im.push_back(x->ref(g));
    return FilteredMap(x, x, std::move(im));
}

FilteredMap compose(const FilteredMap& g, const FilteredMap& f) {
    if (f.codomain() != g.domain() && f.codomain()->size() != g.domain()->size())
        throw Error("composition of maps that do not match");
    std::vector<SimplexRef> im;
    im.reserve(f.images().size());
    for (const auto& y : f.images()) im.push_back(g.apply(y));
    return FilteredMap(f.domain(), g.codomain(), std::move(im));
}

bool same_table(const FilteredMap& a, const FilteredMap& b) { return a.images() == b.images(); }

VertexIndex::VertexIndex(ComplexPtr c) : c_(std::move(c)) {
    for (int g = 0; g < c_->size(); ++g) {
        auto v = c_->vertices(c_->ref(g));
        for (size_t i = 1; i < v.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (v[i] == v[j]) throw Error("complex is not vertex-determined at '" + c_->gen(g).name + "'");
        if (!index_.emplace(std::move(v), g).second)
            throw Error("complex is not vertex-determined at '" + c_->gen(g).name + "'");
    }
}

std::optional<SimplexRef> VertexIndex::find(std::span<const int> vertices) const {
    std::vector<int> key;
    std::vector<int> vals;
    for (size_t a = 0; a < vertices.size(); ++a) {
        if (key.empty() || key.back() != vertices[a]) key.push_back(vertices[a]);
        vals.push_back(static_cast<int>(key.size()) - 1);
    }
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return SimplexRef{it->second, static_cast<int>(vertices.size()) - 1, surj::from_values(vals)};
}

SimplexRef VertexIndex::at(std::span<const int> vertices) const {
    auto r = find(vertices);
    if (!r) {
        std::string s;
        for (int v : vertices) s += (s.empty() ? "" : ",") + c_->gen(v).name;
        throw Error("no simplex with vertices (" + s + ")");
    }
    return *r;
}

FilteredMap map_from_vertices(const ComplexPtr& dom, const VertexIndex& cod, const std::function<int(int)>& f) {
    std::vector<SimplexRef> im;
    im.reserve(dom->size());
    for (int g = 0; g < dom->size(); ++g) {
        auto v = dom->vertices(dom->ref(g));
        for (auto& x : v) x = f(x);
        im.push_back(cod.at(v));
    }
    return FilteredMap(dom, cod.complex(), std::move(im));
}

}  // namespace strata
