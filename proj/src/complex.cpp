#include "strata/complex.hpp"

#include <algorithm>
#include <cctype>

namespace strata {

namespace surj {

std::uint32_t from_values(std::span<const int> v) {
    if (v.empty() || v[0] != 0) throw Error("surjection must start at 0");
    if (v.size() > static_cast<size_t>(kMaxDim) + 1) throw Error("simplex dimension too large");
    std::uint32_t mask = 0;
    for (size_t j = 0; j + 1 < v.size(); ++j) {
        int d = v[j + 1] - v[j];
        if (d == 0)
            mask |= 1u << j;
        else if (d != 1)
            throw Error("not a monotone surjection");
    }
    return mask;
}

std::vector<int> values(int dim, std::uint32_t mask) {
    std::vector<int> v(dim + 1);
    for (int j = 0; j <= dim; ++j) v[j] = value(mask, j);
    return v;
}

std::vector<int> indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int j = kMaxDim; j >= 0; --j)
        if (mask >> j & 1u) out.push_back(j);
    return out;
}

std::string sword(std::uint32_t mask) {
    std::string s;
    for (int j : indices(mask)) s += "s" + std::to_string(j);
    return s;
}

}  // namespace surj

std::vector<int> coface_map(int dim, int i) {
    std::vector<int> t;
    for (int a = 0; a <= dim; ++a)
        if (a != i) t.push_back(a);
    return t;
}

std::vector<int> codegeneracy_map(int dim, int j) {
    std::vector<int> t;
    for (int a = 0; a <= dim + 1; ++a) t.push_back(a <= j ? a : a - 1);
    return t;
}

static const std::vector<int> kEmpty;

const std::vector<int>& FilteredComplex::of_dim(int n) const {
    if (n < 0 || n >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[n];
}

std::vector<int> FilteredComplex::counts() const {
    std::vector<int> c;
    for (auto& v : by_dim_) c.push_back(static_cast<int>(v.size()));
    return c;
}

long FilteredComplex::euler_characteristic() const {
    long chi = 0;
    for (size_t n = 0; n < by_dim_.size(); ++n) chi += (n % 2 ? -1L : 1L) * static_cast<long>(by_dim_[n].size());
    return chi;
}

std::optional<int> FilteredComplex::find(std::string_view name) const {
    auto it = names_.find(std::string(name));
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

int FilteredComplex::index_of(std::string_view name) const {
    auto r = find(name);
    if (!r) throw Error("unknown simplex '" + std::string(name) + "'");
    return *r;
}

bool FilteredComplex::valid_ref(const SimplexRef& x) const {
    if (x.gen < 0 || x.gen >= size()) return false;
    if (x.dim < 0 || x.dim > surj::kMaxDim) return false;
    if ((x.deg >> x.dim) != 0) return false;
    return surj::target_dim(x.dim, x.deg) == gens_[x.gen].dim;
}

int FilteredComplex::add(std::string name, ColorWord color, std::vector<SimplexRef> faces) {
    const int n = static_cast<int>(color.size()) - 1;
    if (n < 0) throw ValidationError("simplex '" + name + "' has an empty color word");
    if (n > surj::kMaxDim) throw ValidationError("simplex '" + name + "' exceeds the dimension limit");
    if (name.empty() || name.find_first_of(" \t\n@#") != std::string::npos)
        throw ValidationError("invalid simplex identifier '" + name + "'");
    if (names_.count(name)) throw ValidationError("duplicate simplex identifier '" + name + "'");
    if (n == 0 && !faces.empty()) throw ValidationError("vertex '" + name + "' has faces");
    if (n > 0 && static_cast<int>(faces.size()) != n + 1)
        throw ValidationError("simplex '" + name + "' must have " + std::to_string(n + 1) + " faces");
    for (auto& f : faces) {
        if (f.dim != n - 1 || !valid_ref(f))
            throw ValidationError("simplex '" + name + "' has a malformed face");
    }
    const int id = size();
    gens_.push_back(Generator{name, n, std::move(color), std::move(faces)});
    if (static_cast<int>(by_dim_.size()) <= n) by_dim_.resize(n + 1);
    by_dim_[n].push_back(id);
    names_.emplace(std::move(name), id);
    return id;
}

ColorWord FilteredComplex::color(const SimplexRef& x) const {
    const auto& base = gens_.at(x.gen).color;
    ColorWord w(x.dim + 1);
    for (int j = 0; j <= x.dim; ++j) w[j] = base[surj::value(x.deg, j)];
    return w;
}

SimplexRef FilteredComplex::restrict_gen(int g, std::uint32_t mask) const {
    const int n = gens_[g].dim;
    const std::uint32_t full = n >= 31 ? 0xFFFFFFFFu : ((1u << (n + 1)) - 1u);
    mask &= full;
    if (mask == 0) throw Error("restriction to an empty vertex set");
    if (mask == full) return SimplexRef{g, n, 0};
    int i = n;
    while (mask >> i & 1u) --i;
    const SimplexRef& y = gens_[g].faces[i];
    std::vector<int> theta;
    for (int a = 0; a <= n; ++a)
        if (mask >> a & 1u) theta.push_back(a < i ? a : a - 1);
    return act(y, theta);
}

SimplexRef FilteredComplex::act(const SimplexRef& x, std::span<const int> theta) const {
    if (theta.empty()) throw Error("empty simplicial operator");
    const int m = static_cast<int>(theta.size()) - 1;
    if (m > surj::kMaxDim) throw Error("simplex dimension too large");
    int mu[surj::kMaxDim + 1];
    std::uint32_t image = 0;
    for (int a = 0; a <= m; ++a) {
        if (theta[a] < 0 || theta[a] > x.dim || (a > 0 && theta[a] < theta[a - 1]))
            throw Error("operator is not monotone into the simplex");
        mu[a] = surj::value(x.deg, theta[a]);
        image |= 1u << mu[a];
    }
    SimplexRef h = restrict_gen(x.gen, image);
    int rank[surj::kMaxDim + 1];
    int r = 0;
    for (int b = 0; b <= surj::kMaxDim; ++b)
        if (image >> b & 1u) rank[b] = r++;
    int vals[surj::kMaxDim + 1];
    for (int a = 0; a <= m; ++a) vals[a] = surj::value(h.deg, rank[mu[a]]);
    return SimplexRef{h.gen, m, surj::from_values(std::span<const int>(vals, m + 1))};
}

SimplexRef FilteredComplex::face(const SimplexRef& x, int i) const {
    if (x.dim == 0 || i < 0 || i > x.dim) throw Error("face index out of range");
    auto t = coface_map(x.dim, i);
    return act(x, t);
}

SimplexRef FilteredComplex::degeneracy(const SimplexRef& x, int j) const {
    if (j < 0 || j > x.dim) throw Error("degeneracy index out of range");
    auto t = codegeneracy_map(x.dim, j);
    return act(x, t);
}

SimplexRef FilteredComplex::restrict(const SimplexRef& x, std::uint32_t mask) const {
    std::vector<int> t;
    for (int a = 0; a <= x.dim; ++a)
        if (mask >> a & 1u) t.push_back(a);
    return act(x, t);
}

int FilteredComplex::vertex(const SimplexRef& x, int i) const {
    int t[1] = {i};
    return act(x, t).gen;
}

std::vector<int> FilteredComplex::vertices(const SimplexRef& x) const {
    std::vector<int> v(x.dim + 1);
    for (int i = 0; i <= x.dim; ++i) v[i] = vertex(x, i);
    return v;
}

std::string FilteredComplex::label(const SimplexRef& x) const {
    return surj::sword(x.deg) + "@" + gens_.at(x.gen).name;
}

SimplexRef FilteredComplex::parse_label(std::string_view text) const {
    auto at = text.find('@');
    if (at == std::string_view::npos) throw Error("simplex reference must have the form s-word@name: " + std::string(text));
    auto sw = text.substr(0, at);
    int g = index_of(text.substr(at + 1));
    SimplexRef x = ref(g);
    std::vector<int> idx;
    size_t p = 0;
    while (p < sw.size()) {
        if (sw[p] != 's') throw Error("malformed degeneracy word '" + std::string(sw) + "'");
        size_t q = p + 1;
        while (q < sw.size() && std::isdigit(static_cast<unsigned char>(sw[q]))) ++q;
        if (q == p + 1) throw Error("malformed degeneracy word '" + std::string(sw) + "'");
        idx.push_back(std::stoi(std::string(sw.substr(p + 1, q - p - 1))));
        p = q;
    }
    // s_{i_1} s_{i_2} ... s_{i_r} x applies s_{i_r} first
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        if (*it > x.dim) throw Error("degeneracy index out of range in '" + std::string(text) + "'");
        x = degeneracy(x, *it);
    }
    return x;
}

void FilteredComplex::validate() const {
    for (int g = 0; g < size(); ++g) {
        const auto& G = gens_[g];
        if (!is_monotone(poset_, G.color))
            throw ValidationError("color word of '" + G.name + "' is not monotone");
        for (int i = 0; i <= G.dim && G.dim > 0; ++i) {
            if (color(G.faces[i]) != strata::face(G.color, i))
                throw ValidationError("face d" + std::to_string(i) + " of '" + G.name + "' has the wrong color");
        }
        for (int j = 1; j <= G.dim && G.dim > 1; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef a = face(G.faces[j], i);
                SimplexRef b = face(G.faces[i], j - 1);
                if (a != b)
                    throw ValidationError("simplicial identity d" + std::to_string(i) + "d" + std::to_string(j) +
                                          " = d" + std::to_string(j - 1) + "d" + std::to_string(i) + " fails at '" +
                                          G.name + "': " + label(a) + " vs " + label(b));
            }
    }
}

ComplexPtr finalize(FilteredComplex&& c) {
    c.validate();
    return std::make_shared<const FilteredComplex>(std::move(c));
}

}  // namespace strata
