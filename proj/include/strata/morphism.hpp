#pragma once

#include <functional>
#include <map>
#include <optional>

#include "strata/complex.hpp"

namespace strata {

class FilteredMap {
public:
    FilteredMap() = default;
    FilteredMap(ComplexPtr dom, ComplexPtr cod, std::vector<SimplexRef> images);

    const ComplexPtr& domain() const { return dom_; }
    const ComplexPtr& codomain() const { return cod_; }
    const std::vector<SimplexRef>& images() const { return images_; }
    const SimplexRef& image(int g) const { return images_.at(g); }
    SimplexRef apply(const SimplexRef& x) const;

    void validate() const;
    bool is_monomorphism() const;

    friend bool operator==(const FilteredMap& a, const FilteredMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.images_ == b.images_;
    }

private:
    ComplexPtr dom_;
    ComplexPtr cod_;
    std::vector<SimplexRef> images_;
};

FilteredMap identity_map(const ComplexPtr& x);
// g after f
FilteredMap compose(const FilteredMap& g, const FilteredMap& f);
// same table, codomain swapped for an identical complex
bool same_table(const FilteredMap& a, const FilteredMap& b);

// Lookup of simplices by vertex sequence in complexes where every non-degenerate
// simplex has distinct vertices and is determined by them.
class VertexIndex {
public:
    explicit VertexIndex(ComplexPtr c);
    // monotone vertex sequence, consecutive repeats allowed
    std::optional<SimplexRef> find(std::span<const int> vertices) const;
    SimplexRef at(std::span<const int> vertices) const;
    const ComplexPtr& complex() const { return c_; }

private:
    ComplexPtr c_;
    std::map<std::vector<int>, int> index_;
};

// map determined by a vertex function into a vertex-determined codomain
FilteredMap map_from_vertices(const ComplexPtr& dom, const VertexIndex& cod, const std::function<int(int)>& vertex_image);

}  // namespace strata
