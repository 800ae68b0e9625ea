#pragma once

#include "strata/builders.hpp"
#include "strata/search.hpp"

namespace strata {

// Map(X,Y)_n = Hom(X ⊗ Δ^n, Y)
struct MappingLevel {
    ComplexPtr x, y;
    int n = 0;
    Product cylinder;
    SearchStatus status = SearchStatus::complete;
    std::vector<FilteredMap> maps;
};

MappingLevel mapping_space_level(const ComplexPtr& x, const ComplexPtr& y, int n, long budget = default_budget());
// the plain operator Δ^m -> Δ^n given by theta
FilteredMap plain_operator(int m, int n, std::span<const int> theta);
// h ∘ (id ⊗ theta) for h: X ⊗ Δ^n -> Y and theta: [m] -> [n]
FilteredMap precompose(const FilteredMap& h, const Product& upper, const Product& lower, std::span<const int> theta);

struct HomotopyStep {
    FilteredMap homotopy;  // X ⊗ Δ^1 -> Y
    bool forward = true;   // true: from the current map at end 0 to the next at end 1
};

struct HomotopyVerdict {
    SearchStatus status = SearchStatus::complete;
    bool homotopic = false;
    std::vector<FilteredMap> chain;  // f = chain.front(), g = chain.back()
    std::vector<HomotopyStep> steps;
};

struct HomotopyClasses {
    SearchStatus status = SearchStatus::complete;
    std::vector<FilteredMap> maps;
    std::vector<int> cls;  // class index per map, classes numbered by first member
    int count = 0;
};

// elementary homotopies as pairs of end maps, closed under symmetry and transitivity
HomotopyClasses homotopy_classes(const ComplexPtr& x, const ComplexPtr& y, long budget = default_budget());
HomotopyVerdict are_homotopic(const FilteredMap& f, const FilteredMap& g, long budget = default_budget());
// the degenerate homotopy f ∘ pr
FilteredMap constant_homotopy(const FilteredMap& f, const Product& cylinder);

}  // namespace strata
