#pragma once

#include <functional>
#include <map>
#include <unordered_map>

#include "strata/morphism.hpp"

namespace strata {

// All simplices of a complex up to a dimension, degenerate ones included, with
// dense ids per dimension ordered by (number of degeneracies, generator).
class SimplexTable {
public:
    SimplexTable(ComplexPtr c, int max_dim);

    const ComplexPtr& complex() const { return c_; }
    int max_dim() const { return static_cast<int>(levels_.size()) - 1; }
    int level_size(int n) const { return n <= max_dim() ? static_cast<int>(levels_[n].size()) : 0; }
    const SimplexRef& at(int n, int id) const { return levels_[n][id]; }
    int id(const SimplexRef& x) const;
    std::optional<int> find(const SimplexRef& x) const;
    const ColorWord& color(int n, int id) const { return colors_[n][color_of_[n][id]]; }
    // ids of dimension n with the given color word, ascending
    const std::vector<int>& with_color(int n, const ColorWord& w) const;
    int face(int n, int id, int i) const { return faces_[n][id * (n + 1) + i]; }
    // the id u in dimension target_dim(n, tau) with u∘tau = x, or -1
    const std::vector<int>& factor_table(int n, std::uint32_t tau) const;

private:
    ComplexPtr c_;
    std::vector<std::vector<SimplexRef>> levels_;
    std::vector<std::vector<ColorWord>> colors_;
    std::vector<std::vector<int>> color_of_;
    std::vector<std::map<ColorWord, std::vector<int>>> by_color_;
    std::vector<std::vector<int>> faces_;
    std::unordered_map<SimplexRef, int, SimplexRefHash> ids_;
    mutable std::map<std::pair<int, std::uint32_t>, std::vector<int>> factor_;
};

enum class SearchStatus { complete, stopped, budget_exhausted };

long default_budget();

struct SearchOptions {
    long budget = default_budget();
    // values must be distinct non-degenerate generators
    bool injective = false;
};

// Backtracking search over generator assignments X -> Y with arc consistency on
// the face constraints.  Variables are the generators of X taken in (dim, id) order.
class MapSearch {
public:
    MapSearch(ComplexPtr dom, ComplexPtr cod, SearchOptions opts = {});
    MapSearch(ComplexPtr dom, std::shared_ptr<const SimplexTable> table, SearchOptions opts = {});

    void fix(int gen, const SimplexRef& value);
    void restrict_to(int gen, const std::vector<SimplexRef>& values);

    using Visitor = std::function<bool(const std::vector<SimplexRef>&)>;
    // visitor returns false to stop
    SearchStatus for_each(const Visitor& visit);
    // distinct restrictions to the given generators that extend to a full map;
    // the visitor receives values in the order of `vars`
    // visits each assignment of vars that extends to a full map; prefilter may skip the extension check
    SearchStatus for_each_projection(const std::vector<int>& vars, const Visitor& visit, const Visitor& prefilter = {});
    std::pair<SearchStatus, std::optional<FilteredMap>> first();
    std::pair<SearchStatus, std::vector<FilteredMap>> all();
    long nodes() const { return nodes_; }
    const SimplexTable& table() const { return *table_; }

private:
    struct Constraint {
        int x, g;
        int table;
    };
    using Domains = std::vector<std::uint64_t>;

    void setup();
    bool propagate(Domains& d, std::vector<int> queue) const;
    bool assign(Domains& d, int var, int value) const;
    int single(const Domains& d, int var) const;
    bool empty(const Domains& d, int var) const;
    int domain_size(const Domains& d, int var) const;
    bool exists(Domains& d, std::vector<int> open);
    bool search(Domains& d, const std::vector<int>& order, size_t pos, size_t stop, const std::function<bool(Domains&)>& leaf,
                bool& halted);

    ComplexPtr dom_;
    std::shared_ptr<const SimplexTable> table_;
    SearchOptions opts_;
    std::vector<int> offset_, words_, dimv_;
    std::vector<Constraint> cons_;
    std::vector<std::vector<int>> composed_;
    std::vector<std::vector<int>> touching_;
    Domains init_;
    bool ok_ = true;
    long nodes_ = 0;
    bool exhausted_ = false;
};

std::pair<SearchStatus, std::vector<FilteredMap>> enumerate_maps(const ComplexPtr& x, const ComplexPtr& y,
                                                                 long budget = default_budget());
long count_maps(const ComplexPtr& x, const ComplexPtr& y, SearchStatus* status = nullptr, long budget = default_budget());
std::pair<SearchStatus, std::optional<FilteredMap>> find_isomorphism(const ComplexPtr& x, const ComplexPtr& y,
                                                                     long budget = default_budget());

}  // namespace strata
