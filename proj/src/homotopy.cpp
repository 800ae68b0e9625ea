#include "strata/homotopy.hpp"

#include <deque>
#include <numeric>

namespace strata {

namespace {

struct EndGraph {
    SearchStatus status = SearchStatus::complete;
    std::vector<FilteredMap> maps;
    std::map<std::vector<SimplexRef>, int> index;
    std::vector<std::vector<std::pair<int, bool>>> adj;
    Product cylinder;
    FilteredMap end0, end1;
};

SearchStatus merge(SearchStatus a, SearchStatus b) {
    return a == SearchStatus::budget_exhausted || b == SearchStatus::budget_exhausted ? SearchStatus::budget_exhausted
                                                                                      : SearchStatus::complete;
}

EndGraph end_graph(const ComplexPtr& x, const ComplexPtr& y, long budget) {
    EndGraph g;
    auto [st, maps] = enumerate_maps(x, y, budget);
    g.status = st;
    g.maps = std::move(maps);
    for (size_t i = 0; i < g.maps.size(); ++i) g.index.emplace(g.maps[i].images(), static_cast<int>(i));
    g.adj.assign(g.maps.size(), {});
    g.cylinder = tensor(x, plain_simplex(1), x->dim() + 1);
    g.end0 = tensor_end(g.cylinder, 0);
    g.end1 = tensor_end(g.cylinder, 1);
    std::vector<int> vars;
    for (auto& s : g.end0.images()) vars.push_back(s.gen);
    for (auto& s : g.end1.images()) vars.push_back(s.gen);
    SearchOptions o;
    o.budget = budget;
    MapSearch search(g.cylinder.complex, y, o);
    const size_t n = x->size();
    auto st2 = search.for_each_projection(vars, [&](const std::vector<SimplexRef>& v) {
        std::vector<SimplexRef> a(v.begin(), v.begin() + n), b(v.begin() + n, v.end());
        auto ia = g.index.find(a), ib = g.index.find(b);
        if (ia == g.index.end() || ib == g.index.end()) throw Error("homotopy end outside the enumerated maps");
        g.adj[ia->second].push_back({ib->second, true});
        g.adj[ib->second].push_back({ia->second, false});
        return true;
    });
    g.status = merge(g.status, st2);
    return g;
}

}  // namespace

MappingLevel mapping_space_level(const ComplexPtr& x, const ComplexPtr& y, int n, long budget) {
    MappingLevel lv;
    lv.x = x;
    lv.y = y;
    lv.n = n;
    lv.cylinder = tensor(x, plain_simplex(n), x->dim() + n);
    auto [st, maps] = enumerate_maps(lv.cylinder.complex, y, budget);
    lv.status = st;
    lv.maps = std::move(maps);
    return lv;
}

FilteredMap plain_operator(int m, int n, std::span<const int> theta) {
    Poset pt = Poset::point();
    return simplex_operator(standard_simplex_sub(pt, ColorWord(m + 1, 0)), standard_simplex_sub(pt, ColorWord(n + 1, 0)), theta);
}

FilteredMap precompose(const FilteredMap& h, const Product& upper, const Product& lower, std::span<const int> theta) {
    const int m = static_cast<int>(theta.size()) - 1;
    const int n = upper.right->dim();
    FilteredMap op = plain_operator(m, n, theta);
    FilteredMap inc = tensor_map(lower, upper, nullptr, &op);
    return compose(h, inc);
}

FilteredMap constant_homotopy(const FilteredMap& f, const Product& cylinder) {
    return compose(f, cylinder.project_left());
}

HomotopyClasses homotopy_classes(const ComplexPtr& x, const ComplexPtr& y, long budget) {
    EndGraph g = end_graph(x, y, budget);
    HomotopyClasses out;
    out.status = g.status;
    out.maps = g.maps;
    out.cls.assign(g.maps.size(), -1);
    for (size_t s = 0; s < g.maps.size(); ++s) {
        if (out.cls[s] >= 0) continue;
        const int c = out.count++;
        std::deque<int> q{static_cast<int>(s)};
        out.cls[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [v, dir] : g.adj[u])
                if (out.cls[v] < 0) {
                    out.cls[v] = c;
                    q.push_back(v);
                }
        }
    }
    return out;
}

HomotopyVerdict are_homotopic(const FilteredMap& f, const FilteredMap& g, long budget) {
    if (f.domain()->size() != g.domain()->size() || f.codomain()->size() != g.codomain()->size())
        throw Error("homotopy between maps with different domains or codomains");
    EndGraph eg = end_graph(f.domain(), f.codomain(), budget);
    HomotopyVerdict out;
    out.status = eg.status;
    auto fi = eg.index.find(f.images()), gi = eg.index.find(g.images());
    if (fi == eg.index.end() || gi == eg.index.end()) {
        out.status = SearchStatus::budget_exhausted;
        return out;
    }
    std::vector<std::pair<int, bool>> prev(eg.maps.size(), {-1, true});
    std::vector<char> seen(eg.maps.size(), 0);
    std::deque<int> q{fi->second};
    seen[fi->second] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [v, dir] : eg.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                prev[v] = {u, dir};
                q.push_back(v);
            }
    }
    if (!seen[gi->second]) return out;
    out.homotopic = true;
    std::vector<int> path{gi->second};
    while (path.back() != fi->second) path.push_back(prev[path.back()].first);
    std::reverse(path.begin(), path.end());
    for (size_t i = 0; i < path.size(); ++i) out.chain.push_back(eg.maps[path[i]]);
    const auto& cyl = eg.cylinder;
    if (path.size() == 1) {
        out.steps.push_back({constant_homotopy(eg.maps[path[0]], cyl), true});
        return out;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        bool dir = prev[path[i + 1]].second;
        const FilteredMap& a = eg.maps[dir ? path[i] : path[i + 1]];
        const FilteredMap& b = eg.maps[dir ? path[i + 1] : path[i]];
        SearchOptions o;
        o.budget = budget;
        MapSearch s(cyl.complex, f.codomain(), o);
        for (int v = 0; v < f.domain()->size(); ++v) {
            s.fix(eg.end0.image(v).gen, a.image(v));
            s.fix(eg.end1.image(v).gen, b.image(v));
        }
        auto [st, h] = s.first();
        if (!h) throw Error("elementary homotopy vanished on reconstruction");
        out.steps.push_back({*h, dir});
    }
    return out;
}

}  // namespace strata
