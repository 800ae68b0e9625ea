#include "strata/search.hpp"

#include <algorithm>
#include <cstdlib>

namespace strata {

namespace {

void for_each_mask(int n, int k, const std::function<void(std::uint32_t)>& f) {
    // n-bit masks (bits 0..n-1) with exactly k set bits
    if (k == 0) {
        f(0);
        return;
    }
    if (n <= 0 || k > n) return;
    std::uint32_t m = (1u << k) - 1u;
    const std::uint32_t limit = 1u << n;
    while (m < limit) {
        f(m);
        std::uint32_t c = m & (~m + 1u);
        std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

inline bool test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
inline void set(std::uint64_t* w, int i) { w[i >> 6] |= 1ull << (i & 63); }

}  // namespace

long default_budget() {
    if (const char* v = std::getenv("STRATA_BUDGET")) {
        char* end = nullptr;
        long b = std::strtol(v, &end, 10);
        if (end != v && b > 0) return b;
    }
    return 50'000'000;
}

SimplexTable::SimplexTable(ComplexPtr c, int max_dim) : c_(std::move(c)) {
    if (max_dim < 0) max_dim = 0;
    levels_.resize(max_dim + 1);
    colors_.resize(max_dim + 1);
    color_of_.resize(max_dim + 1);
    by_color_.resize(max_dim + 1);
    faces_.resize(max_dim + 1);
    for (int n = 0; n <= max_dim; ++n) {
        auto& lv = levels_[n];
        for (int k = 0; k <= n; ++k) {
            const int m = n - k;
            if (m > c_->dim()) continue;
            for (int g : c_->of_dim(m)) for_each_mask(n, k, [&](std::uint32_t mask) { lv.push_back(SimplexRef{g, n, mask}); });
        }
        std::stable_sort(lv.begin(), lv.end(), [](const SimplexRef& a, const SimplexRef& b) {
            int pa = __builtin_popcount(a.deg), pb = __builtin_popcount(b.deg);
            if (pa != pb) return pa < pb;
            if (a.gen != b.gen) return a.gen < b.gen;
            return a.deg < b.deg;
        });
        std::map<ColorWord, int> cidx;
        color_of_[n].resize(lv.size());
        for (size_t i = 0; i < lv.size(); ++i) {
            ids_.emplace(lv[i], static_cast<int>(i));
            ColorWord w = c_->color(lv[i]);
            auto [it, fresh] = cidx.emplace(w, static_cast<int>(colors_[n].size()));
            if (fresh) colors_[n].push_back(w);
            color_of_[n][i] = it->second;
            by_color_[n][w].push_back(static_cast<int>(i));
        }
        if (n > 0) {
            faces_[n].resize(lv.size() * (n + 1));
            for (size_t i = 0; i < lv.size(); ++i)
                for (int f = 0; f <= n; ++f) faces_[n][i * (n + 1) + f] = id(c_->face(lv[i], f));
        }
    }
}

int SimplexTable::id(const SimplexRef& x) const {
    auto it = ids_.find(x);
    if (it == ids_.end()) throw Error("simplex outside the table");
    return it->second;
}

std::optional<int> SimplexTable::find(const SimplexRef& x) const {
    auto it = ids_.find(x);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& SimplexTable::with_color(int n, const ColorWord& w) const {
    static const std::vector<int> none;
    if (n > max_dim()) return none;
    auto it = by_color_[n].find(w);
    return it == by_color_[n].end() ? none : it->second;
}

const std::vector<int>& SimplexTable::factor_table(int n, std::uint32_t tau) const {
    auto key = std::make_pair(n, tau);
    auto it = factor_.find(key);
    if (it != factor_.end()) return it->second;
    std::vector<int> out(levels_[n].size(), -1);
    if (tau == 0) {
        for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    } else {
        const int m = surj::target_dim(n, tau);
        auto tv = surj::values(n, tau);
        std::vector<int> section(m + 1, -1);
        for (int j = n; j >= 0; --j) section[tv[j]] = j;
        for (size_t i = 0; i < out.size(); ++i) {
            SimplexRef u = c_->act(levels_[n][i], section);
            if (c_->act(u, tv) == levels_[n][i]) out[i] = id(u);
        }
    }
    return factor_.emplace(key, std::move(out)).first->second;
}

MapSearch::MapSearch(ComplexPtr dom, ComplexPtr cod, SearchOptions opts)
    : MapSearch(dom, std::make_shared<SimplexTable>(cod, std::max(0, dom->dim())), opts) {}

MapSearch::MapSearch(ComplexPtr dom, std::shared_ptr<const SimplexTable> table, SearchOptions opts)
    : dom_(std::move(dom)), table_(std::move(table)), opts_(opts) {
    if (!(dom_->poset() == table_->complex()->poset())) throw Error("maps between complexes over different posets");
    if (table_->max_dim() < dom_->dim()) throw Error("simplex table too shallow for the domain");
    setup();
}

void MapSearch::setup() {
    const int nv = dom_->size();
    offset_.resize(nv);
    words_.resize(nv);
    dimv_.resize(nv);
    int total = 0;
    for (int v = 0; v < nv; ++v) {
        dimv_[v] = dom_->gen(v).dim;
        words_[v] = (table_->level_size(dimv_[v]) + 63) / 64;
        offset_[v] = total;
        total += words_[v];
    }
    init_.assign(total, 0);
    for (int v = 0; v < nv; ++v) {
        const auto& g = dom_->gen(v);
        for (int id : table_->with_color(g.dim, g.color)) {
            if (opts_.injective && !table_->at(g.dim, id).nondegenerate()) continue;
            set(&init_[offset_[v]], id);
        }
    }
    // composite tables y -> the u with u∘tau = d_i y
    touching_.assign(nv, {});
    std::map<std::tuple<int, int, std::uint32_t>, int> made;
    composed_.clear();
    for (int v = 0; v < nv; ++v) {
        const auto& g = dom_->gen(v);
        for (int i = 0; i <= g.dim && g.dim > 0; ++i) {
            const SimplexRef& f = g.faces[i];
            auto key = std::make_tuple(g.dim, i, f.deg);
            auto it = made.find(key);
            if (it == made.end()) {
                const auto& fac = table_->factor_table(g.dim - 1, f.deg);
                std::vector<int> t(table_->level_size(g.dim), -1);
                for (size_t y = 0; y < t.size(); ++y) t[y] = fac[table_->face(g.dim, static_cast<int>(y), i)];
                composed_.push_back(std::move(t));
                it = made.emplace(key, static_cast<int>(composed_.size()) - 1).first;
            }
            cons_.push_back(Constraint{v, f.gen, it->second});
            touching_[v].push_back(static_cast<int>(cons_.size()) - 1);
            if (f.gen != v) touching_[f.gen].push_back(static_cast<int>(cons_.size()) - 1);
        }
    }
    std::vector<int> all(nv);
    for (int v = 0; v < nv; ++v) {
        all[v] = v;
        if (empty(init_, v)) ok_ = false;
    }
    if (ok_) ok_ = propagate(init_, all);
}

bool MapSearch::empty(const Domains& d, int var) const {
    for (int w = 0; w < words_[var]; ++w)
        if (d[offset_[var] + w]) return false;
    return true;
}

int MapSearch::single(const Domains& d, int var) const {
    int found = -1;
    for (int w = 0; w < words_[var]; ++w) {
        std::uint64_t x = d[offset_[var] + w];
        if (!x) continue;
        if (found >= 0 || (x & (x - 1))) return -1;
        found = w * 64 + __builtin_ctzll(x);
    }
    return found;
}

bool MapSearch::propagate(Domains& d, std::vector<int> queue) const {
    std::vector<char> queued(dom_->size(), 0);
    for (int v : queue) queued[v] = 1;
    std::vector<std::uint64_t> support;
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        queued[v] = 0;
        for (int ci : touching_[v]) {
            const Constraint& c = cons_[ci];
            const std::vector<int>& t = composed_[c.table];
            std::uint64_t* dx = &d[offset_[c.x]];
            std::uint64_t* dg = &d[offset_[c.g]];
            support.assign(words_[c.g], 0);
            bool xchanged = false;
            for (int w = 0; w < words_[c.x]; ++w) {
                std::uint64_t bits = dx[w];
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    int y = w * 64 + b;
                    int u = t[y];
                    if (u < 0 || !test(dg, u)) {
                        clear(dx, y);
                        xchanged = true;
                    } else {
                        set(support.data(), u);
                    }
                }
            }
            bool gchanged = false;
            for (int w = 0; w < words_[c.g]; ++w) {
                std::uint64_t nw = dg[w] & support[w];
                if (nw != dg[w]) {
                    dg[w] = nw;
                    gchanged = true;
                }
            }
            if (xchanged) {
                if (empty(d, c.x)) return false;
                if (!queued[c.x]) {
                    queued[c.x] = 1;
                    queue.push_back(c.x);
                }
            }
            if (gchanged) {
                if (empty(d, c.g)) return false;
                if (!queued[c.g]) {
                    queued[c.g] = 1;
                    queue.push_back(c.g);
                }
            }
        }
    }
    return true;
}

bool MapSearch::assign(Domains& d, int var, int value) const {
    std::uint64_t* dv = &d[offset_[var]];
    for (int w = 0; w < words_[var]; ++w) dv[w] = 0;
    set(dv, value);
    std::vector<int> queue{var};
    if (opts_.injective) {
        for (int v = 0; v < dom_->size(); ++v) {
            if (v == var || dimv_[v] != dimv_[var]) continue;
            std::uint64_t* o = &d[offset_[v]];
            if (test(o, value)) {
                clear(o, value);
                if (empty(d, v)) return false;
                queue.push_back(v);
            }
        }
    }
    return propagate(d, queue);
}

void MapSearch::fix(int gen, const SimplexRef& value) {
    auto id = table_->find(value);
    if (!ok_ || !id || value.dim != dimv_.at(gen) || !test(&init_[offset_[gen]], *id)) {
        ok_ = false;
        return;
    }
    ok_ = assign(init_, gen, *id);
}

void MapSearch::restrict_to(int gen, const std::vector<SimplexRef>& values) {
    if (!ok_) return;
    std::vector<std::uint64_t> keep(words_.at(gen), 0);
    for (auto& v : values)
        if (auto id = table_->find(v); id && v.dim == dimv_[gen]) set(keep.data(), *id);
    for (int w = 0; w < words_[gen]; ++w) init_[offset_[gen] + w] &= keep[w];
    ok_ = !empty(init_, gen) && propagate(init_, {gen});
}

int MapSearch::domain_size(const Domains& d, int var) const {
    int n = 0;
    for (int w = 0; w < words_[var]; ++w) n += __builtin_popcountll(d[offset_[var] + w]);
    return n;
}

bool MapSearch::exists(Domains& d, std::vector<int> open) {
    std::erase_if(open, [&](int v) { return single(d, v) >= 0; });
    if (open.empty()) return true;
    auto best = std::min_element(open.begin(), open.end(),
                                 [&](int a, int b) { return domain_size(d, a) < domain_size(d, b); });
    const int var = *best;
    const std::uint64_t* dv = &d[offset_[var]];
    for (int w = 0; w < words_[var]; ++w) {
        std::uint64_t bits = dv[w];
        while (bits) {
            const int u = w * 64 + __builtin_ctzll(bits);
            bits &= bits - 1;
            if (++nodes_ > opts_.budget) {
                exhausted_ = true;
                return false;
            }
            Domains copy = d;
            if (assign(copy, var, u) && exists(copy, open)) return true;
            if (exhausted_) return false;
        }
    }
    return false;
}

bool MapSearch::search(Domains& d, const std::vector<int>& order, size_t pos, size_t stop,
                       const std::function<bool(Domains&)>& leaf, bool& halted) {
    while (pos < stop && single(d, order[pos]) >= 0) ++pos;
    if (pos == stop) {
        if (!leaf(d)) halted = true;
        return true;
    }
    const int var = order[pos];
    const std::uint64_t* dv = &d[offset_[var]];
    std::vector<int> values;
    for (int w = 0; w < words_[var]; ++w) {
        std::uint64_t bits = dv[w];
        while (bits) {
            values.push_back(w * 64 + __builtin_ctzll(bits));
            bits &= bits - 1;
        }
    }
    for (int u : values) {
        if (++nodes_ > opts_.budget) {
            exhausted_ = true;
            halted = true;
            return false;
        }
        Domains copy = d;
        if (!assign(copy, var, u)) continue;
        search(copy, order, pos + 1, stop, leaf, halted);
        if (halted) return false;
    }
    return true;
}

SearchStatus MapSearch::for_each(const Visitor& visit) {
    if (!ok_) return SearchStatus::complete;
    std::vector<int> order(dom_->size());
    for (int v = 0; v < dom_->size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dimv_[a] < dimv_[b]; });
    std::vector<SimplexRef> images(dom_->size());
    bool halted = false;
    bool stopped = false;
    Domains d = init_;
    search(d, order, 0, order.size(), [&](Domains& leafd) {
        for (int v = 0; v < dom_->size(); ++v) images[v] = table_->at(dimv_[v], single(leafd, v));
        if (opts_.injective) {
            std::vector<int> seen;
            for (auto& im : images) seen.push_back(im.gen);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return true;
        }
        if (!visit(images)) {
            stopped = true;
            return false;
        }
        return true;
    }, halted);
    if (exhausted_) return SearchStatus::budget_exhausted;
    return stopped ? SearchStatus::stopped : SearchStatus::complete;
}

SearchStatus MapSearch::for_each_projection(const std::vector<int>& vars, const Visitor& visit, const Visitor& prefilter) {
    if (!ok_) return SearchStatus::complete;
    std::vector<char> in(dom_->size(), 0);
    std::vector<int> order = vars;
    for (int v : vars) in.at(v) = 1;
    std::vector<int> rest;
    for (int v = 0; v < dom_->size(); ++v)
        if (!in[v]) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return dimv_[a] < dimv_[b]; });
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<SimplexRef> values(vars.size());
    bool halted = false;
    bool stopped = false;
    Domains d = init_;
    search(d, order, 0, vars.size(), [&](Domains& partial) {
        for (size_t i = 0; i < vars.size(); ++i) values[i] = table_->at(dimv_[vars[i]], single(partial, vars[i]));
        if (prefilter && !prefilter(values)) return true;
        Domains copy = partial;
        const bool found = exists(copy, rest);
        if (exhausted_) return false;
        if (!found) return true;
        if (!visit(values)) {
            stopped = true;
            return false;
        }
        return true;
    }, halted);
    if (exhausted_) return SearchStatus::budget_exhausted;
    return stopped ? SearchStatus::stopped : SearchStatus::complete;
}

std::pair<SearchStatus, std::optional<FilteredMap>> MapSearch::first() {
    std::optional<FilteredMap> out;
    auto st = for_each([&](const std::vector<SimplexRef>& im) {
        out.emplace(dom_, table_->complex(), im);
        return false;
    });
    if (st == SearchStatus::stopped) st = SearchStatus::complete;
    return {st, out};
}

std::pair<SearchStatus, std::vector<FilteredMap>> MapSearch::all() {
    std::vector<FilteredMap> out;
    auto st = for_each([&](const std::vector<SimplexRef>& im) {
        out.emplace_back(dom_, table_->complex(), im);
        return true;
    });
    return {st, out};
}

std::pair<SearchStatus, std::vector<FilteredMap>> enumerate_maps(const ComplexPtr& x, const ComplexPtr& y, long budget) {
    SearchOptions o;
    o.budget = budget;
    return MapSearch(x, y, o).all();
}

long count_maps(const ComplexPtr& x, const ComplexPtr& y, SearchStatus* status, long budget) {
    SearchOptions o;
    o.budget = budget;
    long n = 0;
    auto st = MapSearch(x, y, o).for_each([&](const std::vector<SimplexRef>&) {
        ++n;
        return true;
    });
    if (status) *status = st;
    return n;
}

std::pair<SearchStatus, std::optional<FilteredMap>> find_isomorphism(const ComplexPtr& x, const ComplexPtr& y, long budget) {
    if (x->counts() != y->counts() || !(x->poset() == y->poset())) return {SearchStatus::complete, std::nullopt};
    SearchOptions o;
    o.budget = budget;
    o.injective = true;
    return MapSearch(x, y, o).first();
}

}  // namespace strata
