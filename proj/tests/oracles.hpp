#pragma once
// Brute-force reference enumerators.  These deliberately avoid the library's
// normal-form machinery so that they can serve as independent checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "strata/complex.hpp"
#include "strata/poset.hpp"

namespace oracle {

// every labelled partial order on n elements
inline std::vector<strata::Poset> all_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<strata::Poset> out;
    const int m = static_cast<int>(pairs.size());
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        std::vector<std::vector<int>> le(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) le[i][i] = 1;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) le[pairs[i].first][pairs[i].second] = 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && le[a][b] && le[b][a]) ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
            }
        if (!ok) continue;
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) rel.push_back(pairs[i]);
        out.emplace_back(names, rel);
    }
    return out;
}

inline std::vector<strata::Poset> posets_up_to(int n) {
    std::vector<strata::Poset> out;
    for (int k = 1; k <= n; ++k)
        for (auto& p : all_posets(k)) out.push_back(p);
    return out;
}

// monotone words by filtering all sequences
inline std::vector<std::vector<int>> words(const strata::Poset& p, int len) {
    std::vector<std::vector<int>> out;
    const int n = p.size();
    long total = 1;
    for (int i = 0; i < len; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
        std::vector<int> w(len);
        long c = code;
        for (int i = len - 1; i >= 0; --i) {
            w[i] = static_cast<int>(c % n);
            c /= n;
        }
        bool ok = true;
        for (int i = 1; i < len && ok; ++i) ok = p.leq(w[i - 1], w[i]);
        if (ok) out.push_back(w);
    }
    return out;
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Simplex counts of sd_P(Δ^w), straight from the set comprehension:
// chains (σ_0,q_0) < ... < (σ_m,q_m), σ_i ⊆ σ_{i+1}, q_i <= q_{i+1}, q_i ∈ π(σ_0),
// consecutive pairs distinct.
inline std::vector<long> sd_counts(const strata::Poset& p, const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<std::pair<std::uint32_t, int>> verts;
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        for (int q = 0; q < p.size(); ++q) verts.emplace_back(s, q);
    std::vector<long> counts;
    std::vector<std::pair<std::uint32_t, int>> chain;
    std::function<void()> rec = [&]() {
        if (!chain.empty()) {
            std::set<int> colors0;
            for (int i = 0; i < n; ++i)
                if (chain[0].first >> i & 1u) colors0.insert(w[i]);
            bool ok = true;
            for (auto& [s, q] : chain)
                if (!colors0.count(q)) ok = false;
            if (ok) {
                size_t d = chain.size() - 1;
                if (counts.size() <= d) counts.resize(d + 1, 0);
                ++counts[d];
            }
        }
        for (auto& v : verts) {
            if (!chain.empty()) {
                auto& b = chain.back();
                if ((b.first & ~v.first) != 0) continue;
                if (!p.leq(b.second, v.second)) continue;
                if (b == v) continue;
            }
            chain.push_back(v);
            rec();
            chain.pop_back();
        }
    };
    rec();
    return counts;
}

// Non-degenerate k-simplices of Δ^n × Δ^1: jointly injective pairs of monotone maps.
inline std::vector<long> prism_counts(int n) {
    std::vector<long> counts;
    for (int k = 0; k <= n + 1; ++k) {
        long c = 0;
        std::vector<int> a(k + 1), b(k + 1);
        std::function<void(int)> rec = [&](int i) {
            if (i > k) {
                for (int j = 0; j < k; ++j)
                    if (a[j] == a[j + 1] && b[j] == b[j + 1]) return;
                ++c;
                return;
            }
            for (int x = (i ? a[i - 1] : 0); x <= n; ++x)
                for (int y = (i ? b[i - 1] : 0); y <= 1; ++y) {
                    a[i] = x;
                    b[i] = y;
                    rec(i + 1);
                }
        };
        rec(0);
        counts.push_back(c);
    }
    return counts;
}

// Filtered maps X -> Y counted by plain backtracking over every simplex of Y,
// checking each face relation directly.
inline long map_count(const strata::FilteredComplex& x, const strata::FilteredComplex& y) {
    using strata::SimplexRef;
    std::vector<std::vector<SimplexRef>> cands(x.size());
    for (int g = 0; g < x.size(); ++g) {
        const int n = x.gen(g).dim;
        for (int h = 0; h < y.size(); ++h) {
            const int m = y.gen(h).dim;
            if (m > n) continue;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != n - m) continue;
                SimplexRef s{h, n, mask};
                if (y.color(s) == x.gen(g).color) cands[g].push_back(s);
            }
        }
    }
    std::vector<int> order(x.size());
    for (int g = 0; g < x.size(); ++g) order[g] = g;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x.gen(a).dim < x.gen(b).dim; });
    std::vector<SimplexRef> img(x.size());
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == order.size()) {
            ++count;
            return;
        }
        const int g = order[pos];
        const auto& gen = x.gen(g);
        for (auto& s : cands[g]) {
            bool ok = true;
            for (int i = 0; i <= gen.dim && gen.dim > 0 && ok; ++i) {
                const SimplexRef& f = gen.faces[i];
                std::vector<int> theta(f.dim + 1);
                for (int a = 0; a <= f.dim; ++a) theta[a] = strata::surj::value(f.deg, a);
                ok = y.face(s, i) == y.act(img[f.gen], theta);
            }
            if (!ok) continue;
            img[g] = s;
            rec(pos + 1);
        }
    };
    rec(0);
    return count;
}

// invariant factors from determinantal divisors: d_k = gcd of all k×k minors
inline long det(std::vector<std::vector<long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long total = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<long>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<long> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(row);
        }
        total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return total;
}

inline std::vector<long> determinantal_factors(const std::vector<std::vector<long>>& a, int rows, int cols) {
    std::vector<long> d{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        long g = 0;
        for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
            if (__builtin_popcount(rm) != k) continue;
            for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
                if (__builtin_popcount(cm) != k) continue;
                std::vector<std::vector<long>> sub;
                for (int i = 0; i < rows; ++i) {
                    if (!(rm >> i & 1u)) continue;
                    std::vector<long> row;
                    for (int j = 0; j < cols; ++j)
                        if (cm >> j & 1u) row.push_back(a[i][j]);
                    sub.push_back(row);
                }
                g = std::gcd(g, std::labs(det(sub)));
            }
        }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<long> s;
    for (size_t k = 1; k < d.size(); ++k) s.push_back(d[k] / d[k - 1]);
    return s;
}

}  // namespace oracle
