#include "strata/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "strata/poset.hpp"

namespace strata {

namespace {

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in matrix reduction");
    return r;
}

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in matrix reduction");
    return r;
}

IntMatrix identity(int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// row_a += c * row_b
void add_row(IntMatrix& m, int a, int b, long c) {
    for (size_t j = 0; j < m[a].size(); ++j) m[a][j] = checked_add(m[a][j], checked_mul(c, m[b][j]));
}

void add_col(IntMatrix& m, int a, int b, long c) {
    for (auto& row : m) row[a] = checked_add(row[a], checked_mul(c, row[b]));
}

void swap_cols(IntMatrix& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& m, int a) {
    for (auto& x : m[a]) x = -x;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int n, int k, int m) {
    IntMatrix c(n, std::vector<long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][l], b[l][j]));
        }
    return c;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& in, int rows, int cols) {
    SmithForm s;
    s.rows = rows;
    s.cols = cols;
    IntMatrix a = in;
    a.resize(rows);
    for (auto& r : a) r.resize(cols, 0);
    s.u = identity(rows);
    s.v = identity(cols);
    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::labs(a[i][j]) < std::labs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        std::swap(s.u[t], s.u[pi]);
        swap_cols(a, t, pj);
        swap_cols(s.v, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const long q = a[i][t] / a[t][t];
                add_row(a, i, t, -q);
                add_row(s.u, i, t, -q);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    std::swap(s.u[t], s.u[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const long q = a[t][j] / a[t][t];
                add_col(a, j, t, -q);
                add_col(s.v, j, t, -q);
                if (a[t][j] != 0) {
                    swap_cols(a, t, j);
                    swap_cols(s.v, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(a, t, i, 1);
                        add_row(s.u, t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (a[t][t] < 0) {
            negate_row(a, t);
            negate_row(s.u, t);
        }
        s.diagonal.push_back(a[t][t]);
        ++t;
    }
    return s;
}

IntMatrix hermite_normal_form(const IntMatrix& in, int rows, int cols) {
    IntMatrix a = in;
    a.resize(rows);
    for (auto& r : a) r.resize(cols, 0);
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        for (;;) {
            int best = -1;
            for (int j = c; j < cols; ++j)
                if (a[r][j] != 0 && (best < 0 || std::labs(a[r][j]) < std::labs(a[r][best]))) best = j;
            if (best < 0) break;
            swap_cols(a, c, best);
            bool done = true;
            for (int j = c + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                add_col(a, j, c, -(a[r][j] / a[r][c]));
                if (a[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (c < cols && a[r][c] != 0) {
            if (a[r][c] < 0)
                for (auto& row : a) row[c] = -row[c];
            for (int j = 0; j < c; ++j) {
                long q = a[r][j] / a[r][c];
                if (a[r][j] - q * a[r][c] < 0) --q;
                add_col(a, j, c, -q);
            }
            ++c;
        }
    }
    for (auto& row : a) row.resize(c);
    return a;
}

std::vector<long> quotient_invariants(const IntMatrix& a, int rows, int cols) {
    auto s = smith_normal_form(a, rows, cols);
    std::vector<long> out;
    for (long d : s.diagonal)
        if (d != 1) out.push_back(d);
    for (int i = s.rank(); i < rows; ++i) out.push_back(0);
    return out;
}

IntMatrix relation_matrix(const GroupPresentation& g) {
    IntMatrix m(g.generators, std::vector<long>(g.relators.size(), 0));
    for (size_t r = 0; r < g.relators.size(); ++r)
        for (int l : g.relators[r]) m[std::abs(l) - 1][r] += l > 0 ? 1 : -1;
    return m;
}

std::vector<long> abelian_invariants(const GroupPresentation& g) {
    return quotient_invariants(relation_matrix(g), g.generators, static_cast<int>(g.relators.size()));
}

IntMatrix abelianized_map(const std::vector<GroupWord>& images, int target_generators) {
    IntMatrix m(target_generators, std::vector<long>(images.size(), 0));
    for (size_t c = 0; c < images.size(); ++c)
        for (int l : images[c]) {
            if (std::abs(l) > target_generators) throw Error("homomorphism image uses an unknown generator");
            m[std::abs(l) - 1][c] += l > 0 ? 1 : -1;
        }
    return m;
}

std::vector<long> cokernel_invariants(const GroupPresentation& src, const GroupPresentation& tgt,
                                      const std::vector<GroupWord>& images) {
    if (static_cast<int>(images.size()) != src.generators) throw Error("homomorphism has the wrong number of images");
    IntMatrix rb = relation_matrix(tgt);
    IntMatrix f = abelianized_map(images, tgt.generators);
    for (int i = 0; i < tgt.generators; ++i) rb[i].insert(rb[i].end(), f[i].begin(), f[i].end());
    return quotient_invariants(rb, tgt.generators, static_cast<int>(tgt.relators.size() + images.size()));
}

std::vector<long> kernel_invariants(const GroupPresentation& src, const GroupPresentation& tgt,
                                    const std::vector<GroupWord>& images) {
    if (static_cast<int>(images.size()) != src.generators) throw Error("homomorphism has the wrong number of images");
    const int m = src.generators, n = tgt.generators;
    const int rb_cols = static_cast<int>(tgt.relators.size());
    IntMatrix f = abelianized_map(images, n);
    IntMatrix rb = relation_matrix(tgt);
    // kernel of [F | -R_B] projected to the first m coordinates spans {x : F x ∈ im R_B}
    IntMatrix big(n, std::vector<long>(m + rb_cols, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) big[i][j] = f[i][j];
        for (int j = 0; j < rb_cols; ++j) big[i][m + j] = -rb[i][j];
    }
    auto sb = smith_normal_form(big, n, m + rb_cols);
    IntMatrix gens(m);
    for (int j = sb.rank(); j < m + rb_cols; ++j)
        for (int i = 0; i < m; ++i) gens[i].push_back(sb.v[i][j]);
    const int gcols = m + rb_cols - sb.rank();
    auto sl = smith_normal_form(gens, m, gcols);
    const int s = sl.rank();
    IntMatrix ra = relation_matrix(src);
    const int ra_cols = static_cast<int>(src.relators.size());
    IntMatrix coords(s, std::vector<long>(ra_cols, 0));
    IntMatrix ur = multiply(sl.u, ra, m, m, ra_cols);
    for (int j = 0; j < ra_cols; ++j) {
        for (int i = 0; i < m; ++i) {
            if (i < s) {
                if (ur[i][j] % sl.diagonal[i] != 0) throw Error("relator of the source leaves the kernel lattice");
                coords[i][j] = ur[i][j] / sl.diagonal[i];
            } else if (ur[i][j] != 0) {
                throw Error("homomorphism does not respect the relators");
            }
        }
    }
    return quotient_invariants(coords, s, ra_cols);
}

std::string format_invariants(const std::vector<long>& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
}

std::string format_group_word(const GroupPresentation& g, const GroupWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        const int gi = std::abs(w[i]) - 1;
        s += (i ? " " : "") + (gi < static_cast<int>(g.names.size()) ? g.names[gi] : "g" + std::to_string(gi));
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

GroupWord free_reduce(GroupWord w) {
    GroupWord out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace strata
