#include "strata/poset.hpp"

#include <algorithm>
#include <set>

namespace strata {

Poset::Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations)
    : names_(std::move(names)) {
    const int n = size();
    std::set<std::string> seen;
    for (const auto& s : names_) {
        if (s.empty()) throw Error("poset element with empty name");
        if (!seen.insert(s).second) throw Error("duplicate poset element '" + s + "'");
    }
    leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw Error("poset relation out of range");
        leq_[a * n + b] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq_[i * n + j] && leq_[j * n + i])
                throw Error("poset relation is not antisymmetric: " + names_[i] + " and " + names_[j]);
}

Poset Poset::chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        if (i > 0) rel.emplace_back(i - 1, i);
    }
    return Poset(std::move(names), rel);
}

Poset Poset::point() { return Poset({"p"}, {}); }

std::optional<int> Poset::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int Poset::index_of(std::string_view name) const {
    auto r = find(name);
    if (!r) throw Error("unknown poset element '" + std::string(name) + "'");
    return *r;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (!lt(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < size() && direct; ++c)
                if (lt(a, c) && lt(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

bool is_monotone(const Poset& p, const ColorWord& w) {
    for (int q : w)
        if (q < 0 || q >= p.size()) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (!p.leq(w[i - 1], w[i])) return false;
    return true;
}

bool is_strict(const Poset& p, const ColorWord& w) {
    if (!is_monotone(p, w)) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] == w[i]) return false;
    return true;
}

ColorWord face(const ColorWord& w, int i) {
    if (w.size() < 2) throw Error("face of a word of length < 2");
    if (i < 0 || i >= static_cast<int>(w.size())) throw Error("face index out of range");
    ColorWord r = w;
    r.erase(r.begin() + i);
    return r;
}

ColorWord degeneracy(const ColorWord& w, int i) {
    if (i < 0 || i >= static_cast<int>(w.size())) throw Error("degeneracy index out of range");
    ColorWord r = w;
    r.insert(r.begin() + i, w[i]);
    return r;
}

ColorWord nondegenerate_support(const ColorWord& w) {
    ColorWord r;
    for (int q : w)
        if (r.empty() || r.back() != q) r.push_back(q);
    return r;
}

bool contains_color(const ColorWord& w, int q) {
    return std::find(w.begin(), w.end(), q) != w.end();
}

std::string format_word(const Poset& p, const ColorWord& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += p.name(w[i]);
    }
    return s + "]";
}

ColorWord parse_word(const Poset& p, std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw Error("color word must be written [a,b,...]: " + std::string(text));
    text = text.substr(1, text.size() - 2);
    ColorWord w;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        w.push_back(p.index_of(tok));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (w.empty()) throw Error("empty color word");
    if (!is_monotone(p, w)) throw Error("color word is not monotone: " + format_word(p, w));
    return w;
}

static void extend_words(const Poset& p, ColorWord& cur, int length, std::vector<ColorWord>& out) {
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int q = 0; q < p.size(); ++q) {
        if (!cur.empty() && !p.leq(cur.back(), q)) continue;
        cur.push_back(q);
        extend_words(p, cur, length, out);
        cur.pop_back();
    }
}

std::vector<ColorWord> monotone_words(const Poset& p, int length) {
    std::vector<ColorWord> out;
    if (length <= 0) return out;
    ColorWord cur;
    extend_words(p, cur, length, out);
    return out;
}

std::vector<ColorWord> nerve_words(const Poset& p, int max_length) {
    if (max_length < 0) max_length = p.size();
    std::vector<ColorWord> out;
    for (int len = 1; len <= max_length; ++len)
        for (auto& w : monotone_words(p, len))
            if (is_strict(p, w)) out.push_back(w);
    return out;
}

}  // namespace strata
