#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strata {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Poset {
public:
    Poset() = default;
    // relations are pairs (a, b) meaning a <= b; closed reflexively and transitively
    Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations);

    static Poset chain(int n);
    static Poset point();

    int size() const { return static_cast<int>(names_.size()); }
    bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    const std::string& name(int a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(std::string_view name) const;
    int index_of(std::string_view name) const;
    // Hasse diagram, sorted
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

private:
    std::vector<std::string> names_;
    std::vector<char> leq_;
};

// A color word [q_0,...,q_N] of poset element indices; names the filtered simplex Δ^J.
using ColorWord = std::vector<int>;

bool is_monotone(const Poset& p, const ColorWord& w);
bool is_strict(const Poset& p, const ColorWord& w);
ColorWord face(const ColorWord& w, int i);
ColorWord degeneracy(const ColorWord& w, int i);
ColorWord nondegenerate_support(const ColorWord& w);
bool contains_color(const ColorWord& w, int q);

std::string format_word(const Poset& p, const ColorWord& w);
ColorWord parse_word(const Poset& p, std::string_view text);

// all monotone words of the given length, lexicographic in element index
std::vector<ColorWord> monotone_words(const Poset& p, int length);
// non-degenerate simplices of N(P): strictly increasing chains, by length then lexicographic
std::vector<ColorWord> nerve_words(const Poset& p, int max_length = -1);

}  // namespace strata
