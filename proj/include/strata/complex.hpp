#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "strata/poset.hpp"

namespace strata {

class ValidationError : public Error {
public:
    using Error::Error;
};

// A simplex in Eilenberg-Zilber normal form: generator composed with a monotone
// surjection [dim] -> [dim gen].  The surjection is stored as its plateau mask:
// bit j is set iff positions j and j+1 have the same image.  Equivalently the
// simplex is s_{i_1} ... s_{i_r} gen with i_1 > ... > i_r the set bits.
struct SimplexRef {
    int gen = -1;
    int dim = 0;
    std::uint32_t deg = 0;

    bool nondegenerate() const { return deg == 0; }
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
    size_t operator()(const SimplexRef& r) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(r.gen);
        h = h * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(r.deg) << 8 | static_cast<std::uint64_t>(r.dim));
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

namespace surj {
constexpr int kMaxDim = 30;
inline int value(std::uint32_t mask, int j) {
    return j - __builtin_popcount(mask & ((1u << j) - 1u));
}
inline int target_dim(int dim, std::uint32_t mask) { return dim - __builtin_popcount(mask); }
// values must start at 0 and step by 0 or 1
std::uint32_t from_values(std::span<const int> values);
std::vector<int> values(int dim, std::uint32_t mask);
// decreasing s-indices of the normal form
std::vector<int> indices(std::uint32_t mask);
std::string sword(std::uint32_t mask);
}  // namespace surj

struct Generator {
    std::string name;
    int dim = 0;
    ColorWord color;
    std::vector<SimplexRef> faces;
};

class FilteredComplex {
public:
    explicit FilteredComplex(Poset p) : poset_(std::move(p)) {}

    const Poset& poset() const { return poset_; }
    // faces must reference generators already present
    int add(std::string name, ColorWord color, std::vector<SimplexRef> faces);

    int size() const { return static_cast<int>(gens_.size()); }
    bool empty() const { return gens_.empty(); }
    const Generator& gen(int g) const { return gens_.at(g); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<int>& of_dim(int n) const;
    std::vector<int> counts() const;
    long euler_characteristic() const;
    std::optional<int> find(std::string_view name) const;
    int index_of(std::string_view name) const;

    SimplexRef ref(int g) const { return SimplexRef{g, gens_.at(g).dim, 0}; }
    ColorWord color(const SimplexRef& x) const;
    // x composed with the monotone map theta: [m] -> [dim x]
    SimplexRef act(const SimplexRef& x, std::span<const int> theta) const;
    SimplexRef face(const SimplexRef& x, int i) const;
    SimplexRef degeneracy(const SimplexRef& x, int j) const;
    // restriction of x to the vertices in mask (positions of x)
    SimplexRef restrict(const SimplexRef& x, std::uint32_t mask) const;
    int vertex(const SimplexRef& x, int i) const;
    std::vector<int> vertices(const SimplexRef& x) const;
    bool valid_ref(const SimplexRef& x) const;

    std::string label(const SimplexRef& x) const;
    SimplexRef parse_label(std::string_view text) const;

    void validate() const;

private:
    SimplexRef restrict_gen(int g, std::uint32_t mask) const;

    Poset poset_;
    std::vector<Generator> gens_;
    std::vector<std::vector<int>> by_dim_;
    std::unordered_map<std::string, int> names_;
};

using ComplexPtr = std::shared_ptr<const FilteredComplex>;

ComplexPtr finalize(FilteredComplex&& c);

// theta helpers
std::vector<int> coface_map(int dim, int i);      // δ_i: [dim-1] -> [dim]
std::vector<int> codegeneracy_map(int dim, int j);  // σ_j: [dim+1] -> [dim]

}  // namespace strata
