#pragma once

#include <string>
#include <vector>

namespace strata {

// letters are ±(g+1) for generator g
using GroupWord = std::vector<int>;

struct GroupPresentation {
    int generators = 0;
    std::vector<std::string> names;
    std::vector<GroupWord> relators;
};

using IntMatrix = std::vector<std::vector<long>>;  // row-major

struct SmithForm {
    std::vector<long> diagonal;  // non-zero diagonal entries, each dividing the next
    IntMatrix u, v;              // unimodular with u * a * v = diag
    int rows = 0, cols = 0;
    int rank() const { return static_cast<int>(diagonal.size()); }
};
SmithForm smith_normal_form(const IntMatrix& a, int rows, int cols);

// column-style Hermite normal form of the lattice spanned by the columns
IntMatrix hermite_normal_form(const IntMatrix& a, int rows, int cols);

// invariant factors of Z^rows / (column span): torsion factors > 1 ascending, then one 0 per free summand
std::vector<long> quotient_invariants(const IntMatrix& a, int rows, int cols);

// rows = generators, columns = relators
IntMatrix relation_matrix(const GroupPresentation& g);
std::vector<long> abelian_invariants(const GroupPresentation& g);

// exponent-sum matrix of a homomorphism (rows = target generators, columns = source generators)
IntMatrix abelianized_map(const std::vector<GroupWord>& images, int target_generators);

std::vector<long> cokernel_invariants(const GroupPresentation& src, const GroupPresentation& tgt,
                                      const std::vector<GroupWord>& images);
std::vector<long> kernel_invariants(const GroupPresentation& src, const GroupPresentation& tgt,
                                    const std::vector<GroupWord>& images);

std::string format_invariants(const std::vector<long>& f);
std::string format_group_word(const GroupPresentation& g, const GroupWord& w);
GroupWord free_reduce(GroupWord w);

}  // namespace strata
