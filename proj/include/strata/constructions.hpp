#pragma once

#include "strata/anodyne.hpp"
#include "strata/invariants.hpp"

namespace strata {

// Plain models (over the one-point poset) and simplicial maps E -> M, E -> E'
struct BundleSpec {
    ComplexPtr m;   // singular stratum
    ComplexPtr e;   // holink surrogate
    ComplexPtr e2;  // regular model
    FilteredMap attach;
    FilteredMap reattach;
};
void validate_bundle(const BundleSpec& s);

struct FilteredSpace {
    ComplexPtr complex;        // over p0 < p1
    FilteredMap singular;      // M (colored p0) -> complex
    FilteredMap regular;       // E' (colored p1) -> complex
    FilteredMap cylinder;      // E ⊗ Δ^{[p0,p1]} -> complex
};
// mapping cylinder of attach with M at p0 and the rest at p1, glued to E' along reattach
FilteredSpace build_filtered_space(const BundleSpec& s);
SpiDiagram assemble_spi(const BundleSpec& s, int n = 1);

// the cycle with n vertices over the one-point poset
ComplexPtr plain_circle(int n);
// the k-fold cover C_{kn} -> C_n, vertex j ↦ j mod n
FilteredMap circle_cover(int n, int k);

// the full subcomplex of simplices of constant color q
Subcomplex stratum(const ComplexPtr& x, int q);

struct ExampleRecord {
    std::string name;
    std::string description;
    ComplexPtr complex;
    std::optional<BundleSpec> bundle;
    std::vector<std::pair<std::string, std::string>> expected;  // checked invariant record
};
std::vector<std::string> example_names();
const ExampleRecord& example(const std::string& name);

// recomputes one record entry; throws on an unknown key
std::string evaluate_record_key(const ExampleRecord& r, const std::string& key);
struct RecordCheck {
    std::string key, expected, actual;
    bool ok() const { return expected == actual; }
};
std::vector<RecordCheck> check_example(const ExampleRecord& r);

}  // namespace strata
