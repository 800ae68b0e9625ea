#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strata/constructions.hpp"
#include "strata/io.hpp"

namespace strata::cli {

// fixtures directory: $STRATA_FIXTURES, else the in-repo directory
std::string fixtures_dir();

struct Loaded {
    std::string reference;
    ComplexDocument doc;
    const ExampleRecord* example = nullptr;  // set for examples:NAME
};
// examples:NAME, fixtures:NAME or a file path
Loaded load_reference(const std::string& ref);

// exit codes: 0 success, 1 error, 2 unknown or budget exhausted
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
