#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/morphism.hpp"

namespace strata {

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what);
    int line = 0, column = 0;
};

struct DocumentMap {
    std::string target;  // a complex reference, e.g. examples:circle3
    std::vector<std::pair<std::string, std::string>> images;  // generator -> simplex label in the target
};

// Text form:
//   strata-complex 1
//   poset
//     element NAME
//     cover NAME < NAME
//   generators
//     NAME [WORD]
//     NAME [WORD] : LABEL ... (faces d0 .. dn, each s-word@generator)
//   pointing LABEL            (optional)
//   map REFERENCE             (optional)
//     NAME -> LABEL
// '#' starts a comment.
struct ComplexDocument {
    ComplexPtr complex;
    std::optional<std::string> pointing;
    std::optional<DocumentMap> map;
};

ComplexDocument parse_document(std::string_view text);
// canonical form: generators sorted by dimension, then name
std::string emit_document(const ComplexDocument& doc);
std::string emit_complex(const ComplexPtr& x);
ComplexPtr parse_complex(std::string_view text);

// builds the map of a document block into the resolved target
FilteredMap resolve_document_map(const ComplexDocument& doc, const ComplexPtr& target);

}  // namespace strata
