#pragma once

#include <string>
#include <variant>

#include "arrtop/arrangement.hpp"
#include "arrtop/monomial.hpp"

namespace arrtop {

// Ideal text: one generator per line, either `x1*x2*x5` (optional `^e`
// exponents) or the support set `{1,2,5}`; the variable count is the
// largest index seen.  Arrangement text: a header line `n=<int>` followed
// by one index set `{i,j,...}` per line (`{}` is the whole space).  Both
// formats ignore blank lines and `#` comments and tolerate spaces anywhere
// between tokens; errors carry 1-based line numbers.

MonomialIdeal parse_ideal_text(const std::string& text);
Arrangement parse_arrangement_text(const std::string& text);

// Auto-detects the format: arrangement iff the first significant line is
// the n= header.
using ParsedInput = std::variant<MonomialIdeal, Arrangement>;
ParsedInput parse_input_text(const std::string& text);

// Reads the whole file; errors mention the path.
std::string read_text_file(const std::string& path);

// Views of either input kind: the ideal of the arrangement's union, or the
// arrangement of the ideal's components.
MonomialIdeal ideal_of(const ParsedInput& input);
Arrangement arrangement_of(const ParsedInput& input);

}  // namespace arrtop
