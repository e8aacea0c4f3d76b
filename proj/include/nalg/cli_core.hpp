#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nalg/structure_constants.hpp"

namespace nalg::cli {

struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Wire format: {"dim": n, "name": "...", "entries": [{"i","j","k","c"}, ...]}
// with 1-based indices, zero entries omitted, entries sorted by (i, j, k),
// and coefficients as canonical rational strings.
std::string structure_constants_to_json(const StructureConstants& sc);
StructureConstants structure_constants_from_json(const std::string& text);

// Full command dispatch; args exclude the program name. Exit codes: 0 ok,
// 2 input error, 3 unknown name, 4 internal invariant violation.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nalg::cli
