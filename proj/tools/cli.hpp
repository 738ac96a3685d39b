#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "klreg/klreg.hpp"

namespace klreg::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagree = 1,
    kUsage = 2,
    kInvalid = 3,
    kResource = 4,
    kInternal = 5,
};

// Accepts a JSON array ("[4,6,1,2]") or entries separated by spaces or commas.
// A bare digit string is read one digit per entry, and only when it is shorter than 10.
Permutation parse_permutation(const std::string& text);

// {"lambda": [...], "mu": [...], "marked": [{"point": [row, col], "r": k}, ...]}
Ladder parse_ladder(const std::string& json_text);
Ladder load_ladder(const std::string& path);

// Oracle budget, overridable by KLREG_BUDGET.
std::size_t budget_from_env();

int exit_code_for(ErrorKind kind);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace klreg::cli
