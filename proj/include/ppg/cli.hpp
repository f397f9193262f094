#pragma once

#include "ppg/word.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ppg::cli {

// Grammar errors carry the offending position; dependent w-subscripts are rejected.
GroupWord parse_word(std::string_view text);

// Runs one command line (without the program name). Exit status: 0 on
// success or pass, 1 on a verification failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ppg::cli
