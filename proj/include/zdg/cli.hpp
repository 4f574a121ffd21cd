#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zdg::cli {

// Runs one invocation of the command-line tool. args excludes the program
// name. Returns the process exit code: 0 success, 1 bad input, 2 mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands a ';'-separated sweep list into ring specs. Besides plain ring specs
// an item may be "Zn:a..b" or "M:a..b,GF(q)" (a single n is allowed too).
std::vector<std::string> expand_range(std::string_view spec);

// "3", "-1.5", "2/3" and the like.
double parse_rational(std::string_view text);

// Whitespace-separated rationals, one matrix row per line; '#' starts a comment.
std::vector<std::vector<double>> parse_matrix_text(std::string_view text);

}  // namespace zdg::cli
