#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biharm {

/// Runs one command. args excludes the program name. Exit codes:
/// 0 verified / success, 1 refuted, 2 error or budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in golden and property suite; prints one line per check and
/// returns the number of failures.
int run_selftest(std::ostream& out);

} // namespace biharm
