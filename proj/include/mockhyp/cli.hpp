#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mockhyp {

/// Runs one command line (without the program name). Returns 0 when every
/// check passes, 1 when some check fails, 2 on input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mockhyp
