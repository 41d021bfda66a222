#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jseq::cli {

/// Exit codes: 0 success, 2 usage or domain error, 3 internal invariant
/// violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jseq::cli
