#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cst::cli {

/// Runs one `cstool` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on type/parse/graph errors, 2 on IO or usage
/// errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cst::cli
