#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfpoly::cli {

/// Exit codes: 0 all requested checks pass, 1 a verification failed, 2 usage
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfpoly::cli
