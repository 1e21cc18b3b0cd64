#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idlat::cli {

/* Exit codes: 0 ideal / success, 1 not ideal / check failed, 2 usage or
 * parse error. args excludes the program name. */
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

} // namespace idlat::cli
