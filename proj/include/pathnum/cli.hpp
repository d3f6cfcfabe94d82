#ifndef PATHNUM_CLI_HPP
#define PATHNUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pathnum {

/// Command-line front end. Exit codes: 0 success, 1 verification failure,
/// 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pathnum

#endif
