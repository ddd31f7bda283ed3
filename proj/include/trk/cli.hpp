#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trk::cli {

// Run the command line given by args (program name excluded), writing
// results to out and problems to err.  Exit codes: 0 success, 2 usage
// error (bad flags, malformed lambda, non-prime p, out-of-range sizes),
// 3 domain error from the library, 4 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace trk::cli
