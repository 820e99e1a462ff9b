#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cquiver::cli {

/// Runs one command line (without the program name).  Results go to `out`,
/// diagnostics to `err`.  Returns 0 on success, 1 on a failed verification,
/// a nonrigid check or a fiber anomaly, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cquiver::cli
