#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confalg {

/// Command-line front end; args excludes the program name. Returns the
/// process exit code: 0 all selected checks pass, 1 any fail or error,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confalg
