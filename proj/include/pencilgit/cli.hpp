#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pencilgit {

/// Command-line entry point; returns the process exit code
/// (0 success, 1 failed checks, 2 usage or syntax errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pencilgit
