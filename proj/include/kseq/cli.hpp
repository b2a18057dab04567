#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kseq::cli {

// Runs one command; `args` excludes the program name. Returns the process
// exit status: 0 success, 1 a check failed, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kseq::cli
