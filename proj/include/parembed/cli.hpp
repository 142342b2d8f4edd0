#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parembed {

// Command-line entry point; `args` excludes the program name. Returns 0 when
// the command was evaluated (whatever the verdict), 2 on input or parse
// errors and 3 on inconsistent descriptors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parembed
