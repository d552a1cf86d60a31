#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sylowlens {

// Exit codes: 0 every applicable verdict holds, 1 some verdict failed,
// 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylowlens
