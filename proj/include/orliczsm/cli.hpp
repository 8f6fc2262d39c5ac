#ifndef ORLICZSM_CLI_HPP
#define ORLICZSM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orliczsm::cli {

/// Exit codes: 0 success, 1 a Report with passed = false, 2 usage or input error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with args[0] the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orliczsm::cli

#endif  // ORLICZSM_CLI_HPP
