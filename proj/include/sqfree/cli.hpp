#ifndef SQFREE_CLI_HPP
#define SQFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfree::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   // verify found a failing check or disagreement
  kInvalidInput = 2,  // usage, parse or precondition error
  kInternal = 3,      // a result contradicted the theory
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sqfree::cli

#endif  // SQFREE_CLI_HPP
