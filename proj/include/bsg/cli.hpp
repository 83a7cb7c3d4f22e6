// The command-line front end, as a library call so tests can drive it
// without spawning processes.

#ifndef BSG_CLI_HPP_
#define BSG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bsg::cli {

  enum ExitCode : int {
    kOk           = 0,  // holds, found, or done
    kFails        = 1,  // counterexample, or no derivation within bounds
    kUsage        = 2,
    kInvalidInput = 3,
    kBudget       = 4
  };

  //! Runs one verb. args excludes the program name. The first line written
  //! to out is machine-readable (HOLDS, FAILS ..., KIND=..., ...).
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bsg::cli

#endif  // BSG_CLI_HPP_
