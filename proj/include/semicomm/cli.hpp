// Command-line front end. The executable is a thin wrapper around run_cli so
// that the whole command surface can be driven from tests.
//
// Exit codes: 0 success (and a true assertion), 1 false assertion or
// counterexample, 2 usage or input error, 3 budget exceeded.

#ifndef SEMICOMM_CLI_HPP_
#define SEMICOMM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace semicomm {

  constexpr int CLI_SCHEMA_VERSION = 1;

  enum ExitCode : int {
    EXIT_OK        = 0,
    EXIT_FALSE     = 1,
    EXIT_USAGE     = 2,
    EXIT_BUDGET    = 3,
  };

  //! \p args excludes the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

  //! "key: value" lines for a JSON document, nested keys joined by '.',
  //! arrays printed as compact JSON, null as "none". The human output of
  //! every subcommand is this rendering of its structured output.
  std::string render_human(std::string const& json_text);

}  // namespace semicomm

#endif  // SEMICOMM_CLI_HPP_
