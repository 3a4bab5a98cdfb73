// Command-line front end. Parsing and dispatch live in the library so they
// can be tested without spawning processes.

#ifndef BBGROUPS_CLI_HPP_
#define BBGROUPS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace bbgroups::cli {

  //! Bad command line: unknown verb or flag, missing input, bad value.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  //! `--help` was given; the message is the help text.
  class HelpRequest : public Error {
   public:
    using Error::Error;
  };

  struct Command {
    std::string              verb;
    std::vector<std::string> inputs;

    // Global options.
    std::uint64_t seed    = 1;
    std::size_t   max_len = 4;
    long          max_exp = 2;
    std::size_t   budget  = 10'000;
    bool          json    = false;

    // Verb-specific options.
    std::string                kind;
    std::optional<std::string> basepoint;
    std::vector<std::string>   cycles;
    bool                       loop_basis = false;
    bool                       reduced    = false;
    std::optional<std::string> word;
    std::size_t                random = 0;
    std::size_t                length = 8;
  };

  inline constexpr int exit_ok     = 0;
  inline constexpr int exit_domain = 1;
  inline constexpr int exit_usage  = 2;

  //! `args` excludes the program name. Throws UsageError naming the
  //! offending token, or HelpRequest.
  Command parse_args(std::vector<std::string> const& args);

  //! Runs a validated command. Output goes to `out` only on success; errors
  //! go to `err`. Returns the exit status.
  int execute(Command const& cmd, std::ostream& out, std::ostream& err);

  //! parse_args then execute, mapping usage errors to exit status 2.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace bbgroups::cli

#endif  // BBGROUPS_CLI_HPP_
