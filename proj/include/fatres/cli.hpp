#ifndef FATRES_CLI_HPP
#define FATRES_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace fatres {

struct CliOptions {
  std::string verb;  // resolve | oracle | criterion | verify | formula
  std::string input_path;
  std::optional<std::string> field;  // overrides the scheme file's field
  bool verify = false;
  std::optional<int> bound;
  bool json = false;
  bool minimize = false;
};

// exit codes: 0 ok, 1 broken mathematical invariant, 2 input validation
int run_command(const CliOptions& opts, std::ostream& out, std::ostream& err);

int cmd_resolve(const CliOptions& opts, std::ostream& out);
int cmd_oracle(const CliOptions& opts, std::ostream& out);
int cmd_criterion(const CliOptions& opts, std::ostream& out);
int cmd_verify(const CliOptions& opts, std::ostream& out);
int cmd_formula(const CliOptions& opts, std::ostream& out);

}  // namespace fatres

#endif
