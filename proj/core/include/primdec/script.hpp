#ifndef PRIMDEC_SCRIPT_HPP
#define PRIMDEC_SCRIPT_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primdec/error.hpp"
#include "primdec/free_module.hpp"

namespace primdec {

/// Syntax or binding error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a polynomial with explicit operators, e.g. "x^2*y - 3/4*z + 1".
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

struct RingStatement {
  std::string name;
  RingPtr ring;
};

struct BindStatement {
  std::string name;
  bool is_module;
  Submodule value;
};

struct CommandStatement {
  std::string command;  // primdec, hull, minass, localize, validate
  std::vector<std::string> args;
  int line;
  int column;
};

using Statement = std::variant<RingStatement, BindStatement, CommandStatement>;

struct Script {
  std::vector<Statement> statements;
};

/// Grammar:
///   ring NAME = 0, (v1,...,vk), ORDER;      ORDER in dp | lp | wp(w1,..,wk) | Wp(w1,..,wk)
///   ideal NAME = p1, ..., pk;
///   module NAME = [p11,...,p1s], ...;
///   primdec NAME;  hull NAME;  minass NAME;  localize NAME, IDEAL;  validate NAME, FILE;
/// `//` starts a comment running to the end of the line. A new ring clears
/// all earlier bindings.
Script parse_script(std::string_view source);

enum class OutputMode { Text, Json };

struct RunOptions {
  OutputMode mode = OutputMode::Text;
  int component_bound = 50;
  unsigned seed = 0;
  /// Directory used to resolve relative paths in `validate` commands.
  std::string base_dir = ".";
};

struct RunOutcome {
  int exit_code;  // 0 ok, 1 parse error, 2 computational failure, 3 validation failure
  std::string output;
  std::string error;
};

RunOutcome run_script(const Script& script, const RunOptions& options);
/// parse_script + run_script, mapping ParseError to exit code 1.
RunOutcome run_source(std::string_view source, const RunOptions& options);

/// Runs the script but, for each `primdec` command, validates the matching
/// decomposition from an expected JSON document (CLI schema) instead of
/// computing one. Other commands are skipped. Exit code 3 if a check fails.
RunOutcome validate_script(const Script& script, const std::string& expected_json, const RunOptions& options);

/// Compares a run's JSON output with an expected JSON document: commands and
/// inputs must agree, primes must agree as sets, non-embedded components and
/// hull/minass results must agree exactly, and every validation must pass.
/// Returns an empty string on agreement, else a description of the first mismatch.
std::string compare_outputs(const std::string& actual_json, const std::string& expected_json);

}  // namespace primdec

#endif  // PRIMDEC_SCRIPT_HPP
