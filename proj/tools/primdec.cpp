// Command line front-end: `primdec run FILE [--json] [--bound N]` and
// `primdec validate FILE EXPECTED.json`.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "primdec/script.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned seed_from_env() {
  const char* s = std::getenv("PRIMDEC_SEED");
  if (!s || !*s) return 0;
  return static_cast<unsigned>(std::stoul(s));
}

int report(const primdec::RunOutcome& out) {
  std::cout << out.output;
  if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primary decomposition over Q[x1,...,xn]"};
  app.require_subcommand(1);

  std::string file, expected;
  bool json = false;
  int bound = 50;

  auto* run = app.add_subcommand("run", "Execute a script");
  run->add_option("FILE", file, "Script file")->required()->check(CLI::ExistingFile);
  run->add_flag("--json", json, "Emit JSON instead of text");
  run->add_option("--bound", bound, "Iteration bound for primary components")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Validate expected decompositions for a script");
  validate->add_option("FILE", file, "Script file")->required()->check(CLI::ExistingFile);
  validate->add_option("EXPECTED", expected, "Expected JSON output")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    primdec::RunOptions options;
    options.seed = seed_from_env();
    options.component_bound = bound;
    options.base_dir = std::filesystem::path(file).parent_path().string();
    if (options.base_dir.empty()) options.base_dir = ".";
    std::string source = read_file(file);

    if (*run) {
      options.mode = json ? primdec::OutputMode::Json : primdec::OutputMode::Text;
      return report(primdec::run_source(source, options));
    }
    primdec::Script script;
    try {
      script = primdec::parse_script(source);
    } catch (const primdec::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return report(primdec::validate_script(script, read_file(expected), options));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
