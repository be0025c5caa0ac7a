// rspin: command-line front end for the r-Spin cohomology library.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "rspin/report.hpp"

namespace {

using rspin::Int;
using rspin::report::json;

rspin::Int parse_int(const std::string& text, const std::string& flag) {
  static const std::regex pattern("[+-]?[0-9]+");
  if (!std::regex_match(text, pattern))
    throw rspin::InvalidInput(flag + " expects an integer, got '" + text + "'");
  return Int(text[0] == '+' ? text.substr(1) : text);
}

struct Options {
  std::string r;
  std::string g;
  std::optional<int> eps;
  std::optional<int> arf;
  std::string beta = "1";
  std::string r_min;
  std::string r_max;
  std::string expression;
  bool force = false;
  bool json_output = false;
};

void add_moduli_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--r", o.r, "root order r >= 2")->required();
  cmd->add_option("--g", o.g, "genus g >= 2")->required();
  cmd->add_option("--eps", o.eps, "Arf invariant (0 or 1), required iff r is even")
      ->check(CLI::IsMember({0, 1}));
  cmd->add_flag("--force", o.force, "evaluate below the stable range (output is UNVERIFIED)");
  cmd->add_flag("--json", o.json_output, "emit JSON instead of text");
}

rspin::report::Query query_of(const Options& o) {
  return {parse_int(o.r, "--r"), parse_int(o.g, "--g"), o.eps, o.force};
}

bool use_color(bool json_output) {
  if (json_output || std::getenv("RSPIN_NO_COLOR") != nullptr) return false;
  return ::isatty(STDOUT_FILENO) != 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second integral cohomology and Picard groups of r-Spin moduli spaces"};
  app.require_subcommand(1);
  Options o;

  auto* report = app.add_subcommand("report", "groups, divisibilities and presentation");
  add_moduli_flags(report, o);

  auto* eval = app.add_subcommand("eval", "coordinates and order of a class");
  add_moduli_flags(eval, o);
  eval->add_option("expression", o.expression, "class, e.g. \"3*lambda(1/3) + lambda\"")
      ->required();

  auto* theta = app.add_subcommand("theta", "cohomology of the theta-characteristic space");
  add_moduli_flags(theta, o);

  auto* twist = app.add_subcommand("twist", "shift of a class under twisting by a divisor");
  add_moduli_flags(twist, o);
  twist->add_option("--arf", o.arf, "Arf invariant of the twisted structure (defaults to --eps)")
      ->check(CLI::IsMember({0, 1}));
  twist->add_option("--beta", o.beta, "coefficient of beta(D)")->capture_default_str();
  twist->add_option("expression", o.expression, "class to twist")->required();

  auto* table = app.add_subcommand("table", "per-r constants over a range of r");
  table->add_option("--r-min", o.r_min, "first r")->required();
  table->add_option("--r-max", o.r_max, "last r")->required();
  table->add_flag("--json", o.json_output, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(rspin::ExitCode::usage);
  }

  try {
    json out;
    if (report->parsed()) {
      out = rspin::report::build_report(query_of(o));
    } else if (eval->parsed()) {
      out = rspin::report::build_eval(query_of(o), o.expression);
    } else if (theta->parsed()) {
      out = rspin::report::build_theta(query_of(o));
    } else if (twist->parsed()) {
      out = rspin::report::build_twist(query_of(o), o.arf, parse_int(o.beta, "--beta"),
                                       o.expression);
    } else {
      out = rspin::report::build_table(parse_int(o.r_min, "--r-min"),
                                       parse_int(o.r_max, "--r-max"));
    }
    if (o.json_output) {
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << rspin::report::render_text(out, use_color(o.json_output));
    }
    const auto code = rspin::report::exit_code_of(out);
    if (code != rspin::ExitCode::ok) std::cerr << "rspin: internal consistency check failed\n";
    return static_cast<int>(code);
  } catch (const rspin::Error& e) {
    std::cerr << "rspin: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "rspin: unexpected failure: " << e.what() << '\n';
    return static_cast<int>(rspin::ExitCode::consistency);
  }
}
