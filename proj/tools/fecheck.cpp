#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fecheck/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for functional equations over Q(t)"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  fecheck::RunConfig config;
  std::string input;
  std::string format = "text";
  unsigned degree = 0;

  const std::map<std::string, std::string> commands{
      {"verify", "Check a .feq scenario file"},
      {"polarize", "Recover the multi-additive form behind a trace expression"},
      {"degree", "Generalized-monomial degree of a function expression"},
      {"rank", "Grid rank of a kernel: a map (x,y -> a(xy)), an arity-2 form or rank(K, [xs], [ys])"},
      {"hod", "Order of an additive map as a higher-order derivation"},
      {"suite", "Run the built-in verification suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "verify") {
      sub->add_option("path", input, "Scenario file")->required();
    } else if (name != "suite") {
      sub->add_option("expr", input, "Expression")->required();
    }
    if (name == "polarize") sub->add_option("--degree", degree, "Declared degree (searched when omitted)");
  }
  app.add_option("--seed", config.seed, "Seed for pseudo-random samples")->capture_default_str();
  app.add_option("--samples", config.samples, "Number of pseudo-random samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--report", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--max-degree", config.max_degree, "Largest degree searched")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fecheck::exit_usage;
  }

  config.command = fecheck::parse_command(app.get_subcommands().front()->get_name());
  if (!input.empty()) config.input = input;
  if (degree != 0) config.degree = degree;
  config.report_format = format == "json" ? fecheck::ReportFormat::json : fecheck::ReportFormat::text;
  return fecheck::run(config, std::cout, std::cerr);
}
