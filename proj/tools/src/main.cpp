#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "demos.hpp"

int main(int argc, char** argv) {
  using namespace hoagent::cli;

  CLI::App app{"Decision agents as quantifiers and selection functions over finite domains"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

  std::string problem, agent;
  Format eval_format = Format::text;
  auto* eval = app.add_subcommand("eval", "Evaluate an agent on a problem's context");
  eval->add_option("--problem", problem, "Problem file (JSON)")->required();
  eval->add_option("--agent", agent, "Agent file (JSON)")->required();
  eval->add_option("--format", eval_format, "Report format")->transform(CLI::CheckedTransformer(formats));

  CheckOptions check_options;
  std::string signature, check_problem, against;
  auto* check = app.add_subcommand("check", "Check a property over every context of a signature");
  check->add_option("--agent", check_options.agent, "Agent file (JSON)")->required();
  auto* sig_opt = check->add_option("--signature", signature, "Numbered grounds, X=<n>,R=<m>");
  auto* problem_opt = check->add_option("--problem", check_problem, "Take the grounds from a problem file");
  sig_opt->excludes(problem_opt);
  check->add_option("--property", check_options.property, "Property to check")
      ->required()
      ->check(CLI::IsMember(property_names()));
  check->add_option("--against", against, "Quantifier agent file, for --property attains");
  check->add_option("--budget", check_options.budget, "Maximum number of contexts to enumerate");
  check->add_option("--format", check_options.format, "Report format")->transform(CLI::CheckedTransformer(formats));

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Replay a worked example");
  demo->add_option("name", demo_name, "One of: beaches, wines, honest, judges, coordination, fixpoint")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (eval->parsed()) return cmd_eval(problem, agent, eval_format, std::cout, std::cerr);
  if (check->parsed()) {
    if (!signature.empty()) check_options.signature = signature;
    if (!check_problem.empty()) check_options.problem = check_problem;
    if (!against.empty()) check_options.against = against;
    return cmd_check(check_options, std::cout, std::cerr);
  }
  return cmd_demo(demo_name, std::cout, std::cerr);
}
