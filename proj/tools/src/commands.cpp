#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <regex>

#include "agent_file.hpp"

namespace hoagent::cli {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

const Quantifier& need_quantifier(const BuiltAgent& agent, std::string_view role) {
  if (!agent.quantifier) {
    throw Error(Errc::ValidationError,
                std::string(role) + " '" + agent.kind + "' is a selection function; a quantifier is needed");
  }
  return *agent.quantifier;
}

const SelectionFunction& need_selection(const BuiltAgent& agent, std::string_view role) {
  if (!agent.selection) {
    throw Error(Errc::ValidationError,
                std::string(role) + " '" + agent.kind + "' is a quantifier; a selection function is needed");
  }
  return *agent.selection;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"total", "attainable", "strongly-attainable", "context-independent",
                                              "attains"};
  return names;
}

Signature parse_signature(const std::string& text) {
  static const std::regex pattern(R"(X=([0-9]+),R=([0-9]+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(Errc::ParseError, "signature '" + text + "': expected X=<n>,R=<m>");
  }
  const auto number = [&](const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw Error(Errc::ParseError, "signature '" + text + "': sizes must be positive integers");
    }
    return v;
  };
  return numbered_signature(number(m[1].str()), number(m[2].str()));
}

int cmd_eval(const std::filesystem::path& problem_path, const std::filesystem::path& agent_path, Format format,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto problem = parse_problem(problem_path);
    const auto built = build_agent(parse_agent(agent_path), problem.signature(), &problem);
    EvalResult result{built.kind, problem.context, std::nullopt, std::nullopt};
    validated([&] {
      if (built.quantifier) result.outcomes = (*built.quantifier)(problem.context);
      if (built.selection) result.moves = (*built.selection)(problem.context);
      return 0;
    });
    print(out, result, format);
    return kExitOk;
  });
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& names = property_names();
    if (std::find(names.begin(), names.end(), options.property) == names.end()) {
      throw Error(Errc::ParseError, "unknown property '" + options.property + "'");
    }
    if (options.signature.has_value() == options.problem.has_value()) {
      throw Error(Errc::ParseError, "give exactly one of --signature and --problem");
    }
    if ((options.property == "attains") != options.against.has_value()) {
      throw Error(Errc::ParseError, "--against is required by, and only allowed with, --property attains");
    }
    std::optional<ProblemFile> problem;
    if (options.problem) problem = parse_problem(*options.problem);
    const auto sig = problem ? problem->signature() : parse_signature(*options.signature);
    const ProblemFile* context_source = problem ? &*problem : nullptr;
    const auto agent = build_agent(parse_agent(options.agent), sig, context_source);
    const EnumerationBudget budget{options.budget};

    CheckResult result{agent.kind, std::nullopt, sig, {}};
    const auto& p = options.property;
    if (p == "attains") {
      const auto target = build_agent(parse_agent(*options.against), sig, context_source);
      result.against = target.kind;
      const auto& eps = need_selection(agent, "agent");
      const auto& phi = need_quantifier(target, "--against agent");
      result.report = validated([&] { return attains(eps, phi, sig, budget); });
    } else {
      const auto& phi = need_quantifier(agent, "agent");
      result.report = validated([&] {
        if (p == "total") return is_total(phi, sig, budget);
        if (p == "attainable") return is_attainable(phi, sig, budget);
        if (p == "strongly-attainable") return is_strongly_attainable(phi, sig, budget);
        return is_context_independent(phi, sig, budget);
      });
    }
    print(out, result, options.format);
    return result.report.holds() ? kExitOk : kExitFails;
  });
}

}  // namespace hoagent::cli
