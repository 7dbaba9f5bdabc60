#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hoagent/quantifier.hpp"
#include "problem_file.hpp"

namespace hoagent::cli {

/// {"kind": ..., "params": {...}}. Kind and parameter shapes are checked on
/// parse; parameters that refer to moves or outcomes are resolved when the
/// agent is built against a signature.
struct AgentFile {
  std::string kind;
  Json params = Json::object();
};

AgentFile parse_agent(const std::filesystem::path& path);
AgentFile parse_agent_json(const Json& doc);

/// Every accepted kind, in documentation order.
const std::vector<std::string>& agent_kinds();

/// An agent ready to evaluate: a quantifier, a selection function, or both.
struct BuiltAgent {
  std::string kind;
  std::optional<Quantifier> quantifier;
  std::optional<SelectionFunction> selection;
};

/// Builds `agent` for contexts over `sig`. `problem` supplies a fallback
/// order and the profile rule for coordinating agents; it may be null.
BuiltAgent build_agent(const AgentFile& agent, const Signature& sig, const ProblemFile* problem);

}  // namespace hoagent::cli
