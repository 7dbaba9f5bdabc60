#include "agent_file.hpp"

#include <algorithm>
#include <set>

#include "hoagent/agents.hpp"
#include "hoagent/orders.hpp"
#include "hoagent/properties.hpp"
#include "hoagent/reflexive.hpp"

namespace hoagent::cli {

namespace {

[[noreturn]] void param_error(const std::string& kind, std::string_view field, const std::string& what) {
  throw Error(Errc::ParseError, "agent '" + kind + "', field 'params." + std::string(field) + "': " + what);
}

// Parameters each kind accepts; the first `required` of them are mandatory.
struct ParamShape {
  std::vector<std::string> names;
  std::size_t required = 0;
};

const std::vector<std::pair<std::string, ParamShape>>& shapes() {
  static const std::vector<std::pair<std::string, ParamShape>> table{
      {"max", {}},
      {"argmax", {}},
      {"order-max", {{"order"}, 0}},
      {"order-selection", {{"order"}, 0}},
      {"averaging", {}},
      {"weighted-averaging", {}},
      {"ideal-move", {{"ideal_move", "radius"}, 2}},
      {"second-best", {}},
      {"honest", {{"permissible"}, 1}},
      {"dishonest", {{"illicit", "threshold"}, 2}},
      {"safe", {}},
      {"fix", {}},
      {"keynesian", {}},
      {"voting-judge", {{"order"}, 0}},
      {"coordinating", {{"player", "players"}, 1}},
      {"table", {{"returns", "entries"}, 2}},
  };
  return table;
}

std::vector<Move> move_list(const AgentFile& agent, std::string_view field) {
  const auto& v = agent.params[std::string(field)];
  if (!v.is_array()) param_error(agent.kind, field, "expected an array of move names");
  std::vector<Move> out;
  for (const auto& m : v) {
    if (!m.is_string()) param_error(agent.kind, field, "expected an array of move names");
    out.push_back(m.get<std::string>());
  }
  return out;
}

Rational rational_param(const AgentFile& agent, std::string_view field) {
  const auto value = parse_outcome(agent.params[std::string(field)], "params." + std::string(field));
  if (!value.is_scalar()) param_error(agent.kind, field, "expected a rational");
  return value.as_scalar();
}

PartialOrder resolve_order(const AgentFile& agent, const Signature& sig, const ProblemFile* problem) {
  if (agent.params.contains("order")) {
    const auto pairs = parse_order_pairs(agent.params["order"], "params.order");
    return validated([&] { return PartialOrder::from_pairs(sig.outcomes, pairs); });
  }
  if (problem && problem->order && same_domain(problem->order->ground(), sig.outcomes)) return *problem->order;
  if (outcome_kind(*sig.outcomes) == OutcomeKind::scalar) return PartialOrder::numeric(sig.outcomes);
  throw Error(Errc::ValidationError, "agent '" + agent.kind + "' needs an order (params.order or the problem's order)");
}

ProfileRule resolve_coordination_rule(const AgentFile& agent, const ProblemFile* problem) {
  if (agent.params.contains("players")) {
    const auto& players = agent.params["players"];
    if (!players.is_array()) param_error(agent.kind, "players", "expected a list of move lists");
    std::vector<MoveDomainPtr> domains;
    for (const auto& p : players) {
      std::vector<Move> moves;
      if (!p.is_array()) param_error(agent.kind, "players", "expected a list of move lists");
      for (const auto& m : p) {
        if (!m.is_string()) param_error(agent.kind, "players", "expected move names");
        moves.push_back(m.get<std::string>());
      }
      domains.push_back(validated([&] { return make_move_domain(std::move(moves)); }));
    }
    return validated([&] { return ProfileRule::product(std::move(domains)); });
  }
  if (problem && problem->profile) return problem->profile->rule;
  throw Error(Errc::ValidationError, "coordinating agent needs params.players or a problem with a profile");
}

template <class Element>
ContextFunctional<Element> build_table(const AgentFile& agent, const Signature& sig) {
  const auto& entries = agent.params["entries"];
  if (!entries.is_array()) param_error(agent.kind, "entries", "expected an array of {context, value}");
  const auto count = context_count(sig);
  if (count > EnumerationBudget{}.max_contexts) {
    throw Error(Errc::BudgetExceeded, "table over " + std::to_string(count) + " contexts");
  }
  std::vector<std::optional<Subset<Element>>> slots(static_cast<std::size_t>(count));
  for (const auto& entry : entries) {
    if (!entry.is_object() || !entry.contains("context") || !entry.contains("value")) {
      param_error(agent.kind, "entries", "each entry needs 'context' and 'value'");
    }
    std::vector<std::pair<Move, OutcomeValue>> pairs;
    for (const auto& [move, value] : entry["context"].items()) {
      pairs.emplace_back(move, parse_outcome(value, "params.entries.context"));
    }
    const auto p = validated([&] { return make_context(sig.moves, sig.outcomes, pairs); });
    if (!entry["value"].is_array()) param_error(agent.kind, "entries.value", "expected an array");
    auto subset = validated([&] {
      if constexpr (std::is_same_v<Element, Move>) {
        std::vector<Move> members;
        for (const auto& m : entry["value"]) members.push_back(m.is_string() ? m.get<std::string>() : m.dump());
        return MoveSubset::from_members(sig.moves, members);
      } else {
        std::vector<OutcomeValue> members;
        for (const auto& r : entry["value"]) members.push_back(parse_outcome(r, "params.entries.value"));
        return OutcomeSubset::from_members(sig.outcomes, members);
      }
    });
    auto& slot = slots[static_cast<std::size_t>(context_rank(p))];
    if (slot) throw Error(Errc::ValidationError, "table lists " + p.to_string() + " twice");
    slot = std::move(subset);
  }
  std::vector<Subset<Element>> table;
  table.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) throw Error(Errc::ValidationError, "table has no entry for " + context_unrank(sig, k).to_string());
    table.push_back(std::move(*slots[k]));
  }
  return ContextFunctional<Element>::table("table", sig, std::move(table));
}

}  // namespace

const std::vector<std::string>& agent_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> out;
    for (const auto& [kind, _] : shapes()) out.push_back(kind);
    return out;
  }();
  return kinds;
}

AgentFile parse_agent_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "agent file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "kind" && key != "params") throw Error(Errc::ParseError, "field '" + key + "': unknown field");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw Error(Errc::ParseError, "field 'kind': missing");
  AgentFile agent{doc["kind"].get<std::string>(), doc.value("params", Json::object())};
  const auto it = std::find_if(shapes().begin(), shapes().end(), [&](const auto& s) { return s.first == agent.kind; });
  if (it == shapes().end()) throw Error(Errc::ParseError, "field 'kind': unknown agent kind '" + agent.kind + "'");
  if (!agent.params.is_object()) throw Error(Errc::ParseError, "field 'params': expected an object");
  const auto& shape = it->second;
  for (const auto& [key, _] : agent.params.items()) {
    if (std::find(shape.names.begin(), shape.names.end(), key) == shape.names.end()) {
      param_error(agent.kind, key, "not a parameter of this kind");
    }
  }
  for (std::size_t i = 0; i < shape.required; ++i) {
    if (!agent.params.contains(shape.names[i])) param_error(agent.kind, shape.names[i], "missing");
  }

  // parameters checkable without a signature
  if (agent.kind == "ideal-move") {
    if (!agent.params["ideal_move"].is_string()) param_error(agent.kind, "ideal_move", "expected a move name");
    const auto radius = rational_param(agent, "radius");
    if (radius < Rational(0)) throw Error(Errc::ValidationError, "NegativeRadius: " + radius.to_string());
  } else if (agent.kind == "honest") {
    if (move_list(agent, "permissible").empty()) {
      throw Error(Errc::ValidationError, "EmptyPermissibleSet: honest agent has no permissible move");
    }
  } else if (agent.kind == "dishonest") {
    move_list(agent, "illicit");
    rational_param(agent, "threshold");
  } else if (agent.kind == "coordinating") {
    if (!is_index(agent.params["player"])) param_error(agent.kind, "player", "expected 0 or 1");
  } else if (agent.kind == "table") {
    const auto& returns = agent.params["returns"];
    if (returns != "outcomes" && returns != "moves") param_error(agent.kind, "returns", "expected \"outcomes\" or \"moves\"");
  }
  return agent;
}

AgentFile parse_agent(const std::filesystem::path& path) { return parse_agent_json(read_json_file(path)); }

BuiltAgent build_agent(const AgentFile& agent, const Signature& sig, const ProblemFile* problem) {
  BuiltAgent built{agent.kind, std::nullopt, std::nullopt};
  const auto& k = agent.kind;
  validated([&] {
    if (k == "max") {
      built.quantifier = max_quantifier_numeric();
    } else if (k == "argmax") {
      built.selection = argmax_selection_numeric();
    } else if (k == "order-max") {
      built.quantifier = choice_quantifier(ChoiceFunction::maximal(resolve_order(agent, sig, problem)));
    } else if (k == "order-selection") {
      built.selection = order_selection(resolve_order(agent, sig, problem));
    } else if (k == "averaging") {
      built.quantifier = averaging_quantifier();
    } else if (k == "weighted-averaging") {
      built.quantifier = weighted_averaging_quantifier();
    } else if (k == "ideal-move") {
      const auto ideal = agent.params["ideal_move"].get<std::string>();
      built.quantifier = ideal_move_quantifier(ideal, rational_param(agent, "radius"));
      built.selection = ideal_move_selection(ideal);
    } else if (k == "second-best") {
      built.quantifier = second_best_quantifier();
    } else if (k == "honest") {
      built.quantifier = honest_quantifier(move_list(agent, "permissible"));
    } else if (k == "dishonest") {
      built.quantifier = dishonest_quantifier(move_list(agent, "illicit"), rational_param(agent, "threshold"));
    } else if (k == "safe") {
      built.quantifier = safe_quantifier();
    } else if (k == "fix") {
      built.quantifier = fix_quantifier();
      built.selection = fix_selection();
    } else if (k == "keynesian") {
      built.quantifier = keynesian_quantifier();
      built.selection = keynesian_selection();
    } else if (k == "voting-judge") {
      built.quantifier = voting_judge_quantifier(resolve_order(agent, sig, problem));
    } else if (k == "coordinating") {
      built.selection =
          coordinating_selection(resolve_coordination_rule(agent, problem), agent.params["player"].get<std::size_t>());
    } else if (k == "table") {
      if (agent.params["returns"] == "outcomes") {
        built.quantifier = build_table<OutcomeValue>(agent, sig);
      } else {
        built.selection = build_table<Move>(agent, sig);
      }
    }
    return 0;
  });
  return built;
}

}  // namespace hoagent::cli
