#include "report.hpp"

namespace hoagent::cli {

namespace {

Json moves_json(const MoveSubset& s) {
  Json out = Json::array();
  for (const auto& m : s.members()) out.push_back(m);
  return out;
}

Json outcomes_json(const OutcomeSubset& s) {
  Json out = Json::array();
  for (const auto& r : s.members()) out.push_back(outcome_to_json(r));
  return out;
}

Json signature_json(const Signature& sig) {
  Json moves = Json::array();
  for (const auto& m : *sig.moves) moves.push_back(m);
  Json outcomes = Json::array();
  for (const auto& r : *sig.outcomes) outcomes.push_back(outcome_to_json(r));
  return Json{{"moves", moves}, {"outcomes", outcomes}};
}

void print_witness(std::ostream& out, const Witness& w) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ContextWitness>) {
          out << "witness: " << v.context.to_string() << '\n';
        } else if constexpr (std::is_same_v<T, ContextPairWitness>) {
          out << "witness: " << v.first.to_string() << '\n';
          out << "         " << v.second.to_string() << '\n';
        } else {
          out << "witness: " << v.context.to_string() << " at move " << display((*v.context.moves())[v.move])
              << '\n';
        }
      },
      w);
}

}  // namespace

std::string ground_to_string(const MoveDomain& moves) {
  std::string out = "[";
  for (std::size_t i = 0; i < moves.size(); ++i) out += (i ? ", " : "") + display(moves[i]);
  return out + "]";
}

std::string ground_to_string(const OutcomeDomain& outcomes) {
  std::string out = "[";
  for (std::size_t i = 0; i < outcomes.size(); ++i) out += (i ? ", " : "") + outcomes[i].to_string();
  return out + "]";
}

Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ContextWitness>) {
          return Json{{"context", context_to_json(v.context)}};
        } else if constexpr (std::is_same_v<T, ContextPairWitness>) {
          return Json{{"first", context_to_json(v.first)}, {"second", context_to_json(v.second)}};
        } else {
          return Json{{"context", context_to_json(v.context)}, {"move", (*v.context.moves())[v.move]}};
        }
      },
      w);
}

Json to_json(const EvalResult& r) {
  Json out{{"agent", r.agent}, {"problem", context_to_json(r.context)}};
  if (r.outcomes) out["outcomes"] = outcomes_json(*r.outcomes);
  if (r.moves) out["moves"] = moves_json(*r.moves);
  return out;
}

Json to_json(const CheckResult& r) {
  Json out{{"property", r.report.property}, {"agent", r.agent}};
  if (r.against) out["against"] = *r.against;
  out["signature"] = signature_json(r.signature);
  out["verdict"] = std::string(to_string(r.report.verdict));
  out["contexts_checked"] = r.report.contexts_checked;
  out["witness"] = r.report.witness ? to_json(*r.report.witness) : Json(nullptr);
  return out;
}

void print(std::ostream& out, const EvalResult& r, Format format) {
  if (format == Format::json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "agent: " << r.agent << '\n';
  out << "context: " << r.context.to_string() << '\n';
  if (r.outcomes) out << "outcomes: " << r.outcomes->to_string() << '\n';
  if (r.moves) out << "moves: " << r.moves->to_string() << '\n';
}

void print(std::ostream& out, const CheckResult& r, Format format) {
  if (format == Format::json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "property: " << r.report.property << '\n';
  out << "agent: " << r.agent << '\n';
  if (r.against) out << "against: " << *r.against << '\n';
  out << "moves: " << ground_to_string(*r.signature.moves) << '\n';
  out << "outcomes: " << ground_to_string(*r.signature.outcomes) << '\n';
  out << "verdict: " << to_string(r.report.verdict) << '\n';
  out << "contexts_checked: " << r.report.contexts_checked << '\n';
  if (r.report.witness) print_witness(out, *r.report.witness);
}

}  // namespace hoagent::cli
