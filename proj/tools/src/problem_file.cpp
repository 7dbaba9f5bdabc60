#include "problem_file.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace hoagent::cli {

namespace {

[[noreturn]] void field_error(std::string_view field, const std::string& what) {
  throw Error(Errc::ParseError, "field '" + std::string(field) + "': " + what);
}

const std::regex& rational_pattern() {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  return pattern;
}

Rational parse_rational_literal(const Json& value, std::string_view field) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (std::regex_match(text, rational_pattern())) {
      try {
        return Rational::parse(text);
      } catch (const std::exception& e) {
        field_error(field, e.what());
      }
    }
  }
  field_error(field, "expected an integer or \"n/d\" string, got " + value.dump());
}

std::vector<std::string> string_list(const Json& value, std::string_view field) {
  if (!value.is_array()) field_error(field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) field_error(field, "expected an array of strings, got " + v.dump());
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string join(const std::vector<Move>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

ProfileSpec parse_profile(const Json& doc, std::optional<OutcomeDomainPtr> declared_outcomes) {
  if (!doc.is_object()) field_error("profile", "expected an object");
  for (const char* key : {"players", "rule", "player", "others"}) {
    if (!doc.contains(key)) field_error(std::string("profile.") + key, "missing");
  }
  std::vector<MoveDomainPtr> players;
  for (const auto& p : doc["players"]) {
    players.push_back(validated([&] { return make_move_domain(string_list(p, "profile.players")); }));
  }
  if (!is_index(doc["player"])) field_error("profile.player", "expected a player index");
  const auto player = doc["player"].get<std::size_t>();
  const auto others = string_list(doc["others"], "profile.others");

  const auto& rule_doc = doc["rule"];
  auto rule = [&]() -> ProfileRule {
    if (rule_doc == "majority") {
      if (players.size() != 3) field_error("profile.players", "majority needs three voters");
      std::vector<OutcomeValue> candidates;
      for (const auto& m : *players[0]) candidates.push_back(parse_outcome(Json(m), "profile.players"));
      return validated([&] {
        auto rule = ProfileRule::majority_vote(make_outcome_domain(std::move(candidates)));
        for (const auto& p : players) {
          if (!(*p == *rule.moves(0))) throw Error(Errc::ValidationError, "voters must share the candidate list");
        }
        return rule;
      });
    }
    if (rule_doc == "product") return validated([&] { return ProfileRule::product(players); });
    if (!rule_doc.is_object()) field_error("profile.rule", "expected \"majority\", \"product\" or a profile table");
    if (!declared_outcomes) field_error("outcomes", "a tabulated rule needs declared outcomes");
    const auto outcomes = *declared_outcomes;
    return validated([&] {
      return ProfileRule::from_function(players, outcomes, [&](std::span<const Move> profile) {
        const auto key = join({profile.begin(), profile.end()});
        if (!rule_doc.contains(key)) throw Error(Errc::ValidationError, "profile rule has no entry for " + key);
        return parse_outcome(rule_doc[key], "profile.rule");
      });
    });
  }();
  return ProfileSpec{std::move(rule), player, others};
}

}  // namespace

Json read_json(const std::string& text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    throw Error(Errc::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_json(buffer.str(), path.string());
}

OutcomeValue parse_outcome(const Json& value, std::string_view field) {
  if (value.is_number_integer()) return OutcomeValue(Rational(value.get<std::int64_t>()));
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (std::regex_match(text, rational_pattern())) return OutcomeValue(parse_rational_literal(value, field));
    if (text.empty()) field_error(field, "empty outcome name");
    return OutcomeValue::symbol(text);
  }
  if (value.is_array()) {
    RationalVector v;
    for (const auto& c : value) v.push_back(parse_rational_literal(c, field));
    if (v.empty()) field_error(field, "empty vector outcome");
    return OutcomeValue(std::move(v));
  }
  field_error(field, "expected an outcome, got " + value.dump());
}

Json outcome_to_json(const OutcomeValue& value) {
  switch (value.kind()) {
    case OutcomeKind::symbol: return value.as_symbol().name;
    case OutcomeKind::scalar: {
      const auto& r = value.as_scalar();
      if (r.is_integer()) return r.numerator();
      return r.to_string();
    }
    case OutcomeKind::vector: {
      Json arr = Json::array();
      for (const auto& c : value.as_vector()) {
        if (c.is_integer()) {
          arr.push_back(c.numerator());
        } else {
          arr.push_back(c.to_string());
        }
      }
      return arr;
    }
  }
  return nullptr;
}

std::vector<std::pair<OutcomeValue, OutcomeValue>> parse_order_pairs(const Json& pairs, std::string_view field) {
  if (!pairs.is_array()) field_error(field, "expected an array of [better, worse] pairs");
  std::vector<std::pair<OutcomeValue, OutcomeValue>> out;
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) field_error(field, "expected a [better, worse] pair, got " + pair.dump());
    out.emplace_back(parse_outcome(pair[0], field), parse_outcome(pair[1], field));
  }
  return out;
}

Json context_to_json(const Context& p) {
  Json doc;
  doc["moves"] = p.moves()->elements();
  Json outcomes = Json::array();
  for (const auto& r : *p.outcomes()) outcomes.push_back(outcome_to_json(r));
  doc["outcomes"] = std::move(outcomes);
  Json ctx = Json::object();
  for (std::size_t x = 0; x < p.size(); ++x) ctx[(*p.moves())[x]] = outcome_to_json(p(x));
  doc["context"] = std::move(ctx);
  return doc;
}

ProblemFile parse_problem_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "problem file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "moves" && key != "outcomes" && key != "context" && key != "order" && key != "profile") {
      field_error(key, "unknown field");
    }
  }
  const bool has_context = doc.contains("context");
  const bool has_profile = doc.contains("profile");
  if (has_context == has_profile) {
    throw Error(Errc::ValidationError, "exactly one of 'context' and 'profile' must be present");
  }

  std::optional<OutcomeDomainPtr> outcomes;
  if (doc.contains("outcomes")) {
    if (!doc["outcomes"].is_array()) field_error("outcomes", "expected an array");
    std::vector<OutcomeValue> values;
    for (const auto& v : doc["outcomes"]) values.push_back(parse_outcome(v, "outcomes"));
    outcomes = validated([&] { return make_outcome_domain(std::move(values)); });
  }
  std::optional<MoveDomainPtr> moves;
  if (doc.contains("moves")) {
    moves = validated([&] { return make_move_domain(string_list(doc["moves"], "moves")); });
  }

  std::optional<ProfileSpec> profile;
  std::optional<Context> context;
  if (has_profile) {
    profile = parse_profile(doc["profile"], outcomes);
    const auto& spec = *profile;
    context = validated([&] { return induce_context(spec.rule, spec.player, spec.others); });
    if (moves && !(**moves == *context->moves())) {
      throw Error(Errc::ValidationError, "'moves' differs from the focal player's moves");
    }
    if (outcomes && !(**outcomes == *context->outcomes())) {
      throw Error(Errc::ValidationError, "'outcomes' differs from the profile rule's outcomes");
    }
  } else {
    if (!moves) field_error("moves", "missing");
    if (!outcomes) field_error("outcomes", "missing");
    const auto& ctx = doc["context"];
    if (!ctx.is_object()) field_error("context", "expected an object mapping moves to outcomes");
    std::vector<std::pair<Move, OutcomeValue>> pairs;
    for (const auto& [move, value] : ctx.items()) pairs.emplace_back(move, parse_outcome(value, "context." + move));
    context = validated([&] { return make_context(*moves, *outcomes, pairs); });
  }

  std::optional<PartialOrder> order;
  if (doc.contains("order")) {
    const auto pairs = parse_order_pairs(doc["order"], "order");
    order = validated([&] { return PartialOrder::from_pairs(context->outcomes(), pairs); });
  }
  return ProblemFile{context->moves(), context->outcomes(), *context, std::move(order), std::move(profile)};
}

ProblemFile parse_problem(const std::filesystem::path& path) { return parse_problem_json(read_json_file(path)); }

}  // namespace hoagent::cli
