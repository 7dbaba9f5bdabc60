#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hoagent/orders.hpp"
#include "hoagent/reflexive.hpp"

namespace hoagent::cli {

using Json = nlohmann::ordered_json;

/// A multi-player setting reduced to one focal player's decision.
struct ProfileSpec {
  ProfileRule rule;
  std::size_t player = 0;
  std::vector<Move> others;
};

/// A decision problem: grounds, one context, and optional order/profile.
struct ProblemFile {
  MoveDomainPtr moves;
  OutcomeDomainPtr outcomes;
  Context context;
  std::optional<PartialOrder> order;
  std::optional<ProfileSpec> profile;

  Signature signature() const { return {moves, outcomes}; }
};

/// Reads a JSON problem file. Throws Error(ParseError) for malformed input
/// (with line or field) and Error(ValidationError) when a constructor
/// rejects the content.
ProblemFile parse_problem(const std::filesystem::path& path);
ProblemFile parse_problem_json(const Json& doc);

/// Parses JSON text, mapping syntax errors to ParseError "<source>:<line>: ...".
Json read_json(const std::string& text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);

/// Outcome literal: integers and "n/d" strings are scalars, other strings
/// symbols, arrays rational vectors.
OutcomeValue parse_outcome(const Json& value, std::string_view field);
Json outcome_to_json(const OutcomeValue& value);

std::vector<std::pair<OutcomeValue, OutcomeValue>> parse_order_pairs(const Json& pairs, std::string_view field);

/// A non-negative JSON integer.
inline bool is_index(const Json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; }

/// The context in problem-file syntax: {"moves", "outcomes", "context"}.
Json context_to_json(const Context& p);

/// Runs f, turning library errors other than BudgetExceeded into
/// ValidationError.
template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::ValidationError || e.code() == Errc::BudgetExceeded) {
      throw;
    }
    throw Error(Errc::ValidationError, e.what());
  }
}

}  // namespace hoagent::cli
