#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "hoagent/properties.hpp"
#include "problem_file.hpp"

namespace hoagent::cli {

enum class Format { text, json };

/// What an agent returned on one context.
struct EvalResult {
  std::string agent;
  Context context;
  std::optional<OutcomeSubset> outcomes;
  std::optional<MoveSubset> moves;
};

/// A property verdict together with what the agent did at the witness.
struct CheckResult {
  std::string agent;
  std::optional<std::string> against;
  Signature signature;
  PropertyReport report;
};

Json to_json(const EvalResult& r);
Json to_json(const CheckResult& r);
Json to_json(const Witness& w);

void print(std::ostream& out, const EvalResult& r, Format format);
void print(std::ostream& out, const CheckResult& r, Format format);

/// "[a, b]" with every element of the ground in ground order.
std::string ground_to_string(const MoveDomain& moves);
std::string ground_to_string(const OutcomeDomain& outcomes);

}  // namespace hoagent::cli
