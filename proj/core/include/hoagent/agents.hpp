#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hoagent/quantifier.hpp"

namespace hoagent {

// Heuristic agents over scalar (and, for ideal-move, vector) outcomes.

/// Outcomes in Im(p) closest to the plain average of Im(p).
Quantifier averaging_quantifier();

/// Outcomes in Im(p) closest to the average of p over all moves, so each
/// outcome is weighted by its number of preimages.
Quantifier weighted_averaging_quantifier();

/// Satisficing agent: every ground outcome within `radius` (Euclidean) of
/// p(ideal). Throws NegativeRadius.
Quantifier ideal_move_quantifier(Move ideal, Rational radius);

/// Always {ideal}.
SelectionFunction ideal_move_selection(Move ideal);

/// Sub-maximal elements of Im(p) under <; empty when p is constant.
Quantifier second_best_quantifier();

/// Maximum of p(L) for the permissible moves L. Throws EmptyPermissibleSet.
Quantifier honest_quantifier(std::vector<Move> permissible);

/// Global maximum when some illicit move pays strictly more than
/// `threshold`, otherwise the honest maximum over X \ illicit.
Quantifier dishonest_quantifier(std::vector<Move> illicit, Rational threshold);

/// Attained outcomes with the largest number of preimages. Works for any
/// outcome kind.
Quantifier safe_quantifier();

/// Constant selection returning the named moves.
SelectionFunction constant_selection(std::vector<Move> moves);

namespace agent {
struct Averaging {};
struct WeightedAveraging {};
struct IdealMove {
  Move ideal;
  Rational radius;
};
struct SecondBest {};
struct Honest {
  std::vector<Move> permissible;
};
struct Dishonest {
  std::vector<Move> illicit;
  Rational threshold;
};
struct Safe {};
}  // namespace agent

/// Parameterized description of one heuristic agent.
using AgentSpec = std::variant<agent::Averaging, agent::WeightedAveraging, agent::IdealMove, agent::SecondBest,
                               agent::Honest, agent::Dishonest, agent::Safe>;

std::string agent_kind_name(const AgentSpec& spec);

Quantifier make_quantifier(const AgentSpec& spec);

}  // namespace hoagent
