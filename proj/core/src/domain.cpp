#include "hoagent/domain.hpp"

namespace hoagent {

MoveDomainPtr make_move_domain(std::vector<Move> moves) {
  if (moves.empty()) throw Error(Errc::EmptyDomain, "move set X is empty");
  return std::make_shared<const MoveDomain>(std::move(moves));
}

OutcomeDomainPtr make_outcome_domain(std::vector<OutcomeValue> outcomes) {
  if (outcomes.empty()) throw Error(Errc::EmptyDomain, "outcome set R is empty");
  const auto kind = outcomes.front().kind();
  const auto dim = outcomes.front().dimension();
  for (const auto& o : outcomes) {
    if (o.kind() != kind) {
      throw Error(Errc::MixedOutcomeKinds, o.to_string() + " is a " + std::string(to_string(o.kind())) +
                                               ", expected " + std::string(to_string(kind)));
    }
    if (kind == OutcomeKind::vector && o.dimension() != dim) {
      throw Error(Errc::MixedOutcomeKinds, o.to_string() + " has length " + std::to_string(o.dimension()) +
                                               ", expected " + std::to_string(dim));
    }
  }
  return std::make_shared<const OutcomeDomain>(std::move(outcomes));
}

OutcomeKind outcome_kind(const OutcomeDomain& ground) {
  return ground.empty() ? OutcomeKind::symbol : ground[0].kind();
}

void require_scalar(const OutcomeDomain& ground, std::string_view who) {
  if (outcome_kind(ground) != OutcomeKind::scalar) {
    throw Error(Errc::NonNumericOutcomes,
                std::string(who) + " needs scalar outcomes, got " + std::string(to_string(outcome_kind(ground))));
  }
}

bool moves_equal_outcomes(const MoveDomain& moves, const OutcomeDomain& outcomes) {
  if (moves.size() != outcomes.size()) return false;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] != outcomes[i].to_string()) return false;
  }
  return true;
}

}  // namespace hoagent
