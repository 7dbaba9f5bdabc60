#include "hoagent/reflexive.hpp"

#include <numeric>

namespace hoagent {

namespace {

void require_reflexive(const Context& p, std::string_view who) {
  if (!moves_equal_outcomes(*p.moves(), *p.outcomes())) {
    throw Error(Errc::DomainCodomainMismatch, std::string(who) + " needs moves and outcomes to coincide");
  }
}

OutcomeSubset as_outcomes(const Context& p, const MoveSubset& moves) {
  return OutcomeSubset::from_indices(p.outcomes(), moves.indices());
}

MoveSubset totalized_fixpoints(const Context& p, std::string_view who) {
  require_reflexive(p, who);
  auto fixed = fixpoints(p);
  return fixed.empty() ? MoveSubset::full(p.moves()) : fixed;
}

}  // namespace

MoveSubset fixpoints(const Context& p) {
  require_reflexive(p, "fix");
  MoveSubset out(p.moves());
  // X = R element-wise, so move i is fixed iff it maps to outcome i
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.outcome_index(x) == x) out.insert(x);
  }
  return out;
}

SelectionFunction fix_selection() {
  return SelectionFunction("fix", [](const Context& p) { return totalized_fixpoints(p, "fix"); });
}

Quantifier fix_quantifier() {
  return Quantifier("fix", [](const Context& p) { return as_outcomes(p, totalized_fixpoints(p, "fix")); });
}

Quantifier keynesian_quantifier() {
  return Quantifier("keynesian", [](const Context& p) {
    require_reflexive(p, "keynesian");
    OutcomeSubset out(p.outcomes());
    for (auto x : fixpoints(p).indices()) out.insert(p.outcome_index(x));
    return out.empty() ? OutcomeSubset::full(p.outcomes()) : out;
  });
}

SelectionFunction keynesian_selection() {
  return SelectionFunction("keynesian", [](const Context& p) { return totalized_fixpoints(p, "keynesian"); });
}

Quantifier voting_judge_quantifier(PartialOrder ranking) {
  return Quantifier("voting-judge", [ranking = std::move(ranking)](const Context& p) {
    require_reflexive(p, "voting-judge");
    if (!same_domain(p.outcomes(), ranking.ground())) {
      throw Error(Errc::SignatureMismatch, "judge's ranking is over other candidates");
    }
    return maximal_elements(image(p), ranking);
  });
}

OutcomeValue majority(const OutcomeValue& a, const OutcomeValue& b, const OutcomeValue& c) {
  if (a == b || a == c) return a;
  if (b == c) return b;
  throw Error(Errc::NonBinaryCandidates, a.to_string() + ", " + b.to_string() + ", " + c.to_string());
}

ProfileRule::ProfileRule(std::vector<MoveDomainPtr> players, OutcomeDomainPtr outcomes,
                         std::vector<std::size_t> table)
    : players_(std::move(players)), outcomes_(std::move(outcomes)), table_(std::move(table)) {
  if (players_.empty()) throw Error(Errc::ArityMismatch, "a profile rule needs at least one player");
  std::size_t profiles = 1;
  for (const auto& d : players_) {
    if (!d || d->empty()) throw Error(Errc::EmptyDomain, "a player has no moves");
    profiles *= d->size();
  }
  if (table_.size() != profiles) {
    throw Error(Errc::ValidationError, "outcome rule covers " + std::to_string(table_.size()) + " of " +
                                           std::to_string(profiles) + " profiles");
  }
  for (auto o : table_) {
    if (o >= outcomes_->size()) throw Error(Errc::UnknownOutcome, "index " + std::to_string(o));
  }
}

ProfileRule ProfileRule::from_function(std::vector<MoveDomainPtr> players, OutcomeDomainPtr outcomes,
                                       const std::function<OutcomeValue(std::span<const Move>)>& rule) {
  std::size_t profiles = 1;
  for (const auto& d : players) profiles *= d->size();
  std::vector<std::size_t> table(profiles);
  std::vector<Move> profile(players.size());
  for (std::size_t k = 0; k < profiles; ++k) {
    auto rest = k;
    for (std::size_t i = players.size(); i-- > 0;) {
      profile[i] = (*players[i])[rest % players[i]->size()];
      rest /= players[i]->size();
    }
    const auto value = rule(profile);
    const auto idx = outcomes->index_of(value);
    if (!idx) throw Error(Errc::UnknownOutcome, value.to_string());
    table[k] = *idx;
  }
  return ProfileRule(std::move(players), std::move(outcomes), std::move(table));
}

ProfileRule ProfileRule::majority_vote(OutcomeDomainPtr candidates) {
  if (candidates->size() != 2) {
    throw Error(Errc::NonBinaryCandidates, std::to_string(candidates->size()) + " candidates");
  }
  std::vector<Move> names;
  for (const auto& c : *candidates) names.push_back(c.to_string());
  const auto voter = make_move_domain(names);
  const auto& ground = *candidates;
  return from_function({voter, voter, voter}, candidates, [&](std::span<const Move> votes) {
    auto lookup = [&](const Move& m) { return ground[*voter->index_of(m)]; };
    return majority(lookup(votes[0]), lookup(votes[1]), lookup(votes[2]));
  });
}

ProfileRule ProfileRule::product(std::vector<MoveDomainPtr> players) {
  if (players.empty()) throw Error(Errc::ArityMismatch, "a profile rule needs at least one player");
  std::size_t profiles = 1;
  for (const auto& d : players) profiles *= d->size();
  std::vector<OutcomeValue> outcomes;
  outcomes.reserve(profiles);
  for (std::size_t k = 0; k < profiles; ++k) {
    std::vector<Move> profile(players.size());
    auto rest = k;
    for (std::size_t i = players.size(); i-- > 0;) {
      profile[i] = (*players[i])[rest % players[i]->size()];
      rest /= players[i]->size();
    }
    std::string name = "(";
    for (std::size_t i = 0; i < profile.size(); ++i) name += (i ? "," : "") + profile[i];
    outcomes.push_back(OutcomeValue::symbol(name + ")"));
  }
  std::vector<std::size_t> table(profiles);
  std::iota(table.begin(), table.end(), std::size_t{0});
  ProfileRule rule(std::move(players), make_outcome_domain(std::move(outcomes)), std::move(table));
  rule.is_product_ = true;
  return rule;
}

const MoveDomainPtr& ProfileRule::moves(std::size_t player) const {
  if (player >= players_.size()) throw Error(Errc::IndexOutOfRange, "player " + std::to_string(player));
  return players_[player];
}

std::size_t ProfileRule::outcome(std::span<const std::size_t> profile) const {
  if (profile.size() != players_.size()) throw Error(Errc::ArityMismatch, "profile has the wrong length");
  std::size_t k = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) k = k * players_[i]->size() + profile[i];
  return table_.at(k);
}

std::size_t ProfileRule::project(std::size_t outcome, std::size_t player) const {
  if (!is_product_) throw Error(Errc::ArityMismatch, "projection needs a product rule");
  if (player >= players_.size()) throw Error(Errc::IndexOutOfRange, "player " + std::to_string(player));
  for (std::size_t i = players_.size(); i-- > player + 1;) outcome /= players_[i]->size();
  return outcome % players_[player]->size();
}

Context induce_context(const ProfileRule& rule, std::size_t player, const std::vector<Move>& others) {
  if (player >= rule.player_count()) throw Error(Errc::IndexOutOfRange, "player " + std::to_string(player));
  if (others.size() != rule.player_count() - 1) {
    throw Error(Errc::IncompleteOthers, "expected " + std::to_string(rule.player_count() - 1) + " fixed moves, got " +
                                            std::to_string(others.size()));
  }
  std::vector<std::size_t> profile(rule.player_count());
  for (std::size_t i = 0, j = 0; i < rule.player_count(); ++i) {
    if (i == player) continue;
    const auto idx = rule.moves(i)->index_of(others[j]);
    if (!idx) throw Error(Errc::UnknownMove, others[j] + " for player " + std::to_string(i));
    profile[i] = *idx;
    ++j;
  }
  const auto& domain = rule.moves(player);
  std::vector<std::size_t> assignment(domain->size());
  for (std::size_t x = 0; x < domain->size(); ++x) {
    profile[player] = x;
    assignment[x] = rule.outcome(profile);
  }
  return Context(domain, rule.outcomes(), std::move(assignment));
}

SelectionFunction coordinating_selection(ProfileRule rule, std::size_t player) {
  if (rule.player_count() != 2) {
    throw Error(Errc::ArityMismatch, "coordination needs 2 players, rule has " + std::to_string(rule.player_count()));
  }
  if (!rule.is_product()) throw Error(Errc::ArityMismatch, "coordination needs the product outcome rule");
  if (player > 1) throw Error(Errc::IndexOutOfRange, "player " + std::to_string(player));
  return SelectionFunction("coordinating", [rule = std::move(rule), player](const Context& p) {
    if (!same_domain(p.moves(), rule.moves(player)) || !same_domain(p.outcomes(), rule.outcomes())) {
      throw Error(Errc::SignatureMismatch, "context is not over the player's moves and the product outcomes");
    }
    const std::size_t partner = 1 - player;
    const auto& partner_moves = *rule.moves(partner);
    MoveSubset out(p.moves());
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto met = rule.project(p.outcome_index(x), partner);
      if (partner_moves[met] == (*p.moves())[x]) out.insert(x);
    }
    return out.empty() ? MoveSubset::full(p.moves()) : out;
  });
}

}  // namespace hoagent
