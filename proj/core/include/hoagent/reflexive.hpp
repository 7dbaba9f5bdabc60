#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hoagent/orders.hpp"
#include "hoagent/quantifier.hpp"

namespace hoagent {

// Agents whose moves and outcomes coincide (X = R, matched element-wise by
// spelling, see moves_equal_outcomes). Calling them on any other context
// throws DomainCodomainMismatch.

/// { x | p(x) = x } with no totalization; may be empty.
MoveSubset fixpoints(const Context& p);

/// fix(p): the fixpoints, or all of X when there are none.
SelectionFunction fix_selection();
/// fix(p) read as a set of outcomes.
Quantifier fix_quantifier();

/// { p(x) | p(x) = x }, totalized to R like fix.
Quantifier keynesian_quantifier();
/// The Keynesian judge's preferred votes; identical to fix.
SelectionFunction keynesian_selection();

/// Maximal elements of Im(p) under the judge's ranking of the candidates.
Quantifier voting_judge_quantifier(PartialOrder ranking);

/// The value occurring at least twice among three votes. Throws
/// NonBinaryCandidates when all three differ.
OutcomeValue majority(const OutcomeValue& a, const OutcomeValue& b, const OutcomeValue& c);

/// Outcome of every joint move profile of a finite multi-player setting.
class ProfileRule {
 public:
  /// `table[k]` is the outcome index of the k-th profile in mixed-radix
  /// order (player 0 most significant).
  ProfileRule(std::vector<MoveDomainPtr> players, OutcomeDomainPtr outcomes, std::vector<std::size_t> table);

  static ProfileRule from_function(std::vector<MoveDomainPtr> players, OutcomeDomainPtr outcomes,
                                   const std::function<OutcomeValue(std::span<const Move>)>& rule);

  /// Three voters choosing among two candidates, decided by majority. The
  /// voters' moves are the candidates' spellings. Throws NonBinaryCandidates.
  static ProfileRule majority_vote(OutcomeDomainPtr candidates);

  /// Two-or-more players whose outcome is the profile itself, spelled
  /// "(A,B)". Outcomes are ordered like the profiles.
  static ProfileRule product(std::vector<MoveDomainPtr> players);

  std::size_t player_count() const noexcept { return players_.size(); }
  const MoveDomainPtr& moves(std::size_t player) const;
  const OutcomeDomainPtr& outcomes() const noexcept { return outcomes_; }
  bool is_product() const noexcept { return is_product_; }

  /// Outcome index of a full profile given as move indices.
  std::size_t outcome(std::span<const std::size_t> profile) const;

  /// Coordinate `player` of a product outcome, as a move index.
  std::size_t project(std::size_t outcome, std::size_t player) const;

 private:
  std::vector<MoveDomainPtr> players_;
  OutcomeDomainPtr outcomes_;
  std::vector<std::size_t> table_;
  bool is_product_ = false;
};

/// Fixes every other player's move and returns the focal player's context.
/// `others` lists the other players' moves in player order, skipping
/// `player`. Throws IndexOutOfRange, IncompleteOthers or UnknownMove.
Context induce_context(const ProfileRule& rule, std::size_t player, const std::vector<Move>& others);

/// Moves x of `player` where the partner's coordinate of p(x) is x itself,
/// or all moves when there is none. Needs a two-player product rule
/// (ArityMismatch otherwise); contexts must be over that player's moves and
/// the product outcomes.
SelectionFunction coordinating_selection(ProfileRule rule, std::size_t player);

}  // namespace hoagent
