#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hoagent/domain.hpp"
#include "hoagent/subset.hpp"

namespace hoagent {

/// The (X, R) pair a context, quantifier table or property check ranges over.
struct Signature {
  MoveDomainPtr moves;
  OutcomeDomainPtr outcomes;

  friend bool operator==(const Signature& a, const Signature& b) {
    return same_domain(a.moves, b.moves) && same_domain(a.outcomes, b.outcomes);
  }
};

/// Total map p : X -> R, stored as one outcome index per move.
class Context {
 public:
  /// `assignment[i]` is the index in `outcomes` of p(moves[i]).
  Context(MoveDomainPtr moves, OutcomeDomainPtr outcomes, std::vector<std::size_t> assignment);

  const MoveDomainPtr& moves() const noexcept { return moves_; }
  const OutcomeDomainPtr& outcomes() const noexcept { return outcomes_; }
  Signature signature() const { return {moves_, outcomes_}; }

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t outcome_index(std::size_t move) const { return assignment_.at(move); }
  const OutcomeValue& operator()(std::size_t move) const { return (*outcomes_)[assignment_.at(move)]; }
  /// Throws UnknownMove.
  const OutcomeValue& at(const Move& move) const;

  std::span<const std::size_t> assignment() const noexcept { return assignment_; }

  /// "{a->1, b->3}".
  std::string to_string() const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.assignment_ == b.assignment_ && same_domain(a.moves_, b.moves_) &&
           same_domain(a.outcomes_, b.outcomes_);
  }

 private:
  MoveDomainPtr moves_;
  OutcomeDomainPtr outcomes_;
  std::vector<std::size_t> assignment_;
};

/// Validating constructor from (move, outcome) pairs. Throws MissingMove,
/// DuplicateMove, UnknownMove or UnknownOutcome naming the element.
Context make_context(MoveDomainPtr moves, OutcomeDomainPtr outcomes,
                     const std::vector<std::pair<Move, OutcomeValue>>& assignment);

/// Im(p) over the context's codomain.
OutcomeSubset image(const Context& p);

/// |{x | p(x) = r}|; throws UnknownOutcome when r is outside the codomain.
std::size_t preimage_count(const Context& p, const OutcomeValue& r);

/// Moves whose outcome lies in `outcomes` (the preimage of a set).
MoveSubset preimage(const Context& p, const OutcomeSubset& outcomes);

/// The image of a move subset, p(L).
OutcomeSubset image_of(const Context& p, const MoveSubset& moves);

/// Mixed-radix position of p among all |R|^|X| contexts of its signature; the
/// first move is the most significant digit.
std::uint64_t context_rank(const Context& p);

/// Inverse of context_rank.
Context context_unrank(const Signature& sig, std::uint64_t rank);

/// |R|^|X|, saturating at UINT64_MAX.
std::uint64_t context_count(const Signature& sig);

}  // namespace hoagent
