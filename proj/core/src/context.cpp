#include "hoagent/context.hpp"

#include <limits>

namespace hoagent {

Context::Context(MoveDomainPtr moves, OutcomeDomainPtr outcomes, std::vector<std::size_t> assignment)
    : moves_(std::move(moves)), outcomes_(std::move(outcomes)), assignment_(std::move(assignment)) {
  if (!moves_ || moves_->empty()) throw Error(Errc::EmptyDomain, "move set X is empty");
  if (!outcomes_ || outcomes_->empty()) throw Error(Errc::EmptyDomain, "outcome set R is empty");
  if (assignment_.size() != moves_->size()) {
    const auto missing = assignment_.size() < moves_->size() ? (*moves_)[assignment_.size()] : Move{};
    throw Error(Errc::MissingMove, missing);
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= outcomes_->size()) {
      throw Error(Errc::UnknownOutcome, "index " + std::to_string(assignment_[i]) + " for move " + (*moves_)[i]);
    }
  }
}

const OutcomeValue& Context::at(const Move& move) const {
  const auto idx = moves_->index_of(move);
  if (!idx) throw Error(Errc::UnknownMove, move);
  return (*this)(*idx);
}

std::string Context::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (i) out += ", ";
    out += (*moves_)[i] + "->" + (*outcomes_)[assignment_[i]].to_string();
  }
  return out + "}";
}

Context make_context(MoveDomainPtr moves, OutcomeDomainPtr outcomes,
                     const std::vector<std::pair<Move, OutcomeValue>>& assignment) {
  if (!moves || moves->empty()) throw Error(Errc::EmptyDomain, "move set X is empty");
  if (!outcomes || outcomes->empty()) throw Error(Errc::EmptyDomain, "outcome set R is empty");
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> slots(moves->size(), unset);
  for (const auto& [move, outcome] : assignment) {
    const auto mi = moves->index_of(move);
    if (!mi) throw Error(Errc::UnknownMove, move);
    if (slots[*mi] != unset) throw Error(Errc::DuplicateMove, move);
    const auto oi = outcomes->index_of(outcome);
    if (!oi) throw Error(Errc::UnknownOutcome, outcome.to_string());
    slots[*mi] = *oi;
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] == unset) throw Error(Errc::MissingMove, (*moves)[i]);
  }
  return Context(std::move(moves), std::move(outcomes), std::move(slots));
}

OutcomeSubset image(const Context& p) {
  OutcomeSubset out(p.outcomes());
  for (auto idx : p.assignment()) out.insert(idx);
  return out;
}

std::size_t preimage_count(const Context& p, const OutcomeValue& r) {
  const auto idx = p.outcomes()->index_of(r);
  if (!idx) throw Error(Errc::UnknownOutcome, r.to_string());
  std::size_t n = 0;
  for (auto a : p.assignment()) n += (a == *idx);
  return n;
}

MoveSubset preimage(const Context& p, const OutcomeSubset& outcomes) {
  if (!same_domain(p.outcomes(), outcomes.ground())) {
    throw Error(Errc::GroundMismatch, "outcome subset is not over the context codomain");
  }
  MoveSubset out(p.moves());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (outcomes.contains(p.outcome_index(x))) out.insert(x);
  }
  return out;
}

OutcomeSubset image_of(const Context& p, const MoveSubset& moves) {
  if (!same_domain(p.moves(), moves.ground())) {
    throw Error(Errc::GroundMismatch, "move subset is not over the context domain");
  }
  OutcomeSubset out(p.outcomes());
  for (auto x : moves.indices()) out.insert(p.outcome_index(x));
  return out;
}

std::uint64_t context_rank(const Context& p) {
  const std::uint64_t radix = p.outcomes()->size();
  std::uint64_t rank = 0;
  for (auto a : p.assignment()) rank = rank * radix + a;
  return rank;
}

Context context_unrank(const Signature& sig, std::uint64_t rank) {
  const std::uint64_t radix = sig.outcomes->size();
  std::vector<std::size_t> assignment(sig.moves->size());
  for (std::size_t i = assignment.size(); i-- > 0;) {
    assignment[i] = static_cast<std::size_t>(rank % radix);
    rank /= radix;
  }
  return Context(sig.moves, sig.outcomes, std::move(assignment));
}

std::uint64_t context_count(const Signature& sig) {
  const std::uint64_t radix = sig.outcomes->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < sig.moves->size(); ++i) {
    if (radix != 0 && total > std::numeric_limits<std::uint64_t>::max() / radix) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= radix;
  }
  return total;
}

}  // namespace hoagent
