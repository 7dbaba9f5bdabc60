#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hoagent/quantifier.hpp"

namespace hoagent {

/// Reflexive, transitive, antisymmetric relation on an outcome ground set;
/// `geq(a, b)` reads a ⪰ b.
class PartialOrder {
 public:
  /// Reflexive-transitive closure of `pairs` (left ⪰ right). Throws
  /// UnknownOutcome, or AntisymmetryViolation naming a cycle.
  static PartialOrder from_pairs(OutcomeDomainPtr ground,
                                 const std::vector<std::pair<OutcomeValue, OutcomeValue>>& pairs);

  /// Same, with pairs given as ground indices.
  static PartialOrder from_index_pairs(OutcomeDomainPtr ground,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// Validates a full relation matrix (row-major, `rel[a * n + b]` = a ⪰ b)
  /// without closing it. Throws InvalidOrder or AntisymmetryViolation.
  static PartialOrder from_matrix(OutcomeDomainPtr ground, std::vector<bool> rel);

  /// The usual ≥ on scalar outcomes; throws NonNumericOutcomes otherwise.
  static PartialOrder numeric(OutcomeDomainPtr ground);

  const OutcomeDomainPtr& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_->size(); }

  bool geq(std::size_t a, std::size_t b) const { return rel_[a * size() + b]; }
  /// a ≻ b: a ⪰ b and a ≠ b.
  bool greater(std::size_t a, std::size_t b) const { return a != b && geq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return geq(a, b) || geq(b, a); }
  bool is_total() const;

  const std::vector<bool>& matrix() const noexcept { return rel_; }

  friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
    return a.rel_ == b.rel_ && same_domain(a.ground_, b.ground_);
  }

 private:
  PartialOrder(OutcomeDomainPtr ground, std::vector<bool> rel) : ground_(std::move(ground)), rel_(std::move(rel)) {}

  OutcomeDomainPtr ground_;
  std::vector<bool> rel_;
};

/// { s ∈ S | no t ∈ S with t ≻ s }. Throws GroundMismatch.
OutcomeSubset maximal_elements(const OutcomeSubset& s, const PartialOrder& ord);

/// Second-greatest elements of the maximal strict chains inside S: every
/// element covered (within S) by a maximal element of S. Empty when S has
/// no strict chain of length two.
OutcomeSubset sub_maximal_elements(const OutcomeSubset& s, const PartialOrder& ord);

/// f : P(R) -> P(R) with f(S) ⊆ S and f(S) ≠ ∅ for nonempty S.
class ChoiceFunction {
 public:
  /// f(S) = maximal elements of S under `ord`.
  static ChoiceFunction maximal(PartialOrder ord);

  /// Explicit table indexed by subset mask (bit i = ground element i);
  /// `table[0]` is ignored. Every nonempty S must satisfy the invariants;
  /// ground sets above 20 elements are rejected.
  static ChoiceFunction table(OutcomeDomainPtr ground, std::vector<std::uint64_t> table);

  const OutcomeDomainPtr& ground() const noexcept { return ground_; }
  bool is_table() const noexcept { return !order_; }
  const PartialOrder* order() const noexcept { return order_.get(); }

  /// Throws GroundMismatch when S is over another ground set.
  OutcomeSubset operator()(const OutcomeSubset& s) const;

  /// Pointwise equality over every nonempty subset.
  bool extensionally_equal(const ChoiceFunction& other) const;

 private:
  ChoiceFunction(OutcomeDomainPtr ground, std::shared_ptr<const PartialOrder> order,
                 std::shared_ptr<const std::vector<std::uint64_t>> table)
      : ground_(std::move(ground)), order_(std::move(order)), table_(std::move(table)) {}

  OutcomeDomainPtr ground_;
  std::shared_ptr<const PartialOrder> order_;
  std::shared_ptr<const std::vector<std::uint64_t>> table_;
};

inline constexpr std::size_t kMaxChoiceTableGround = 20;

/// f ∘ Im. Evaluation throws SignatureMismatch when the context codomain is
/// not f's ground set.
Quantifier choice_quantifier(ChoiceFunction f);

/// Moves not known to be worse: { x | no r ∈ Im(p) with r ≻ p(x) }.
SelectionFunction order_selection(PartialOrder ord);

/// Greatest attained value; scalar outcomes only.
Quantifier max_quantifier_numeric();

/// All moves attaining the greatest value; scalar outcomes only.
SelectionFunction argmax_selection_numeric();

}  // namespace hoagent
