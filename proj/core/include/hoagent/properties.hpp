#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <variant>

#include "hoagent/orders.hpp"
#include "hoagent/quantifier.hpp"

namespace hoagent {

/// Upper bound on the number of contexts any single check may visit.
/// Exceeding it is an error (BudgetExceeded), never a silent truncation.
struct EnumerationBudget {
  std::uint64_t max_contexts = 1'000'000;
};

/// All |R|^|X| contexts of a signature in mixed-radix order (see
/// context_rank). Contexts are produced on demand.
class ContextEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Context;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Context;

    iterator(const Signature* sig, std::uint64_t rank) : sig_(sig), rank_(rank) {}
    Context operator*() const { return context_unrank(*sig_, rank_); }
    iterator& operator++() {
      ++rank_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++rank_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.rank_ == b.rank_; }

   private:
    const Signature* sig_;
    std::uint64_t rank_;
  };

  /// Throws BudgetExceeded when |R|^|X| > budget.
  ContextEnumeration(Signature sig, EnumerationBudget budget);

  std::uint64_t size() const noexcept { return count_; }
  const Signature& signature() const noexcept { return sig_; }
  Context at(std::uint64_t rank) const { return context_unrank(sig_, rank); }

  iterator begin() const { return {&sig_, 0}; }
  iterator end() const { return {&sig_, count_}; }

 private:
  Signature sig_;
  std::uint64_t count_;
};

ContextEnumeration enumerate_contexts(MoveDomainPtr moves, OutcomeDomainPtr outcomes, EnumerationBudget budget = {});

/// Synthetic signature for "X=n,R=m": moves "0".."n-1" and scalar outcomes
/// 0..m-1, so that n == m gives X = R.
Signature numbered_signature(std::size_t moves, std::size_t outcomes);

enum class Verdict { holds, fails };

std::string_view to_string(Verdict v) noexcept;

/// A context on which φ(p) is empty, misses Im(p), or leaves Im(p).
struct ContextWitness {
  Context context;
};
/// Two contexts with equal images and different outputs.
struct ContextPairWitness {
  Context first;
  Context second;
};
/// A selected move whose outcome the quantifier does not accept.
struct MoveWitness {
  Context context;
  std::size_t move;
};
using Witness = std::variant<ContextWitness, ContextPairWitness, MoveWitness>;

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  /// Contexts evaluated before the verdict was reached.
  std::uint64_t contexts_checked = 0;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

/// φ(p) ≠ ∅ for every context.
PropertyReport is_total(const Quantifier& phi, const Signature& sig, EnumerationBudget budget = {});

/// φ(p) ∩ Im(p) ≠ ∅ for every context.
PropertyReport is_attainable(const Quantifier& phi, const Signature& sig, EnumerationBudget budget = {});

/// φ(p) ⊆ Im(p) for every context.
PropertyReport is_strongly_attainable(const Quantifier& phi, const Signature& sig, EnumerationBudget budget = {});

/// Im(p) = Im(p') implies φ(p) = φ(p'). Contexts are grouped by image, so
/// the witness pair is the first context of the class and the first later
/// context that disagrees with it.
PropertyReport is_context_independent(const Quantifier& phi, const Signature& sig, EnumerationBudget budget = {});

/// x ∈ ε(p) implies p(x) ∈ φ(p). ε must be total on the signature; otherwise
/// NonTotalSelection is thrown naming the context.
PropertyReport attains(const SelectionFunction& eps, const Quantifier& phi, const Signature& sig,
                       EnumerationBudget budget = {});

/// The selection ε(p) = { x | p(x) ∈ φ(p) } tabulated over the signature.
/// Throws NotAttainable (with the failing context) when φ is not attainable.
SelectionFunction attainment_witness(const Quantifier& phi, const Signature& sig, EnumerationBudget budget = {});

/// The context with image exactly S used to read off f(S): the first |S|
/// moves take S's members in ground order, the remaining moves repeat the
/// first member. Needs |X| ≥ |S| and S nonempty.
Context canonical_witness_context(const Signature& sig, const OutcomeSubset& s);

/// Recovers f with φ = f ∘ Im by f(S) = φ(u_S). Throws PreconditionViolated
/// when |X| < |R|, φ is context-dependent, or some f(S) is empty or leaves S;
/// ReconstructionMismatch if the final φ = f ∘ Im validation fails.
ChoiceFunction reconstruct_choice_function(const Quantifier& phi, const Signature& sig,
                                           EnumerationBudget budget = {});

}  // namespace hoagent
