#include "hoagent/properties.hpp"

#include <unordered_map>

namespace hoagent {

namespace {

std::string power_text(const Signature& sig) {
  return std::to_string(sig.outcomes->size()) + "^" + std::to_string(sig.moves->size());
}

// Runs `check` over every context in order until it returns false.
template <class Check>
PropertyReport scan(std::string property, const Signature& sig, EnumerationBudget budget, Check&& check) {
  ContextEnumeration contexts(sig, budget);
  PropertyReport report{std::move(property), Verdict::holds, std::nullopt, 0};
  for (const auto& p : contexts) {
    ++report.contexts_checked;
    if (auto witness = check(p)) {
      report.verdict = Verdict::fails;
      report.witness = std::move(witness);
      return report;
    }
  }
  return report;
}

}  // namespace

ContextEnumeration::ContextEnumeration(Signature sig, EnumerationBudget budget)
    : sig_(std::move(sig)), count_(context_count(sig_)) {
  if (count_ > budget.max_contexts) {
    throw Error(Errc::BudgetExceeded, "|R|^|X| = " + power_text(sig_) + " contexts exceeds the budget of " +
                                          std::to_string(budget.max_contexts));
  }
}

ContextEnumeration enumerate_contexts(MoveDomainPtr moves, OutcomeDomainPtr outcomes, EnumerationBudget budget) {
  return ContextEnumeration(Signature{std::move(moves), std::move(outcomes)}, budget);
}

Signature numbered_signature(std::size_t moves, std::size_t outcomes) {
  std::vector<Move> xs;
  for (std::size_t i = 0; i < moves; ++i) xs.push_back(std::to_string(i));
  std::vector<OutcomeValue> rs;
  for (std::size_t i = 0; i < outcomes; ++i) rs.emplace_back(Rational(static_cast<std::int64_t>(i)));
  return {make_move_domain(std::move(xs)), make_outcome_domain(std::move(rs))};
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::holds ? "holds" : "fails"; }

PropertyReport is_total(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  return scan("total", sig, budget, [&](const Context& p) -> std::optional<Witness> {
    if (phi(p).empty()) return ContextWitness{p};
    return std::nullopt;
  });
}

PropertyReport is_attainable(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  return scan("attainable", sig, budget, [&](const Context& p) -> std::optional<Witness> {
    if (!phi(p).intersects(image(p))) return ContextWitness{p};
    return std::nullopt;
  });
}

PropertyReport is_strongly_attainable(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  return scan("strongly-attainable", sig, budget, [&](const Context& p) -> std::optional<Witness> {
    if (!phi(p).is_subset_of(image(p))) return ContextWitness{p};
    return std::nullopt;
  });
}

PropertyReport is_context_independent(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  struct ClassRepresentative {
    std::uint64_t rank;
    OutcomeSubset output;
  };
  std::unordered_map<std::vector<bool>, ClassRepresentative> classes;
  return scan("context-independent", sig, budget, [&](const Context& p) -> std::optional<Witness> {
    auto output = phi(p);
    const auto [it, fresh] = classes.try_emplace(image(p).bits(), ClassRepresentative{context_rank(p), output});
    if (!fresh && !(it->second.output == output)) {
      return ContextPairWitness{context_unrank(sig, it->second.rank), p};
    }
    return std::nullopt;
  });
}

PropertyReport attains(const SelectionFunction& eps, const Quantifier& phi, const Signature& sig,
                       EnumerationBudget budget) {
  for (const auto& p : ContextEnumeration(sig, budget)) {
    if (eps(p).empty()) {
      throw Error(Errc::NonTotalSelection, eps.name() + " selects nothing on " + p.to_string());
    }
  }
  return scan("attains", sig, budget, [&](const Context& p) -> std::optional<Witness> {
    const auto accepted = phi(p);
    for (auto x : eps(p).indices()) {
      if (!accepted.contains(p.outcome_index(x))) return MoveWitness{p, x};
    }
    return std::nullopt;
  });
}

SelectionFunction attainment_witness(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  ContextEnumeration contexts(sig, budget);
  std::vector<MoveSubset> table;
  table.reserve(contexts.size());
  for (const auto& p : contexts) {
    auto selected = preimage(p, phi(p));
    if (selected.empty()) throw Error(Errc::NotAttainable, phi.name() + " misses Im(p) on " + p.to_string());
    table.push_back(std::move(selected));
  }
  return SelectionFunction::table("witness-of-" + phi.name(), sig, std::move(table));
}

Context canonical_witness_context(const Signature& sig, const OutcomeSubset& s) {
  const auto members = s.indices();
  if (members.empty()) throw Error(Errc::PreconditionViolated, "no context has an empty image");
  if (members.size() > sig.moves->size()) {
    throw Error(Errc::PreconditionViolated, "|S| = " + std::to_string(members.size()) + " exceeds |X| = " +
                                                std::to_string(sig.moves->size()));
  }
  std::vector<std::size_t> assignment(sig.moves->size(), members.front());
  std::copy(members.begin(), members.end(), assignment.begin());
  return Context(sig.moves, sig.outcomes, std::move(assignment));
}

ChoiceFunction reconstruct_choice_function(const Quantifier& phi, const Signature& sig, EnumerationBudget budget) {
  const std::size_t n = sig.outcomes->size();
  if (sig.moves->size() < n) {
    throw Error(Errc::PreconditionViolated, "|X| = " + std::to_string(sig.moves->size()) + " < |R| = " +
                                                std::to_string(n));
  }
  if (n > kMaxChoiceTableGround) {
    throw Error(Errc::PreconditionViolated, "|R| = " + std::to_string(n) + " is too large to tabulate");
  }
  const auto independence = is_context_independent(phi, sig, budget);
  if (!independence.holds()) {
    const auto& pair = std::get<ContextPairWitness>(*independence.witness);
    throw Error(Errc::PreconditionViolated, phi.name() + " is context-dependent: " + pair.first.to_string() +
                                                " vs " + pair.second.to_string());
  }
  std::vector<std::uint64_t> table(std::uint64_t{1} << n, 0);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    const auto s = OutcomeSubset::from_mask(sig.outcomes, mask);
    const auto value = phi(canonical_witness_context(sig, s));
    if (value.empty() || !value.is_subset_of(s)) {
      throw Error(Errc::PreconditionViolated, phi.name() + " gives " + value.to_string() + " on image " +
                                                  s.to_string() + ", which no choice function can");
    }
    table[mask] = value.mask();
  }
  auto f = ChoiceFunction::table(sig.outcomes, std::move(table));
  for (const auto& p : ContextEnumeration(sig, budget)) {
    if (!(phi(p) == f(image(p)))) {
      throw Error(Errc::ReconstructionMismatch, "phi differs from f . Im on " + p.to_string());
    }
  }
  return f;
}

}  // namespace hoagent
