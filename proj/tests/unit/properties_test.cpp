#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hoagent/agents.hpp"
#include "hoagent/properties.hpp"
#include "hoagent/reflexive.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace hoagent {
namespace {

using testing::error_code;
using testing::Names;
using testing::names;

TEST(EnumerateContexts, CountsAndBudget) {
  EXPECT_EQ(enumerate_contexts(numbered_signature(2, 2).moves, numbered_signature(2, 2).outcomes).size(), 4U);
  const auto sig = numbered_signature(3, 3);
  const auto all = ContextEnumeration(sig, {});
  EXPECT_EQ(all.size(), 27U);
  std::set<std::vector<std::size_t>> distinct;
  for (const auto& p : all) distinct.emplace(p.assignment().begin(), p.assignment().end());
  EXPECT_EQ(distinct.size(), 27U);
  // same order as the independent odometer
  const auto raw = oracle::all_contexts(3, 3);
  for (std::uint64_t k = 0; k < all.size(); ++k) {
    const auto p = all.at(k);
    EXPECT_EQ(std::vector<std::size_t>(p.assignment().begin(), p.assignment().end()), raw[k]);
  }
}

TEST(EnumerateContexts, BudgetExceededReportsTheCount) {
  try {
    ContextEnumeration(numbered_signature(20, 10), EnumerationBudget{1'000'000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    EXPECT_NE(e.detail().find("10^20"), std::string::npos);
  }
}

TEST(IsTotal, Examples) {
  const auto sig = numbered_signature(3, 3);
  const auto max = is_total(max_quantifier_numeric(), sig);
  EXPECT_TRUE(max.holds());
  EXPECT_EQ(max.contexts_checked, 27U);

  const auto second = is_total(second_best_quantifier(), numbered_signature(2, 2));
  ASSERT_FALSE(second.holds());
  const auto& witness = std::get<ContextWitness>(*second.witness).context;
  EXPECT_EQ(image(witness).size(), 1U);
  EXPECT_TRUE(second_best_quantifier()(witness).empty());

  const auto small = numbered_signature(1, 2);
  const auto table = Quantifier::table("t", small, {OutcomeSubset::full(small.outcomes), OutcomeSubset::full(small.outcomes)});
  EXPECT_TRUE(is_total(table, small).holds());
}

TEST(IsAttainable, MaxAndOrderInduced) {
  const auto sig = numbered_signature(3, 3);
  EXPECT_TRUE(is_attainable(max_quantifier_numeric(), sig).holds());
  EXPECT_TRUE(is_strongly_attainable(max_quantifier_numeric(), sig).holds());
  const auto ord = PartialOrder::from_index_pairs(sig.outcomes, {{2, 0}});
  EXPECT_TRUE(is_attainable(choice_quantifier(ChoiceFunction::maximal(ord)), sig).holds());
}

TEST(IsAttainable, WideBallIsAttainableButNotStrongly) {
  const auto sig = numbered_signature(2, 3);
  const auto phi = ideal_move_quantifier("0", Rational(5));
  EXPECT_TRUE(is_attainable(phi, sig).holds());
  const auto strong = is_strongly_attainable(phi, sig);
  ASSERT_FALSE(strong.holds());
  const auto& p = std::get<ContextWitness>(*strong.witness).context;
  EXPECT_FALSE(phi(p).is_subset_of(image(p)));
}

TEST(IsContextIndependent, MaxHolds) {
  const auto report = is_context_independent(max_quantifier_numeric(), numbered_signature(3, 3));
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.contexts_checked, 27U);
}

TEST(IsContextIndependent, FixFails) {
  const auto sig = numbered_signature(3, 3);
  const auto report = is_context_independent(fix_quantifier(), sig);
  ASSERT_FALSE(report.holds());
  // the first disagreement in enumeration order lies in the image class {0, 1}
  const auto& pair = std::get<ContextPairWitness>(*report.witness);
  EXPECT_EQ(pair.first.to_string(), "{0->0, 1->0, 2->1}");
  EXPECT_EQ(pair.second.to_string(), "{0->0, 1->1, 2->0}");
  EXPECT_EQ(image(pair.first), image(pair.second));
  EXPECT_NE(fix_quantifier()(pair.first), fix_quantifier()(pair.second));

  // identity against the swap of 1 and 2: same image, fixpoints all vs {0}
  const Context identity(sig.moves, sig.outcomes, {0, 1, 2});
  const Context swap(sig.moves, sig.outcomes, {0, 2, 1});
  EXPECT_EQ(image(identity), image(swap));
  EXPECT_EQ(names(fix_quantifier()(identity)), (Names{"0", "1", "2"}));
  EXPECT_EQ(names(fix_quantifier()(swap)), (Names{"0"}));
}

TEST(IsContextIndependent, SafeAndWeightedAveragingFail) {
  const auto sig = numbered_signature(3, 2);
  for (const auto& phi : {safe_quantifier(), weighted_averaging_quantifier()}) {
    const auto report = is_context_independent(phi, sig);
    ASSERT_FALSE(report.holds()) << phi.name();
    const auto& pair = std::get<ContextPairWitness>(*report.witness);
    EXPECT_EQ(image(pair.first), image(pair.second));
    EXPECT_NE(phi(pair.first), phi(pair.second));
  }
}

// Random table quantifiers against the all-pairs definition.
TEST(IsContextIndependent, AgreesWithAllPairsOracle) {
  std::mt19937 rng(11);
  const auto sig = numbered_signature(3, 2);
  const auto raw = oracle::all_contexts(3, 2);
  for (int trial = 0; trial < 300; ++trial) {
    // Half the trials start from f . Im so that both verdicts occur.
    std::vector<std::uint64_t> by_image(4);
    for (auto& v : by_image) v = rng() % 4;
    std::vector<std::uint64_t> outputs(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      std::uint64_t im = 0;
      for (auto r : raw[k]) im |= 1U << r;
      outputs[k] = (trial % 2 == 0) ? by_image[im] : rng() % 4;
    }
    bool expected = true;
    for (std::size_t a = 0; a < raw.size(); ++a)
      for (std::size_t b = 0; b < raw.size(); ++b)
        if (oracle::raw_image(raw[a]) == oracle::raw_image(raw[b]) && outputs[a] != outputs[b]) expected = false;

    std::vector<OutcomeSubset> entries;
    for (auto o : outputs) entries.push_back(OutcomeSubset::from_mask(sig.outcomes, o));
    const auto report = is_context_independent(Quantifier::table("random", sig, entries), sig);
    EXPECT_EQ(report.holds(), expected);
  }
}

TEST(Attains, ArgmaxAttainsMaxAndFixAttainsItself) {
  EXPECT_TRUE(attains(argmax_selection_numeric(), max_quantifier_numeric(), numbered_signature(3, 3)).holds());
  EXPECT_TRUE(attains(fix_selection(), fix_quantifier(), numbered_signature(3, 3)).holds());
}

TEST(Attains, ConstantSelectionFailsAgainstMax) {
  const auto sig = numbered_signature(3, 3);
  const auto report = attains(constant_selection({"0"}), max_quantifier_numeric(), sig);
  ASSERT_FALSE(report.holds());
  const auto& w = std::get<MoveWitness>(*report.witness);
  EXPECT_EQ(w.move, 0U);
  EXPECT_FALSE(max_quantifier_numeric()(w.context).contains(w.context.outcome_index(w.move)));
}

TEST(Attains, NonTotalSelectionIsAnError) {
  const auto sig = numbered_signature(2, 2);
  const SelectionFunction never("never", [](const Context& p) { return MoveSubset(p.moves()); });
  EXPECT_EQ(error_code([&] { attains(never, max_quantifier_numeric(), sig); }), Errc::NonTotalSelection);
}

TEST(AttainmentWitness, MaxYieldsArgmax) {
  const auto sig = numbered_signature(3, 3);
  const auto eps = attainment_witness(max_quantifier_numeric(), sig);
  EXPECT_TRUE(eps.is_table());
  for (const auto& p : ContextEnumeration(sig, {})) EXPECT_EQ(eps(p), argmax_selection_numeric()(p));
  EXPECT_TRUE(attains(eps, max_quantifier_numeric(), sig).holds());
}

TEST(AttainmentWitness, FixAndSafe) {
  const auto sig = numbered_signature(3, 3);
  const auto fix_eps = attainment_witness(fix_quantifier(), sig);
  for (const auto& p : ContextEnumeration(sig, {})) {
    EXPECT_TRUE(fixpoints(p).is_subset_of(fix_eps(p)));
  }
  const auto safe_eps = attainment_witness(safe_quantifier(), sig);
  for (const auto& p : ContextEnumeration(sig, {})) {
    EXPECT_EQ(safe_eps(p), preimage(p, safe_quantifier()(p)));
  }
}

TEST(AttainmentWitness, NotAttainable) {
  EXPECT_EQ(error_code([] { attainment_witness(second_best_quantifier(), numbered_signature(2, 2)); }),
            Errc::NotAttainable);
}

TEST(CanonicalWitnessContext, PadsWithFirstMember) {
  const auto sig = numbered_signature(4, 3);
  const auto u = canonical_witness_context(sig, OutcomeSubset::from_indices(sig.outcomes, {1, 2}));
  EXPECT_EQ(u.to_string(), "{0->1, 1->2, 2->1, 3->1}");
  EXPECT_EQ(image(u), OutcomeSubset::from_indices(sig.outcomes, {1, 2}));
}

TEST(ReconstructChoiceFunction, MaxOverOneTwo) {
  const Signature sig{make_move_domain({"a", "b", "c"}), testing::ints({1, 2})};
  const auto f = reconstruct_choice_function(max_quantifier_numeric(), sig);
  EXPECT_EQ(names(f(OutcomeSubset::from_mask(sig.outcomes, 0b01))), (Names{"1"}));
  EXPECT_EQ(names(f(OutcomeSubset::from_mask(sig.outcomes, 0b10))), (Names{"2"}));
  EXPECT_EQ(names(f(OutcomeSubset::from_mask(sig.outcomes, 0b11))), (Names{"2"}));
}

TEST(ReconstructChoiceFunction, RoundTripsATable) {
  const auto sig = numbered_signature(3, 3);
  // f picks the smallest member, except on the full set where it keeps {1, 2}
  std::vector<std::uint64_t> table(8);
  for (std::uint64_t s = 1; s < 8; ++s) table[s] = s & (~s + 1);
  table[7] = 0b110;
  const auto f0 = ChoiceFunction::table(sig.outcomes, table);
  EXPECT_TRUE(reconstruct_choice_function(choice_quantifier(f0), sig).extensionally_equal(f0));
}

TEST(ReconstructChoiceFunction, Preconditions) {
  EXPECT_EQ(error_code([] { reconstruct_choice_function(fix_quantifier(), numbered_signature(3, 3)); }),
            Errc::PreconditionViolated);
  EXPECT_EQ(error_code([] { reconstruct_choice_function(max_quantifier_numeric(), numbered_signature(2, 3)); }),
            Errc::PreconditionViolated);
  // context-independent but not a choice function: empty on singletons
  EXPECT_EQ(error_code([] { reconstruct_choice_function(second_best_quantifier(), numbered_signature(3, 3)); }),
            Errc::PreconditionViolated);
}

// Every quantifier that passes is_attainable also passes is_total, and every
// failing report's witness reproduces the violation on re-evaluation.
TEST(Reports, CrossChecksAndWitnessSoundness) {
  const std::vector<Quantifier> zoo{max_quantifier_numeric(),     averaging_quantifier(),
                                    weighted_averaging_quantifier(), second_best_quantifier(),
                                    safe_quantifier(),            ideal_move_quantifier("0", Rational(1)),
                                    honest_quantifier({"0"}),     dishonest_quantifier({"1"}, Rational(1))};
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto sig = numbered_signature(n, m);
      for (const auto& phi : zoo) {
        const auto total = is_total(phi, sig);
        const auto attainable = is_attainable(phi, sig);
        const auto strong = is_strongly_attainable(phi, sig);
        const auto independent = is_context_independent(phi, sig);
        if (attainable.holds()) EXPECT_TRUE(total.holds()) << phi.name();
        for (const auto* r : {&total, &attainable, &strong, &independent}) {
          EXPECT_EQ(r->holds(), !r->witness.has_value());
        }
        if (!total.holds()) EXPECT_TRUE(phi(std::get<ContextWitness>(*total.witness).context).empty());
        if (!attainable.holds()) {
          const auto& p = std::get<ContextWitness>(*attainable.witness).context;
          EXPECT_FALSE(phi(p).intersects(image(p)));
        }
        if (!strong.holds()) {
          const auto& p = std::get<ContextWitness>(*strong.witness).context;
          EXPECT_FALSE(phi(p).is_subset_of(image(p)));
        }
        if (!independent.holds()) {
          const auto& w = std::get<ContextPairWitness>(*independent.witness);
          EXPECT_EQ(image(w.first), image(w.second));
          EXPECT_NE(phi(w.first), phi(w.second));
        }
        if (attainable.holds()) {
          EXPECT_TRUE(attains(attainment_witness(phi, sig), phi, sig).holds()) << phi.name();
        }
      }
    }
  }
}

}  // namespace
}  // namespace hoagent
