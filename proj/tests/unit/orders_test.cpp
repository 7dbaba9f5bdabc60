#include <gtest/gtest.h>

#include <set>

#include "hoagent/orders.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace hoagent {
namespace {

using testing::error_code;
using testing::Names;
using testing::names;

const OutcomeValue r1 = OutcomeValue::symbol("r1");
const OutcomeValue r2 = OutcomeValue::symbol("r2");
const OutcomeValue r3 = OutcomeValue::symbol("r3");

TEST(MakePartialOrder, ClosureAddsReflexiveAndTransitivePairs) {
  const auto g = testing::symbols({"r1", "r2", "r3"});
  const auto ord = PartialOrder::from_pairs(g, {{r1, r2}, {r2, r3}});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(ord.geq(i, i));
  EXPECT_TRUE(ord.geq(0, 1));
  EXPECT_TRUE(ord.geq(0, 2));
  EXPECT_FALSE(ord.geq(2, 0));
  EXPECT_TRUE(ord.is_total());
}

TEST(MakePartialOrder, TwoCycleIsRejectedWithTheCycle) {
  const auto g = testing::symbols({"r1", "r2"});
  try {
    PartialOrder::from_pairs(g, {{r1, r2}, {r2, r1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AntisymmetryViolation);
    EXPECT_EQ(e.detail(), "r1 >= r2 >= r1");
  }
}

TEST(MakePartialOrder, LongerCycleIsNamed) {
  const auto g = testing::symbols({"r1", "r2", "r3"});
  try {
    PartialOrder::from_pairs(g, {{r1, r2}, {r2, r3}, {r3, r1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AntisymmetryViolation);
    EXPECT_EQ(e.detail(), "r1 >= r2 >= r3 >= r1");
  }
}

TEST(MakePartialOrder, UnknownOutcome) {
  const auto g = testing::symbols({"r1", "r2"});
  EXPECT_EQ(error_code([&] { PartialOrder::from_pairs(g, {{r1, r3}}); }), Errc::UnknownOutcome);
}

TEST(PartialOrder, FromMatrixValidates) {
  const auto g = testing::symbols({"r1", "r2", "r3"});
  // r1 >= r2 >= r3 without r1 >= r3
  std::vector<bool> rel{true, true, false, false, true, true, false, false, true};
  EXPECT_EQ(error_code([&] { PartialOrder::from_matrix(g, rel); }), Errc::InvalidOrder);
  std::vector<bool> irreflexive(9, false);
  EXPECT_EQ(error_code([&] { PartialOrder::from_matrix(g, irreflexive); }), Errc::InvalidOrder);
}

TEST(MaximalElements, Examples) {
  const auto g = testing::symbols({"r1", "r2", "r3"});
  const auto ord = PartialOrder::from_pairs(g, {{r1, r2}});
  EXPECT_EQ(names(maximal_elements(OutcomeSubset::from_members(g, {r1, r2}), ord)), (Names{"r1"}));
  // r1 is outside S, so r2 is undominated inside S
  EXPECT_EQ(names(maximal_elements(OutcomeSubset::from_members(g, {r2, r3}), ord)), (Names{"r2", "r3"}));
  EXPECT_EQ(names(maximal_elements(OutcomeSubset::from_members(g, {r2}), ord)), (Names{"r2"}));
}

TEST(MaximalElements, GroundMismatch) {
  const auto g = testing::symbols({"r1", "r2"});
  const auto other = testing::symbols({"r1", "r3"});
  const auto ord = PartialOrder::from_pairs(g, {});
  EXPECT_EQ(error_code([&] { maximal_elements(OutcomeSubset::full(other), ord); }), Errc::GroundMismatch);
}

TEST(SubMaximalElements, Examples) {
  const auto g = testing::ints({10, 20, 30});
  const auto ord = PartialOrder::numeric(g);
  EXPECT_EQ(names(sub_maximal_elements(OutcomeSubset::full(g), ord)), (Names{"20"}));
  EXPECT_EQ(names(sub_maximal_elements(OutcomeSubset::from_members(g, {OutcomeValue(10)}), ord)), Names{});
  EXPECT_EQ(names(sub_maximal_elements(OutcomeSubset::from_members(g, {OutcomeValue(10), OutcomeValue(20)}), ord)),
            (Names{"10"}));
}

// Against brute-force chain enumeration, over every poset on 4 labeled
// points and every nonempty subset.
TEST(SubMaximalElements, MatchesChainEnumerationOracle) {
  constexpr std::size_t n = 4;
  const auto g = testing::symbols({"a", "b", "c", "d"});
  const auto posets = oracle::all_posets(n);
  ASSERT_EQ(posets.size(), 219U);  // labeled posets on 4 points
  for (const auto& rel : posets) {
    const auto ord = PartialOrder::from_matrix(g, rel);
    for (std::uint64_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s.push_back(i);
      std::set<std::size_t> expected;
      for (const auto& chain : oracle::maximal_chains(rel, n, s))
        if (chain.size() >= 2) expected.insert(chain[1]);
      const auto got = sub_maximal_elements(OutcomeSubset::from_mask(g, mask), ord).indices();
      EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), expected);
    }
  }
}

// Finite antisymmetric orders always have maximal elements.
TEST(MaximalElements, NonemptyForEveryPosetAndSubset) {
  const auto g = testing::symbols({"a", "b", "c", "d"});
  for (const auto& rel : oracle::all_posets(4)) {
    const auto ord = PartialOrder::from_matrix(g, rel);
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
      const auto s = OutcomeSubset::from_mask(g, mask);
      const auto top = maximal_elements(s, ord);
      EXPECT_FALSE(top.empty());
      EXPECT_TRUE(top.is_subset_of(s));
    }
  }
}

TEST(ChoiceFunction, TableMustBeTotalAndInsideItsArgument) {
  const auto g = testing::symbols({"r1", "r2"});
  EXPECT_EQ(error_code([&] { ChoiceFunction::table(g, {0, 1, 2}); }), Errc::InvalidChoiceFunction);
  EXPECT_EQ(error_code([&] { ChoiceFunction::table(g, {0, 2, 2, 3}); }), Errc::InvalidChoiceFunction);
  EXPECT_EQ(error_code([&] { ChoiceFunction::table(g, {0, 1, 2, 0}); }), Errc::InvalidChoiceFunction);
  EXPECT_NO_THROW(ChoiceFunction::table(g, {0, 1, 2, 2}));
}

TEST(ChoiceQuantifier, Examples) {
  const auto x = testing::moves({"a", "b"});
  const auto nums = testing::ints({1, 3});
  const auto by_max = choice_quantifier(ChoiceFunction::maximal(PartialOrder::numeric(nums)));
  EXPECT_EQ(names(by_max(testing::scalar_ctx(x, nums, {1, 3}))), (Names{"3"}));

  const auto g = testing::symbols({"r1", "r2"});
  const auto identity = choice_quantifier(ChoiceFunction::table(g, {0, 1, 2, 3}));
  EXPECT_EQ(names(identity(testing::ctx(x, g, {1, 1}))), (Names{"r2"}));
  EXPECT_EQ(names(identity(testing::ctx(x, g, {0, 1}))), (Names{"r1", "r2"}));

  const auto pick_second = choice_quantifier(ChoiceFunction::table(g, {0, 1, 2, 2}));
  EXPECT_EQ(names(pick_second(testing::ctx(x, g, {0, 1}))), (Names{"r2"}));
  EXPECT_EQ(error_code([&] { pick_second(testing::scalar_ctx(x, nums, {1, 3})); }), Errc::SignatureMismatch);
}

TEST(OrderSelection, TotalOrderCoincidesWithArgmax) {
  const auto x = testing::moves({"a", "b", "c"});
  const auto r = testing::ints({1, 3});
  const auto eps = order_selection(PartialOrder::numeric(r));
  EXPECT_EQ(names(eps(testing::scalar_ctx(x, r, {1, 3, 3}))), (Names{"b", "c"}));
}

TEST(OrderSelection, IncompleteOrder) {
  const auto g = testing::symbols({"r1", "r2", "r3"});
  const auto eps = order_selection(PartialOrder::from_pairs(g, {{r1, r2}}));
  const auto x = testing::moves({"a", "b"});
  // r1 is not attainable and r3 is incomparable: nothing beats either move
  EXPECT_EQ(names(eps(testing::ctx(x, g, {1, 2}))), (Names{"a", "b"}));
  // r1 attainable and strictly above r2
  EXPECT_EQ(names(eps(testing::ctx(x, g, {0, 1}))), (Names{"a"}));
}

TEST(MaxArgmax, Examples) {
  const auto x = testing::moves({"a", "b", "c"});
  const auto r = testing::ints({1, 2, 3});
  const auto phi = max_quantifier_numeric();
  const auto eps = argmax_selection_numeric();
  EXPECT_EQ(names(phi(testing::scalar_ctx(x, r, {1, 3, 3}))), (Names{"3"}));
  EXPECT_EQ(names(eps(testing::scalar_ctx(x, r, {1, 3, 3}))), (Names{"b", "c"}));
  EXPECT_EQ(names(phi(testing::scalar_ctx(x, r, {2, 2, 2}))), (Names{"2"}));
  EXPECT_EQ(names(eps(testing::scalar_ctx(x, r, {2, 2, 2}))), (Names{"a", "b", "c"}));
  const auto one = testing::moves({"a"});
  EXPECT_EQ(names(phi(testing::scalar_ctx(one, r, {2}))), (Names{"2"}));
  EXPECT_EQ(names(eps(testing::scalar_ctx(one, r, {2}))), (Names{"a"}));
}

TEST(MaxArgmax, SymbolicOutcomesAreRejected) {
  const auto x = testing::moves({"a"});
  const auto g = testing::symbols({"r1"});
  EXPECT_EQ(error_code([&] { max_quantifier_numeric()(testing::ctx(x, g, {0})); }), Errc::NonNumericOutcomes);
  EXPECT_EQ(error_code([&] { argmax_selection_numeric()(testing::ctx(x, g, {0})); }), Errc::NonNumericOutcomes);
  EXPECT_EQ(error_code([&] { PartialOrder::numeric(g); }), Errc::NonNumericOutcomes);
}

}  // namespace
}  // namespace hoagent
