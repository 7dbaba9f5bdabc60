#include "demos.hpp"

#include <algorithm>

#include "commands.hpp"
#include "hoagent/agents.hpp"
#include "hoagent/orders.hpp"
#include "hoagent/reflexive.hpp"

namespace hoagent::cli {

namespace {

Context context_of(const std::vector<Move>& moves, const std::vector<OutcomeValue>& outcomes,
                   const std::vector<OutcomeValue>& values) {
  const auto x = make_move_domain(moves);
  const auto r = make_outcome_domain(outcomes);
  std::vector<std::pair<Move, OutcomeValue>> pairs;
  for (std::size_t i = 0; i < moves.size(); ++i) pairs.emplace_back(moves[i], values[i]);
  return make_context(x, r, pairs);
}

void beaches(std::ostream& out) {
  out << "A safe agent picks a highway; each highway leads to one of three beaches.\n";
  const auto b1 = OutcomeValue::symbol("b1");
  const auto b2 = OutcomeValue::symbol("b2");
  const auto b3 = OutcomeValue::symbol("b3");
  const auto p = context_of({"h1", "h2", "h3", "h4", "h5", "h6"}, {b1, b2, b3}, {b1, b2, b2, b3, b3, b3});
  out << "context: " << p.to_string() << '\n';
  out << "safe outcomes: " << safe_quantifier()(p).to_string() << '\n';
}

void wines(std::ostream& out) {
  out << "A diner always orders the second most expensive wine on the menu.\n";
  const auto p = context_of({"w1", "w2", "w3"}, {10, 20, 30}, {10, 20, 30});
  out << "context: " << p.to_string() << '\n';
  out << "second-best outcomes: " << second_best_quantifier()(p).to_string() << '\n';
}

void honest(std::ostream& out) {
  out << "Move c is illicit. The honest agent maximises over a and b only; the dishonest\n"
         "agent maximises over every move once c pays more than its threshold T.\n";
  const auto p = context_of({"a", "b", "c"}, {5, 7, 9}, {5, 7, 9});
  out << "context: " << p.to_string() << '\n';
  out << "honest outcomes: " << honest_quantifier({"a", "b"})(p).to_string() << '\n';
  for (const std::int64_t t : {8, 10}) {
    out << "dishonest T=" << t << " outcomes: " << dishonest_quantifier({"c"}, Rational(t))(p).to_string() << '\n';
  }
}

void judges(std::ostream& out) {
  out << "Three judges elect A or B by majority. Judge 0's context is induced from\n"
         "the other two votes.\n";
  const auto candidates = make_outcome_domain({OutcomeValue::symbol("A"), OutcomeValue::symbol("B")});
  const auto rule = ProfileRule::majority_vote(candidates);
  const auto ranking = PartialOrder::from_pairs(candidates, {{OutcomeValue::symbol("A"), OutcomeValue::symbol("B")}});
  for (const auto& others : std::vector<std::vector<Move>>{{"A", "B"}, {"A", "A"}}) {
    const auto p = induce_context(rule, 0, others);
    out << "others (" << others[0] << ',' << others[1] << "): context " << p.to_string() << '\n';
    out << "  utility judge (A over B) outcomes: " << voting_judge_quantifier(ranking)(p).to_string() << '\n';
    out << "  keynesian judge moves: " << keynesian_selection()(p).to_string() << '\n';
  }
}

void coordination(std::ostream& out) {
  out << "Two players pick restaurant A or B and want to end up in the same one.\n";
  const auto places = make_move_domain({"A", "B"});
  const auto rule = ProfileRule::product({places, places});
  for (const Move other : {"A", "B"}) {
    const auto p = induce_context(rule, 0, {other});
    out << "player 1 plays " << other << ": context " << p.to_string() << '\n';
    out << "  player 0 moves: " << coordinating_selection(rule, 0)(p).to_string() << '\n';
  }
}

void fixpoint(std::ostream& out) {
  out << "The fixpoint agent on X = R = {-1, 0, 1}.\n";
  const std::vector<Move> x{"-1", "0", "1"};
  const std::vector<OutcomeValue> r{-1, 0, 1};
  const auto identity = context_of(x, r, {-1, 0, 1});
  const auto negation = context_of(x, r, {1, 0, -1});
  out << "identity " << identity.to_string() << ": fix " << fix_selection()(identity).to_string() << '\n';
  out << "negation " << negation.to_string() << ": fix " << fix_selection()(negation).to_string() << '\n';
}

struct Demo {
  std::string name;
  void (*run)(std::ostream&);
};

const std::vector<Demo>& demos() {
  static const std::vector<Demo> table{{"beaches", beaches}, {"wines", wines},           {"honest", honest},
                                       {"judges", judges},   {"coordination", coordination}, {"fixpoint", fixpoint}};
  return table;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : demos()) out.push_back(d.name);
    return out;
  }();
  return names;
}

void run_demo(const std::string& name, std::ostream& out) {
  const auto it = std::find_if(demos().begin(), demos().end(), [&](const Demo& d) { return d.name == name; });
  if (it == demos().end()) throw Error(Errc::UnknownDemo, name);
  out << "demo: " << name << '\n';
  it->run(out);
}

int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err) {
  try {
    run_demo(name, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hoagent::cli
