#include "hoagent/agents.hpp"

#include <algorithm>
#include <optional>

#include "hoagent/orders.hpp"

namespace hoagent {

namespace {

// Members of Im(p) at minimal distance from `target`; ties kept.
OutcomeSubset closest_attained(const Context& p, const Rational& target) {
  const auto attained = image(p).indices();
  std::optional<Rational> best;
  for (auto r : attained) {
    const Rational d = abs((*p.outcomes())[r].as_scalar() - target);
    if (!best || d < *best) best = d;
  }
  OutcomeSubset out(p.outcomes());
  for (auto r : attained) {
    if (abs((*p.outcomes())[r].as_scalar() - target) == *best) out.insert(r);
  }
  return out;
}

std::size_t resolve_move(const Context& p, const Move& m) {
  const auto idx = p.moves()->index_of(m);
  if (!idx) throw Error(Errc::UnknownMove, m);
  return *idx;
}

// Numeric maxima of p over the given moves; `moves` must be nonempty.
OutcomeSubset max_over(const Context& p, const std::vector<std::size_t>& moves) {
  Rational best = p(moves.front()).as_scalar();
  for (auto x : moves) best = std::max(best, p(x).as_scalar());
  OutcomeSubset out(p.outcomes());
  out.insert(*p.outcomes()->index_of(OutcomeValue(best)));
  return out;
}

}  // namespace

Quantifier averaging_quantifier() {
  return Quantifier("averaging", [](const Context& p) {
    require_scalar(*p.outcomes(), "averaging");
    const auto attained = image(p).indices();
    Rational sum;
    for (auto r : attained) sum += (*p.outcomes())[r].as_scalar();
    return closest_attained(p, sum / Rational(static_cast<std::int64_t>(attained.size())));
  });
}

Quantifier weighted_averaging_quantifier() {
  return Quantifier("weighted-averaging", [](const Context& p) {
    require_scalar(*p.outcomes(), "weighted-averaging");
    Rational sum;
    for (std::size_t x = 0; x < p.size(); ++x) sum += p(x).as_scalar();
    return closest_attained(p, sum / Rational(static_cast<std::int64_t>(p.size())));
  });
}

Quantifier ideal_move_quantifier(Move ideal, Rational radius) {
  if (radius < Rational(0)) throw Error(Errc::NegativeRadius, radius.to_string());
  const Rational radius_sq = radius * radius;
  return Quantifier("ideal-move", [ideal = std::move(ideal), radius_sq](const Context& p) {
    if (outcome_kind(*p.outcomes()) == OutcomeKind::symbol) {
      throw Error(Errc::NonNumericOutcomes, "ideal-move needs scalar or vector outcomes");
    }
    const auto& centre = p(resolve_move(p, ideal));
    OutcomeSubset out(p.outcomes());
    for (std::size_t w = 0; w < p.outcomes()->size(); ++w) {
      if (squared_distance(centre, (*p.outcomes())[w]) <= radius_sq) out.insert(w);
    }
    return out;
  });
}

SelectionFunction ideal_move_selection(Move ideal) {
  return SelectionFunction("ideal-move", [ideal = std::move(ideal)](const Context& p) {
    MoveSubset out(p.moves());
    out.insert(resolve_move(p, ideal));
    return out;
  });
}

Quantifier second_best_quantifier() {
  return Quantifier("second-best", [](const Context& p) {
    // the order is rebuilt per ground; contexts from one enumeration share it
    return sub_maximal_elements(image(p), PartialOrder::numeric(p.outcomes()));
  });
}

Quantifier honest_quantifier(std::vector<Move> permissible) {
  if (permissible.empty()) throw Error(Errc::EmptyPermissibleSet, "honest agent has no permissible move");
  return Quantifier("honest", [permissible = std::move(permissible)](const Context& p) {
    require_scalar(*p.outcomes(), "honest");
    std::vector<std::size_t> moves;
    for (const auto& m : permissible) moves.push_back(resolve_move(p, m));
    return max_over(p, moves);
  });
}

Quantifier dishonest_quantifier(std::vector<Move> illicit, Rational threshold) {
  return Quantifier("dishonest", [illicit = std::move(illicit), threshold](const Context& p) {
    require_scalar(*p.outcomes(), "dishonest");
    std::vector<bool> is_illicit(p.size(), false);
    std::optional<Rational> best_illicit;
    for (const auto& m : illicit) {
      const auto x = resolve_move(p, m);
      is_illicit[x] = true;
      const auto v = p(x).as_scalar();
      if (!best_illicit || v > *best_illicit) best_illicit = v;
    }
    std::vector<std::size_t> all(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) all[x] = x;
    // an empty illicit set never triggers the threshold branch
    if (best_illicit && *best_illicit > threshold) return max_over(p, all);
    std::vector<std::size_t> permissible;
    for (auto x : all) {
      if (!is_illicit[x]) permissible.push_back(x);
    }
    if (permissible.empty()) {
      throw Error(Errc::EmptyPermissibleSet, "every move is illicit and the threshold was not exceeded");
    }
    return max_over(p, permissible);
  });
}

Quantifier safe_quantifier() {
  return Quantifier("safe", [](const Context& p) {
    std::vector<std::size_t> counts(p.outcomes()->size(), 0);
    for (auto r : p.assignment()) ++counts[r];
    const auto most = *std::max_element(counts.begin(), counts.end());
    OutcomeSubset out(p.outcomes());
    for (std::size_t r = 0; r < counts.size(); ++r) {
      if (counts[r] == most) out.insert(r);
    }
    return out;
  });
}

SelectionFunction constant_selection(std::vector<Move> moves) {
  return SelectionFunction("constant", [moves = std::move(moves)](const Context& p) {
    MoveSubset out(p.moves());
    for (const auto& m : moves) out.insert(resolve_move(p, m));
    return out;
  });
}

std::string agent_kind_name(const AgentSpec& spec) {
  struct Visitor {
    std::string operator()(const agent::Averaging&) const { return "averaging"; }
    std::string operator()(const agent::WeightedAveraging&) const { return "weighted-averaging"; }
    std::string operator()(const agent::IdealMove&) const { return "ideal-move"; }
    std::string operator()(const agent::SecondBest&) const { return "second-best"; }
    std::string operator()(const agent::Honest&) const { return "honest"; }
    std::string operator()(const agent::Dishonest&) const { return "dishonest"; }
    std::string operator()(const agent::Safe&) const { return "safe"; }
  };
  return std::visit(Visitor{}, spec);
}

Quantifier make_quantifier(const AgentSpec& spec) {
  struct Visitor {
    Quantifier operator()(const agent::Averaging&) const { return averaging_quantifier(); }
    Quantifier operator()(const agent::WeightedAveraging&) const { return weighted_averaging_quantifier(); }
    Quantifier operator()(const agent::IdealMove& s) const { return ideal_move_quantifier(s.ideal, s.radius); }
    Quantifier operator()(const agent::SecondBest&) const { return second_best_quantifier(); }
    Quantifier operator()(const agent::Honest& s) const { return honest_quantifier(s.permissible); }
    Quantifier operator()(const agent::Dishonest& s) const { return dishonest_quantifier(s.illicit, s.threshold); }
    Quantifier operator()(const agent::Safe&) const { return safe_quantifier(); }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace hoagent
