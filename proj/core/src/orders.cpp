#include "hoagent/orders.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hoagent {

namespace {

// Shortest path from `from` to `to` in the directed graph `adj`, endpoints included.
std::vector<std::size_t> find_path(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                   std::size_t to) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(adj.size(), none);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (auto v : adj[u]) {
      if (parent[v] == none) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> path;
  if (parent[to] == none) return path;
  for (auto v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string describe_cycle(const OutcomeDomain& ground, const std::vector<std::size_t>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " >= ";
    out += ground[cycle[i]].to_string();
  }
  return out;
}

void require_ground(const OutcomeSubset& s, const OutcomeDomainPtr& ground) {
  if (!same_domain(s.ground(), ground)) throw Error(Errc::GroundMismatch, "set is not over the order's ground");
}

}  // namespace

PartialOrder PartialOrder::from_index_pairs(OutcomeDomainPtr ground,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = ground->size();
  std::vector<bool> rel(n * n, false);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(Errc::UnknownOutcome, "index out of range");
    rel[a * n + b] = true;
    if (a != b) adj[a].push_back(b);
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rel[a * n + b] && rel[b * n + a]) {
        auto cycle = find_path(adj, a, b);
        const auto back = find_path(adj, b, a);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        throw Error(Errc::AntisymmetryViolation, describe_cycle(*ground, cycle));
      }
    }
  }
  return PartialOrder(std::move(ground), std::move(rel));
}

PartialOrder PartialOrder::from_pairs(OutcomeDomainPtr ground,
                                      const std::vector<std::pair<OutcomeValue, OutcomeValue>>& pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const auto ia = ground->index_of(a);
    if (!ia) throw Error(Errc::UnknownOutcome, a.to_string());
    const auto ib = ground->index_of(b);
    if (!ib) throw Error(Errc::UnknownOutcome, b.to_string());
    indexed.emplace_back(*ia, *ib);
  }
  return from_index_pairs(std::move(ground), indexed);
}

PartialOrder PartialOrder::from_matrix(OutcomeDomainPtr ground, std::vector<bool> rel) {
  const std::size_t n = ground->size();
  if (rel.size() != n * n) throw Error(Errc::InvalidOrder, "relation matrix has the wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a * n + a]) throw Error(Errc::InvalidOrder, "not reflexive at " + (*ground)[a].to_string());
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a * n + b] && rel[b * n + a]) {
        throw Error(Errc::AntisymmetryViolation, describe_cycle(*ground, {a, b, a}));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) {
          throw Error(Errc::InvalidOrder, "not transitive at " + describe_cycle(*ground, {a, b, c}));
        }
      }
    }
  }
  return PartialOrder(std::move(ground), std::move(rel));
}

PartialOrder PartialOrder::numeric(OutcomeDomainPtr ground) {
  require_scalar(*ground, "numeric order");
  const std::size_t n = ground->size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = (*ground)[a].as_scalar() >= (*ground)[b].as_scalar();
  }
  return PartialOrder(std::move(ground), std::move(rel));
}

bool PartialOrder::is_total() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!comparable(a, b)) return false;
    }
  }
  return true;
}

OutcomeSubset maximal_elements(const OutcomeSubset& s, const PartialOrder& ord) {
  require_ground(s, ord.ground());
  const auto members = s.indices();
  OutcomeSubset out(s.ground());
  for (auto cand : members) {
    const bool dominated =
        std::any_of(members.begin(), members.end(), [&](std::size_t t) { return ord.greater(t, cand); });
    if (!dominated) out.insert(cand);
  }
  return out;
}

OutcomeSubset sub_maximal_elements(const OutcomeSubset& s, const PartialOrder& ord) {
  require_ground(s, ord.ground());
  const auto members = s.indices();
  const auto tops = maximal_elements(s, ord).indices();
  OutcomeSubset out(s.ground());
  for (auto top : tops) {
    for (auto c : members) {
      if (!ord.greater(top, c)) continue;
      const bool covered = std::none_of(members.begin(), members.end(), [&](std::size_t mid) {
        return ord.greater(top, mid) && ord.greater(mid, c);
      });
      if (covered) out.insert(c);
    }
  }
  return out;
}

ChoiceFunction ChoiceFunction::maximal(PartialOrder ord) {
  auto ground = ord.ground();
  return ChoiceFunction(std::move(ground), std::make_shared<const PartialOrder>(std::move(ord)), nullptr);
}

ChoiceFunction ChoiceFunction::table(OutcomeDomainPtr ground, std::vector<std::uint64_t> table) {
  const std::size_t n = ground->size();
  if (n > kMaxChoiceTableGround) {
    throw Error(Errc::InvalidChoiceFunction, "ground set of " + std::to_string(n) + " elements is too large for a table");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (table.size() != subsets) {
    throw Error(Errc::InvalidChoiceFunction,
                "table defines " + std::to_string(table.size()) + " entries, expected " + std::to_string(subsets));
  }
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const auto f = table[s];
    if ((f & ~s) != 0) {
      throw Error(Errc::InvalidChoiceFunction, "f(" + OutcomeSubset::from_mask(ground, s).to_string() + ") = " +
                                                   OutcomeSubset::from_mask(ground, f).to_string() + " is not a subset");
    }
    if (f == 0) {
      throw Error(Errc::InvalidChoiceFunction, "f(" + OutcomeSubset::from_mask(ground, s).to_string() + ") is empty");
    }
  }
  table[0] = 0;
  return ChoiceFunction(std::move(ground), nullptr, std::make_shared<const std::vector<std::uint64_t>>(std::move(table)));
}

OutcomeSubset ChoiceFunction::operator()(const OutcomeSubset& s) const {
  require_ground(s, ground_);
  if (order_) return maximal_elements(s, *order_);
  return OutcomeSubset::from_mask(s.ground(), (*table_)[s.mask()]);
}

bool ChoiceFunction::extensionally_equal(const ChoiceFunction& other) const {
  if (!same_domain(ground_, other.ground_)) return false;
  const std::size_t n = ground_->size();
  if (n > kMaxChoiceTableGround) throw Error(Errc::InvalidChoiceFunction, "ground set too large to compare");
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const auto subset = OutcomeSubset::from_mask(ground_, s);
    if (!((*this)(subset) == other(subset))) return false;
  }
  return true;
}

Quantifier choice_quantifier(ChoiceFunction f) {
  std::string name = f.is_table() ? "choice-table" : "order-max";
  return Quantifier(std::move(name), [f = std::move(f)](const Context& p) {
    if (!same_domain(p.outcomes(), f.ground())) {
      throw Error(Errc::SignatureMismatch, "context codomain differs from the choice function's ground set");
    }
    return f(image(p));
  });
}

SelectionFunction order_selection(PartialOrder ord) {
  return SelectionFunction("order-selection", [ord = std::move(ord)](const Context& p) {
    if (!same_domain(p.outcomes(), ord.ground())) {
      throw Error(Errc::SignatureMismatch, "context codomain differs from the order's ground set");
    }
    const auto attained = image(p).indices();
    MoveSubset out(p.moves());
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto px = p.outcome_index(x);
      const bool beaten =
          std::any_of(attained.begin(), attained.end(), [&](std::size_t r) { return ord.greater(r, px); });
      if (!beaten) out.insert(x);
    }
    return out;
  });
}

namespace {

Rational greatest_value(const Context& p) {
  Rational best = p(0).as_scalar();
  for (std::size_t x = 1; x < p.size(); ++x) best = std::max(best, p(x).as_scalar());
  return best;
}

}  // namespace

Quantifier max_quantifier_numeric() {
  return Quantifier("max", [](const Context& p) {
    require_scalar(*p.outcomes(), "max");
    const auto best = greatest_value(p);
    OutcomeSubset out(p.outcomes());
    out.insert(*p.outcomes()->index_of(OutcomeValue(best)));
    return out;
  });
}

SelectionFunction argmax_selection_numeric() {
  return SelectionFunction("argmax", [](const Context& p) {
    require_scalar(*p.outcomes(), "argmax");
    const auto best = greatest_value(p);
    MoveSubset out(p.moves());
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p(x).as_scalar() == best) out.insert(x);
    }
    return out;
  });
}

}  // namespace hoagent
