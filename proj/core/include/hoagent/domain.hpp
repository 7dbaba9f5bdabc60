#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hoagent/error.hpp"
#include "hoagent/outcome.hpp"

namespace hoagent {

using Move = std::string;

inline std::string display(const Move& m) { return m; }
inline std::string display(const OutcomeValue& v) { return v.to_string(); }

/// Ordered set of distinct elements. Construction order is the canonical
/// order for every set emitted over this domain.
template <class T>
class FiniteDomain {
 public:
  explicit FiniteDomain(std::vector<T> elements) : elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second) {
        throw Error(Errc::DuplicateElement, display(elements_[i]));
      }
    }
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const T& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<T>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::optional<std::size_t> index_of(const T& value) const {
    const auto it = index_.find(value);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const T& value) const { return index_.contains(value); }

  friend bool operator==(const FiniteDomain& a, const FiniteDomain& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<T> elements_;
  std::unordered_map<T, std::size_t> index_;
};

using MoveDomain = FiniteDomain<Move>;
using OutcomeDomain = FiniteDomain<OutcomeValue>;
using MoveDomainPtr = std::shared_ptr<const MoveDomain>;
using OutcomeDomainPtr = std::shared_ptr<const OutcomeDomain>;

/// Nonempty move set X.
MoveDomainPtr make_move_domain(std::vector<Move> moves);

/// Nonempty outcome ground set R; all elements share one kind (and, for
/// vectors, one length).
OutcomeDomainPtr make_outcome_domain(std::vector<OutcomeValue> outcomes);

OutcomeKind outcome_kind(const OutcomeDomain& ground);

/// Throws NonNumericOutcomes unless the ground set is scalar.
void require_scalar(const OutcomeDomain& ground, std::string_view who);

template <class T>
bool same_domain(const std::shared_ptr<const FiniteDomain<T>>& a,
                 const std::shared_ptr<const FiniteDomain<T>>& b) {
  return a == b || (a && b && *a == *b);
}

/// True when X and R coincide element-wise: |X| = |R| and the i-th move is
/// spelled like the i-th outcome.
bool moves_equal_outcomes(const MoveDomain& moves, const OutcomeDomain& outcomes);

}  // namespace hoagent
