#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hoagent/context.hpp"

namespace hoagent::testing {

inline MoveDomainPtr moves(std::initializer_list<const char*> names) {
  return make_move_domain(std::vector<Move>(names.begin(), names.end()));
}

inline OutcomeDomainPtr ints(std::initializer_list<std::int64_t> values) {
  std::vector<OutcomeValue> out;
  for (auto v : values) out.emplace_back(Rational(v));
  return make_outcome_domain(std::move(out));
}

inline OutcomeDomainPtr symbols(std::initializer_list<const char*> names) {
  std::vector<OutcomeValue> out;
  for (auto n : names) out.push_back(OutcomeValue::symbol(n));
  return make_outcome_domain(std::move(out));
}

/// Context from outcome indices in move order.
inline Context ctx(const MoveDomainPtr& x, const OutcomeDomainPtr& r, std::vector<std::size_t> assignment) {
  return Context(x, r, std::move(assignment));
}

/// Scalar context over ground `r`, listing p(x) values in move order.
inline Context scalar_ctx(const MoveDomainPtr& x, const OutcomeDomainPtr& r, std::initializer_list<std::int64_t> values) {
  std::vector<std::pair<Move, OutcomeValue>> pairs;
  std::size_t i = 0;
  for (auto v : values) pairs.emplace_back((*x)[i++], OutcomeValue(Rational(v)));
  return make_context(x, r, pairs);
}

template <class T>
std::vector<std::string> names(const Subset<T>& s) {
  std::vector<std::string> out;
  for (const auto& m : s.members()) out.push_back(display(m));
  return out;
}

using Names = std::vector<std::string>;

/// Code of the hoagent::Error thrown by f; fails the test when none is.
template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hoagent::Error thrown";
  return Errc::ValidationError;
}

}  // namespace hoagent::testing
