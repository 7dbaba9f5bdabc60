#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hoagent/context.hpp"

namespace hoagent {

/// A higher-order function from contexts to subsets of either the outcome
/// set (a quantifier) or the move set (a selection function).
///
/// Two realizations share this type: a builtin, which wraps a pure
/// evaluation rule, and a table, which stores one result per context of a
/// fixed signature. Both are immutable and safe to evaluate concurrently.
template <class Element>
class ContextFunctional {
 public:
  using Result = Subset<Element>;
  using Rule = std::function<Result(const Context&)>;

  ContextFunctional(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  /// Table over every context of `sig`, indexed by context_rank. Throws
  /// SignatureMismatch when the table is incomplete or an entry has the
  /// wrong ground set.
  static ContextFunctional table(std::string name, Signature sig, std::vector<Result> entries) {
    if (entries.size() != context_count(sig)) {
      throw Error(Errc::SignatureMismatch, "table for " + name + " has " + std::to_string(entries.size()) +
                                               " entries, expected " + std::to_string(context_count(sig)));
    }
    for (const auto& e : entries) {
      if (!same_domain(e.ground(), result_ground(sig))) {
        throw Error(Errc::SignatureMismatch, "table entry for " + name + " is over a different ground set");
      }
    }
    auto shared = std::make_shared<const std::vector<Result>>(std::move(entries));
    auto fn_name = name;
    ContextFunctional f(std::move(name), [sig, shared, fn_name](const Context& p) {
      if (!(p.signature() == sig)) throw Error(Errc::SignatureMismatch, "context does not match table " + fn_name);
      return (*shared)[context_rank(p)];
    });
    f.signature_ = std::make_shared<const Signature>(std::move(sig));
    return f;
  }

  /// Evaluates the rule; the result is always over the matching ground of p.
  Result operator()(const Context& p) const {
    Result r = rule_(p);
    if (!same_domain(r.ground(), result_ground(p.signature()))) {
      throw Error(Errc::SignatureMismatch, name_ + " returned a set over a foreign ground");
    }
    return r;
  }

  const std::string& name() const noexcept { return name_; }
  bool is_table() const noexcept { return signature_ != nullptr; }
  /// Fixed signature of a table, null for builtins.
  const Signature* table_signature() const noexcept { return signature_.get(); }

 private:
  static auto result_ground(const Signature& sig) {
    if constexpr (std::is_same_v<Element, Move>) {
      return sig.moves;
    } else {
      return sig.outcomes;
    }
  }

  std::string name_;
  Rule rule_;
  std::shared_ptr<const Signature> signature_;
};

using Quantifier = ContextFunctional<OutcomeValue>;
using SelectionFunction = ContextFunctional<Move>;

inline OutcomeSubset eval_quantifier(const Quantifier& phi, const Context& p) { return phi(p); }
inline MoveSubset eval_selection(const SelectionFunction& eps, const Context& p) { return eps(p); }


}  // namespace hoagent
