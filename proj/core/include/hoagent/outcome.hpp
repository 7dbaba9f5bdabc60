#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hoagent/rational.hpp"

namespace hoagent {

/// Opaque outcome atom such as a beach or a contestant.
struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using RationalVector = std::vector<Rational>;

enum class OutcomeKind { symbol, scalar, vector };

std::string_view to_string(OutcomeKind kind) noexcept;

/// An element of an outcome ground set: a symbol, an exact scalar, or a
/// fixed-length tuple of exact scalars.
class OutcomeValue {
 public:
  OutcomeValue(Symbol s) : value_(std::move(s)) {}            // NOLINT
  OutcomeValue(Rational r) : value_(r) {}                     // NOLINT
  OutcomeValue(RationalVector v) : value_(std::move(v)) {}    // NOLINT
  OutcomeValue(std::int64_t v) : value_(Rational(v)) {}       // NOLINT
  OutcomeValue(int v) : value_(Rational(v)) {}                // NOLINT

  static OutcomeValue symbol(std::string name) { return OutcomeValue(Symbol{std::move(name)}); }

  OutcomeKind kind() const noexcept { return static_cast<OutcomeKind>(value_.index()); }
  bool is_scalar() const noexcept { return kind() == OutcomeKind::scalar; }

  const Symbol& as_symbol() const { return std::get<Symbol>(value_); }
  const Rational& as_scalar() const { return std::get<Rational>(value_); }
  const RationalVector& as_vector() const { return std::get<RationalVector>(value_); }

  /// Vector length, 1 for scalars, 0 for symbols.
  std::size_t dimension() const noexcept;

  /// Canonical text: symbol name, "3/2", or "(0,1/2)". Moves are identified
  /// with outcomes through this text when a problem has X = R.
  std::string to_string() const;

  friend bool operator==(const OutcomeValue&, const OutcomeValue&) = default;

 private:
  std::variant<Symbol, Rational, RationalVector> value_;
};

std::ostream& operator<<(std::ostream& os, const OutcomeValue& v);

/// Exact squared Euclidean distance; scalars are treated as 1-vectors.
Rational squared_distance(const OutcomeValue& a, const OutcomeValue& b);

}  // namespace hoagent

template <>
struct std::hash<hoagent::OutcomeValue> {
  std::size_t operator()(const hoagent::OutcomeValue& v) const noexcept;
};
