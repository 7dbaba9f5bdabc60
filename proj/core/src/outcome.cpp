#include "hoagent/outcome.hpp"

#include <ostream>

#include "hoagent/error.hpp"

namespace hoagent {

std::string_view to_string(OutcomeKind kind) noexcept {
  switch (kind) {
    case OutcomeKind::symbol: return "symbol";
    case OutcomeKind::scalar: return "scalar";
    case OutcomeKind::vector: return "vector";
  }
  return "unknown";
}

std::size_t OutcomeValue::dimension() const noexcept {
  switch (kind()) {
    case OutcomeKind::symbol: return 0;
    case OutcomeKind::scalar: return 1;
    case OutcomeKind::vector: return as_vector().size();
  }
  return 0;
}

std::string OutcomeValue::to_string() const {
  switch (kind()) {
    case OutcomeKind::symbol: return as_symbol().name;
    case OutcomeKind::scalar: return as_scalar().to_string();
    case OutcomeKind::vector: {
      std::string out = "(";
      const auto& v = as_vector();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const OutcomeValue& v) { return os << v.to_string(); }

Rational squared_distance(const OutcomeValue& a, const OutcomeValue& b) {
  if (a.kind() == OutcomeKind::scalar && b.kind() == OutcomeKind::scalar) {
    const Rational d = a.as_scalar() - b.as_scalar();
    return d * d;
  }
  if (a.kind() == OutcomeKind::vector && b.kind() == OutcomeKind::vector &&
      a.dimension() == b.dimension()) {
    Rational sum;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      const Rational d = a.as_vector()[i] - b.as_vector()[i];
      sum += d * d;
    }
    return sum;
  }
  throw Error(Errc::NonNumericOutcomes,
              "no distance between " + a.to_string() + " and " + b.to_string());
}

}  // namespace hoagent

std::size_t std::hash<hoagent::OutcomeValue>::operator()(const hoagent::OutcomeValue& v) const noexcept {
  using hoagent::OutcomeKind;
  std::size_t seed = static_cast<std::size_t>(v.kind());
  auto mix = [&seed](std::size_t h) { seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  switch (v.kind()) {
    case OutcomeKind::symbol: mix(std::hash<std::string>{}(v.as_symbol().name)); break;
    case OutcomeKind::scalar: mix(std::hash<hoagent::Rational>{}(v.as_scalar())); break;
    case OutcomeKind::vector:
      for (const auto& r : v.as_vector()) mix(std::hash<hoagent::Rational>{}(r));
      break;
  }
  return seed;
}
