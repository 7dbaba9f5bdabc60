#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hoagent {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Numerator and denominator are 64-bit; intermediate products are computed
/// in 128 bits and any result that does not fit after reduction throws
/// std::overflow_error. Nothing here ever rounds.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "n", "-n" and "n/d" (d may not be zero).
  static Rational parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// "3", "-1/2".
  std::string to_string() const;

 private:
  static Rational from_wide(detail::wide_int num, detail::wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hoagent

template <>
struct std::hash<hoagent::Rational> {
  std::size_t operator()(const hoagent::Rational& r) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(r.numerator());
    const auto h2 = std::hash<std::int64_t>{}(r.denominator());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
