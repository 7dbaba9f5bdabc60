#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <type_traits>
#include <string>
#include <vector>

#include "hoagent/domain.hpp"

namespace hoagent {

/// Extensional subset of a finite ground set, always read back in ground
/// order.
template <class T>
class Subset {
 public:
  using Ground = FiniteDomain<T>;
  using GroundPtr = std::shared_ptr<const Ground>;

  explicit Subset(GroundPtr ground) : ground_(std::move(ground)), bits_(ground_->size(), false) {}

  static Subset full(GroundPtr ground) {
    Subset s(std::move(ground));
    s.bits_.assign(s.bits_.size(), true);
    return s;
  }

  static Subset from_indices(GroundPtr ground, const std::vector<std::size_t>& indices) {
    Subset s(std::move(ground));
    for (auto i : indices) s.insert(i);
    return s;
  }

  /// Throws UnknownOutcome / UnknownMove when a member is outside the ground.
  static Subset from_members(GroundPtr ground, const std::vector<T>& members) {
    Subset s(std::move(ground));
    for (const auto& m : members) {
      const auto idx = s.ground_->index_of(m);
      if (!idx) throw Error(unknown_code(), display(m));
      s.bits_[*idx] = true;
    }
    return s;
  }

  static Subset from_mask(GroundPtr ground, std::uint64_t mask) {
    Subset s(std::move(ground));
    for (std::size_t i = 0; i < s.bits_.size() && i < 64; ++i) s.bits_[i] = (mask >> i) & 1U;
    return s;
  }

  const GroundPtr& ground() const noexcept { return ground_; }

  void insert(std::size_t index) {
    if (index >= bits_.size()) throw Error(unknown_code(), "index " + std::to_string(index));
    bits_[index] = true;
  }
  bool contains(std::size_t index) const { return index < bits_.size() && bits_[index]; }
  bool contains(const T& value) const {
    const auto idx = ground_->index_of(value);
    return idx && bits_[*idx];
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  bool empty() const {
    for (bool b : bits_) {
      if (b) return false;
    }
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(i);
    }
    return out;
  }

  std::vector<T> members() const {
    std::vector<T> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back((*ground_)[i]);
    }
    return out;
  }

  const std::vector<bool>& bits() const noexcept { return bits_; }

  /// Bit i set iff ground element i is a member; ground must have ≤ 64 elements.
  std::uint64_t mask() const {
    if (bits_.size() > 64) throw Error(Errc::GroundMismatch, "ground set too large for a mask");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  bool is_subset_of(const Subset& other) const {
    require_same_ground(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
  }

  bool intersects(const Subset& other) const {
    require_same_ground(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && other.bits_[i]) return true;
    }
    return false;
  }

  /// "[a, b]"; "[]" when empty.
  std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (!bits_[i]) continue;
      if (!first) out += ", ";
      out += display((*ground_)[i]);
      first = false;
    }
    return out + "]";
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && same_domain(a.ground_, b.ground_);
  }

 private:
  static constexpr Errc unknown_code() {
    if constexpr (std::is_same_v<T, Move>) {
      return Errc::UnknownMove;
    } else {
      return Errc::UnknownOutcome;
    }
  }

  void require_same_ground(const Subset& other) const {
    if (!same_domain(ground_, other.ground_)) throw Error(Errc::GroundMismatch, "subsets over different ground sets");
  }

  GroundPtr ground_;
  std::vector<bool> bits_;
};

using OutcomeSubset = Subset<OutcomeValue>;
using MoveSubset = Subset<Move>;

}  // namespace hoagent
