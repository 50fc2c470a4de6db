#pragma once

#include <bit>
#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace cnct {

// Cardinality of the index set I = {1, ..., n}.
class GroundSet {
 public:
  static constexpr int kMaxSize = 16;

  explicit GroundSet(int n);

  int size() const noexcept { return n_; }
  // Bitmask of the whole of I.
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n_) - 1; }
  // Number of subsets of I.
  std::uint32_t subset_count() const noexcept { return std::uint32_t{1} << n_; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

// A subset of I stored as a bitmask: bit i-1 is set iff i belongs to it.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  // Builds a subset from 1-based indices.
  static Subset of(std::initializer_list<int> indices);
  static Subset from_indices(const std::vector<int>& indices);
  static constexpr Subset singleton(int index) { return Subset(std::uint32_t{1} << (index - 1)); }
  static Subset whole(GroundSet ground) { return Subset(ground.full_mask()); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int index) const noexcept { return (bits_ >> (index - 1)) & 1U; }
  constexpr bool includes(Subset other) const noexcept { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(Subset other) const noexcept { return (bits_ & other.bits_) != 0; }
  bool within(GroundSet ground) const noexcept { return (bits_ & ~ground.full_mask()) == 0; }
  // Smallest index, 0 for the empty set.
  constexpr int min_element() const noexcept { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  // Largest index, 0 for the empty set.
  constexpr int max_element() const noexcept { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

  Subset complement(GroundSet ground) const noexcept {
    return Subset(~bits_ & ground.full_mask());
  }
  constexpr Subset without(int index) const noexcept {
    return Subset(bits_ & ~(std::uint32_t{1} << (index - 1)));
  }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;

  // 1-based indices in increasing order.
  std::vector<int> indices() const;
  // "{1,2,3}" style rendering for diagnostics.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, Subset s);

// Canonical order: cardinality first, then bitmask value.
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const noexcept {
    const int sa = a.size();
    const int sb = b.size();
    return sa != sb ? sa < sb : a.bits() < b.bits();
  }
};

// Calls fn(Subset) for every subset of `mask`, including the empty set and
// `mask` itself, in increasing bitmask order.
template <typename Fn>
void for_each_subset_of(Subset mask, Fn&& fn) {
  std::uint32_t sub = 0;
  const std::uint32_t m = mask.bits();
  while (true) {
    fn(Subset(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// Calls fn(int) for each 1-based index of `s` in increasing order.
template <typename Fn>
void for_each_index(Subset s, Fn&& fn) {
  for (std::uint32_t bits = s.bits(); bits != 0; bits &= bits - 1) {
    fn(std::countr_zero(bits) + 1);
  }
}

}  // namespace cnct
