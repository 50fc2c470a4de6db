#pragma once

#include <span>
#include <vector>

#include "cnct/subset.hpp"

namespace cnct {

// Unordered pair of disjoint nonempty blocks. The block holding the smallest
// element of the domain is always stored first, so swapped constructions
// compare equal.
class Dissociation {
 public:
  // Throws Error(OutOfRange) when a block is empty or the blocks overlap.
  Dissociation(Subset a, Subset b);

  Subset first() const noexcept { return first_; }
  Subset second() const noexcept { return second_; }
  Subset domain() const noexcept { return first_ | second_; }

  friend bool operator==(const Dissociation&, const Dissociation&) = default;

  std::string to_string() const;

 private:
  Subset first_;
  Subset second_;
};

// A contests sigma: A lies in the domain and meets both blocks.
bool contests(Subset a, const Dissociation& sigma) noexcept;

// Some member of the family contests sigma. The negation reads "the family
// respects sigma".
bool family_contests(std::span<const Subset> family, const Dissociation& sigma) noexcept;

// The trace of sigma on l. Requires contests(l, sigma), otherwise throws
// Error(NotOverlapping).
Dissociation restrict_dissociation(const Dissociation& sigma, Subset l);

// All 2^{|j|-1} - 1 dissociations of j, ordered by the bitmask of the block
// containing min(j). Empty when |j| <= 1.
std::vector<Dissociation> enumerate_dissociations(Subset j);

// Visits the dissociations of j in the same order without materializing them;
// stops early when fn returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_dissociation(Subset j, Fn&& fn) {
  if (j.size() < 2) return true;
  const Subset low = Subset::singleton(j.min_element());
  const Subset rest = j - low;
  // The low block is {min} plus a proper subset of the rest.
  std::uint32_t sub = 0;
  const std::uint32_t m = rest.bits();
  while (sub != m) {
    const Subset first = low | Subset(sub);
    if (!fn(Dissociation(first, j - first))) return false;
    sub = (sub - m) & m;
  }
  return true;
}

}  // namespace cnct
