#include "cnct/subset.hpp"

#include <ostream>

#include "cnct/error.hpp"

namespace cnct {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxSize) {
    throw Error(ErrorKind::InvalidGround,
                "ground set size must lie in [1, 16], got " + std::to_string(n));
  }
}

Subset Subset::of(std::initializer_list<int> indices) {
  return from_indices(std::vector<int>(indices));
}

Subset Subset::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > GroundSet::kMaxSize) {
      throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " outside [1, 16]");
    }
    bits |= std::uint32_t{1} << (i - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_index(*this, [&](int i) { out.push_back(i); });
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_index(*this, [&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, Subset s) { return os << s.to_string(); }

}  // namespace cnct
