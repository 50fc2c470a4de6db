#include "cnct/dissociation.hpp"

#include <algorithm>

#include "cnct/error.hpp"

namespace cnct {

Dissociation::Dissociation(Subset a, Subset b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::OutOfRange, "dissociation blocks must be nonempty");
  }
  if (a.intersects(b)) {
    throw Error(ErrorKind::OutOfRange,
                "dissociation blocks " + a.to_string() + " and " + b.to_string() + " overlap");
  }
  if (a.min_element() < b.min_element()) {
    first_ = a;
    second_ = b;
  } else {
    first_ = b;
    second_ = a;
  }
}

std::string Dissociation::to_string() const {
  return "(" + first_.to_string() + "," + second_.to_string() + ")";
}

bool contests(Subset a, const Dissociation& sigma) noexcept {
  return sigma.domain().includes(a) && a.intersects(sigma.first()) && a.intersects(sigma.second());
}

bool family_contests(std::span<const Subset> family, const Dissociation& sigma) noexcept {
  return std::any_of(family.begin(), family.end(),
                     [&](Subset a) { return contests(a, sigma); });
}

Dissociation restrict_dissociation(const Dissociation& sigma, Subset l) {
  if (!contests(l, sigma)) {
    throw Error(ErrorKind::NotOverlapping,
                l.to_string() + " does not contest " + sigma.to_string());
  }
  return Dissociation(l & sigma.first(), l & sigma.second());
}

std::vector<Dissociation> enumerate_dissociations(Subset j) {
  std::vector<Dissociation> out;
  if (j.size() >= 2) out.reserve((std::size_t{1} << (j.size() - 1)) - 1);
  for_each_dissociation(j, [&](const Dissociation& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

}  // namespace cnct
