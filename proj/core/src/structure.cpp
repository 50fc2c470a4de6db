#include "cnct/structure.hpp"

#include <algorithm>
#include <ostream>

#include "cnct/error.hpp"

namespace cnct {
namespace {

void check_within(GroundSet ground, std::span<const Subset> sets) {
  for (Subset s : sets) {
    if (!s.within(ground)) {
      throw Error(ErrorKind::OutOfRange, "subset " + s.to_string() + " exceeds ground set {1.." +
                                             std::to_string(ground.size()) + "}");
    }
  }
}

void check_same_ground(const ConnectivityStructure& a, const ConnectivityStructure& b) {
  if (a.ground() != b.ground()) {
    throw Error(ErrorKind::GroundMismatch,
                "structures live on ground sets of sizes " + std::to_string(a.ground().size()) +
                    " and " + std::to_string(b.ground().size()));
  }
}

// Membership bitmap holding the empty set, all singletons and `sets`.
std::vector<bool> integral_bitmap(GroundSet ground, std::span<const Subset> sets) {
  std::vector<bool> present(ground.subset_count(), false);
  present[0] = true;
  for (int i = 1; i <= ground.size(); ++i) present[Subset::singleton(i).bits()] = true;
  for (Subset s : sets) present[s.bits()] = true;
  return present;
}

}  // namespace

ConnectivityStructure ConnectivityStructure::from_bitmap(GroundSet ground,
                                                         const std::vector<bool>& present) {
  std::vector<Subset> members;
  for (std::uint32_t bits = 0; bits < present.size(); ++bits) {
    if (present[bits]) members.emplace_back(bits);
  }
  std::sort(members.begin(), members.end(), CanonicalLess{});
  return ConnectivityStructure(ground, std::move(members));
}

bool ConnectivityStructure::contains(Subset s) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess{});
}

std::vector<Subset> ConnectivityStructure::nontrivial_members() const {
  std::vector<Subset> out;
  for (Subset s : members_) {
    if (s.size() >= 2) out.push_back(s);
  }
  return out;
}

ConnectivityStructure ConnectivityStructure::discrete(GroundSet ground) {
  return generate(ground, {});
}

ConnectivityStructure ConnectivityStructure::gross(GroundSet ground) {
  return from_bitmap(ground, std::vector<bool>(ground.subset_count(), true));
}

ConnectivityStructure validate_structure(GroundSet ground, std::span<const Subset> sets) {
  check_within(ground, sets);
  const std::vector<bool> present = integral_bitmap(ground, sets);
  ConnectivityStructure k = ConnectivityStructure::from_bitmap(ground, present);
  const auto& members = k.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Subset a = members[i];
      const Subset b = members[j];
      if (a.intersects(b) && !present[(a | b).bits()]) {
        throw Error(ErrorKind::NotClosed, "overlapping members " + a.to_string() + " and " +
                                              b.to_string() + " lack their union " +
                                              (a | b).to_string());
      }
    }
  }
  return k;
}

ConnectivityStructure generate(GroundSet ground, std::span<const Subset> generators) {
  check_within(ground, generators);
  std::vector<bool> present = integral_bitmap(ground, generators);
  std::vector<Subset> pool;
  for (std::uint32_t bits = 0; bits < present.size(); ++bits) {
    if (present[bits] && std::popcount(bits) >= 2) pool.emplace_back(bits);
  }
  // Singletons only overlap sets that already contain them, so saturating the
  // nontrivial pool is enough.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Subset a = pool[i];
      const Subset b = pool[j];
      if (!a.intersects(b)) continue;
      const Subset u = a | b;
      if (!present[u.bits()]) {
        present[u.bits()] = true;
        pool.push_back(u);
      }
    }
  }
  return ConnectivityStructure::from_bitmap(ground, present);
}

ConnectivityStructure gamma(GroundSet ground, std::span<const Subset> family) {
  check_within(ground, family);
  std::vector<bool> present(ground.subset_count(), false);
  for (std::uint32_t bits = 0; bits < present.size(); ++bits) {
    present[bits] = for_each_dissociation(Subset(bits), [&](const Dissociation& sigma) {
      return family_contests(family, sigma);
    });
  }
  return ConnectivityStructure::from_bitmap(ground, present);
}

ConnectivityStructure restrict(const ConnectivityStructure& k, Subset j) {
  check_within(k.ground(), std::span<const Subset>(&j, 1));
  std::vector<bool> present = integral_bitmap(k.ground(), {});
  for (Subset s : k.members()) {
    if (j.includes(s)) present[s.bits()] = true;
  }
  return ConnectivityStructure::from_bitmap(k.ground(), present);
}

std::vector<Subset> irreducibles(const ConnectivityStructure& k) {
  std::vector<Subset> out;
  const auto& members = k.members();
  std::vector<Subset> others;
  others.reserve(members.size());
  for (Subset candidate : members) {
    if (candidate.size() < 2) continue;
    others.clear();
    for (Subset s : members) {
      if (s != candidate) others.push_back(s);
    }
    if (!generate(k.ground(), others).contains(candidate)) out.push_back(candidate);
  }
  return out;
}

ConnectivityStructure sum(const ConnectivityStructure& k1, const ConnectivityStructure& k2) {
  check_same_ground(k1, k2);
  std::vector<Subset> all = k1.members();
  all.insert(all.end(), k2.members().begin(), k2.members().end());
  return generate(k1.ground(), all);
}

ConnectivityStructure intersection(const ConnectivityStructure& k1,
                                   const ConnectivityStructure& k2) {
  check_same_ground(k1, k2);
  std::vector<Subset> common;
  std::set_intersection(k1.members().begin(), k1.members().end(), k2.members().begin(),
                        k2.members().end(), std::back_inserter(common), CanonicalLess{});
  return ConnectivityStructure(k1.ground(), std::move(common));
}

bool is_substructure(const ConnectivityStructure& k1, const ConnectivityStructure& k2) {
  check_same_ground(k1, k2);
  return std::includes(k2.members().begin(), k2.members().end(), k1.members().begin(),
                       k1.members().end(), CanonicalLess{});
}

ComponentPartition connected_components(const ConnectivityStructure& k) {
  const GroundSet ground = k.ground();
  std::vector<Subset> components;
  Subset covered;
  for (int i = 1; i <= ground.size(); ++i) {
    if (covered.contains(i)) continue;
    // Members through i pairwise overlap, so their union is the maximal one.
    Subset component;
    for (Subset s : k.members()) {
      if (s.contains(i)) component = component | s;
    }
    components.push_back(component);
    covered = covered | component;
  }
  return ComponentPartition(ground, std::move(components));
}

bool is_adapted(const Dissociation& sigma, const ComponentPartition& parts) {
  if (sigma.domain() != Subset::whole(parts.ground())) {
    throw Error(ErrorKind::NotGlobal, sigma.to_string() + " is not a dissociation of I");
  }
  return std::all_of(parts.components().begin(), parts.components().end(), [&](Subset c) {
    return sigma.first().includes(c) || sigma.second().includes(c);
  });
}

std::ostream& operator<<(std::ostream& os, const ConnectivityStructure& k) {
  os << "n=" << k.ground().size() << " {";
  bool first = true;
  for (Subset s : k.nontrivial_members()) {
    os << (first ? "" : ",") << s;
    first = false;
  }
  return os << '}';
}

}  // namespace cnct
