#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "cnct/dissociation.hpp"
#include "cnct/subset.hpp"

namespace cnct {

/// An integral connectivity structure on I: a family of subsets containing
/// the empty set and every singleton, closed under union of overlapping
/// members.
///
/// Members are kept in canonical order (cardinality, then bitmask), so two
/// structures are equal iff their member lists are equal. Instances can only
/// be obtained through the checked factories below.
class ConnectivityStructure {
 public:
  GroundSet ground() const noexcept { return ground_; }
  const std::vector<Subset>& members() const noexcept { return members_; }
  bool contains(Subset s) const noexcept;
  // Members with at least two elements.
  std::vector<Subset> nontrivial_members() const;

  static ConnectivityStructure discrete(GroundSet ground);
  // Every subset of the ground set.
  static ConnectivityStructure gross(GroundSet ground);

  friend bool operator==(const ConnectivityStructure&, const ConnectivityStructure&) = default;

 private:
  ConnectivityStructure(GroundSet ground, std::vector<Subset> members)
      : ground_(ground), members_(std::move(members)) {}

  // Sorts a membership bitmap into canonical order.
  static ConnectivityStructure from_bitmap(GroundSet ground, const std::vector<bool>& present);

  friend ConnectivityStructure validate_structure(GroundSet, std::span<const Subset>);
  friend ConnectivityStructure generate(GroundSet, std::span<const Subset>);
  friend ConnectivityStructure gamma(GroundSet, std::span<const Subset>);
  friend ConnectivityStructure restrict(const ConnectivityStructure&, Subset);
  friend ConnectivityStructure intersection(const ConnectivityStructure&, const ConnectivityStructure&);

  GroundSet ground_;
  std::vector<Subset> members_;
};

// Renders the nontrivial members, e.g. "n=3 {{1,2},{2,3}}".
std::ostream& operator<<(std::ostream& os, const ConnectivityStructure& k);

// Maximal members of a structure. They partition I.
class ComponentPartition {
 public:
  ComponentPartition(GroundSet ground, std::vector<Subset> components)
      : ground_(ground), components_(std::move(components)) {}

  GroundSet ground() const noexcept { return ground_; }
  const std::vector<Subset>& components() const noexcept { return components_; }

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> components_;
};

// Checks the axioms on `sets` augmented with the empty set and singletons.
// The input must already be closed: throws Error(NotClosed) naming the first
// overlapping pair whose union is missing, Error(OutOfRange) for subsets
// outside the ground set.
ConnectivityStructure validate_structure(GroundSet ground, std::span<const Subset> sets);

// Smallest integral structure containing the generators, by saturating
// overlapping unions until a fixed point.
ConnectivityStructure generate(GroundSet ground, std::span<const Subset> generators);

// All B such that every dissociation of B is contested by some member of
// `family`. Computed by direct quantification, independently of generate().
ConnectivityStructure gamma(GroundSet ground, std::span<const Subset> family);

// Members of k included in j, plus the empty set and all singletons of I.
// The ground set is kept.
ConnectivityStructure restrict(const ConnectivityStructure& k, Subset j);

// Members K with |K| >= 2 such that K is not in the structure generated by the
// other members. Canonical order.
std::vector<Subset> irreducibles(const ConnectivityStructure& k);

// Structure generated by the union of both member lists. Throws
// Error(GroundMismatch).
ConnectivityStructure sum(const ConnectivityStructure& k1, const ConnectivityStructure& k2);

// Members common to both structures; again an integral structure. Throws
// Error(GroundMismatch).
ConnectivityStructure intersection(const ConnectivityStructure& k1, const ConnectivityStructure& k2);

// k1 is contained in k2 as a family of sets.
bool is_substructure(const ConnectivityStructure& k1, const ConnectivityStructure& k2);

ComponentPartition connected_components(const ConnectivityStructure& k);

// Every component lies inside one block of sigma. Throws Error(NotGlobal) when
// the domain of sigma is not the whole ground set.
bool is_adapted(const Dissociation& sigma, const ComponentPartition& parts);

}  // namespace cnct
