#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cnct/dissociation.hpp"
#include "cnct/rational.hpp"
#include "cnct/structure.hpp"
#include "cnct/subset.hpp"

namespace cnct {

// Finite outcome space {0, ..., m-1} with exact probabilities.
struct ProbabilitySpace {
  std::vector<Rational> probs;

  std::size_t size() const noexcept { return probs.size(); }
  static ProbabilitySpace uniform(std::size_t m);
};

// Outcome -> value code. Inside a validated family the codes in use are
// exactly {0, ..., range_size() - 1}.
struct RandomVariable {
  std::vector<std::uint32_t> values;

  std::uint32_t range_size() const noexcept;
  friend bool operator==(const RandomVariable&, const RandomVariable&) = default;
};

// A probability space together with one random variable per index of I.
class RandomFamily {
 public:
  GroundSet ground() const noexcept { return ground_; }
  const ProbabilitySpace& space() const noexcept { return space_; }
  std::size_t outcome_count() const noexcept { return space_.size(); }
  const std::vector<RandomVariable>& variables() const noexcept { return variables_; }
  // 1-based, like the indices of I.
  const RandomVariable& variable(int index) const { return variables_.at(index - 1); }

  friend bool operator==(const RandomFamily& a, const RandomFamily& b) {
    return a.ground_ == b.ground_ && a.space_.probs == b.space_.probs &&
           a.variables_ == b.variables_;
  }

 private:
  RandomFamily(GroundSet ground, ProbabilitySpace space, std::vector<RandomVariable> variables)
      : ground_(ground), space_(std::move(space)), variables_(std::move(variables)) {}

  friend RandomFamily validate_family(GroundSet, ProbabilitySpace, std::vector<RandomVariable>);

  GroundSet ground_;
  ProbabilitySpace space_;
  std::vector<RandomVariable> variables_;
};

// Law of the sub-family indexed by a subset J: value tuple (codes of the
// variables of J in increasing index order) -> probability. Tuples of
// probability zero are omitted.
struct JointDistribution {
  Subset domain;
  std::map<std::vector<std::uint32_t>, Rational> table;
};

// Checks the family invariants and relabels each variable's codes onto a
// dense range, preserving their order. Throws Error(LengthMismatch),
// Error(NegativeProbability) or Error(ProbSumNotOne). Outcomes of probability
// zero are kept.
RandomFamily validate_family(GroundSet ground, ProbabilitySpace space,
                             std::vector<RandomVariable> variables);

// Single pass over the outcomes. The empty domain yields the empty tuple with
// mass 1.
JointDistribution joint_distribution(const RandomFamily& phi, Subset j);

// True iff the law on the domain of sigma is the product of the laws on its
// two blocks, for every value tuple.
bool family_respects(const RandomFamily& phi, const Dissociation& sigma);

// The sets J none of whose dissociations is respected by phi. Marginal
// partitions are memoized per subset for the duration of the call.
ConnectivityStructure connectivity_structure(const RandomFamily& phi);

// Same probability space, keeping only the variables of j, relabeled
// 1..|j| in increasing order. Throws Error(EmptySubset).
RandomFamily restrict_family(const RandomFamily& phi, Subset j);

// Product space indexed row-major by (omega, xi); variable i pairs the two
// factor values and is then densely renumbered. Throws Error(GroundMismatch).
RandomFamily tensor(const RandomFamily& phi, const RandomFamily& psi);

// Checks that the variable blocks of the connected components are mutually
// independent: the law on I equals the product of the component laws.
bool check_component_independence(const RandomFamily& phi);

}  // namespace cnct
