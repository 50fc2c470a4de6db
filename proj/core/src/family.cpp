#include "cnct/family.hpp"

#include <algorithm>

#include "cnct/error.hpp"
#include "marginals.hpp"

namespace cnct {
namespace {

// Order-preserving renumbering onto {0, ..., k-1}.
void densify(RandomVariable& var) {
  std::vector<std::uint32_t> used = var.values;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (!used.empty() && used.back() + 1 == used.size()) return;
  for (auto& v : var.values) {
    v = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
  }
}

std::vector<std::uint32_t> tuple_of(const RandomFamily& phi, Subset j, std::size_t outcome) {
  std::vector<std::uint32_t> tuple;
  tuple.reserve(j.size());
  for_each_index(j, [&](int i) { tuple.push_back(phi.variable(i).values[outcome]); });
  return tuple;
}

}  // namespace

ProbabilitySpace ProbabilitySpace::uniform(std::size_t m) {
  ProbabilitySpace space;
  space.probs.assign(m, Rational(1, static_cast<long long>(m)));
  return space;
}

std::uint32_t RandomVariable::range_size() const noexcept {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end()) + 1;
}

RandomFamily validate_family(GroundSet ground, ProbabilitySpace space,
                             std::vector<RandomVariable> variables) {
  const std::size_t m = space.size();
  if (m == 0) throw Error(ErrorKind::LengthMismatch, "probability space has no outcome");
  if (variables.size() != static_cast<std::size_t>(ground.size())) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(ground.size()) +
                                               " variables, got " +
                                               std::to_string(variables.size()));
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].values.size() != m) {
      throw Error(ErrorKind::LengthMismatch,
                  "variable " + std::to_string(i + 1) + " has " +
                      std::to_string(variables[i].values.size()) + " entries for " +
                      std::to_string(m) + " outcomes");
    }
  }
  Rational total;
  for (std::size_t w = 0; w < m; ++w) {
    if (space.probs[w].sign() < 0) {
      throw Error(ErrorKind::NegativeProbability,
                  "outcome " + std::to_string(w) + " has probability " + space.probs[w].to_string());
    }
    total += space.probs[w];
  }
  if (total != Rational(1)) {
    throw Error(ErrorKind::ProbSumNotOne, "probabilities sum to " + total.to_string());
  }
  for (auto& var : variables) densify(var);
  return RandomFamily(ground, std::move(space), std::move(variables));
}

JointDistribution joint_distribution(const RandomFamily& phi, Subset j) {
  if (!j.within(phi.ground())) {
    throw Error(ErrorKind::OutOfRange, j.to_string() + " exceeds the family's ground set");
  }
  JointDistribution out{j, {}};
  const auto& probs = phi.space().probs;
  for (std::size_t w = 0; w < probs.size(); ++w) {
    if (probs[w].is_zero()) continue;
    out.table[tuple_of(phi, j, w)] += probs[w];
  }
  return out;
}

bool family_respects(const RandomFamily& phi, const Dissociation& sigma) {
  if (!sigma.domain().within(phi.ground())) {
    throw Error(ErrorKind::OutOfRange, sigma.to_string() + " exceeds the family's ground set");
  }
  return detail::with_marginal_cache(phi, [&](auto& cache) { return cache.respects(sigma); });
}

ConnectivityStructure connectivity_structure(const RandomFamily& phi) {
  const GroundSet ground = phi.ground();
  std::vector<Subset> connected;
  detail::with_marginal_cache(phi, [&](auto& cache) {
    for (std::uint32_t bits = 0; bits < ground.subset_count(); ++bits) {
      const Subset j(bits);
      if (j.size() < 2) continue;
      const bool separable = !for_each_dissociation(
          j, [&](const Dissociation& sigma) { return !cache.respects(sigma); });
      if (!separable) connected.push_back(j);
    }
    return 0;
  });
  return validate_structure(ground, connected);
}

RandomFamily restrict_family(const RandomFamily& phi, Subset j) {
  if (j.empty()) throw Error(ErrorKind::EmptySubset, "cannot restrict a family to the empty set");
  if (!j.within(phi.ground())) {
    throw Error(ErrorKind::OutOfRange, j.to_string() + " exceeds the family's ground set");
  }
  std::vector<RandomVariable> vars;
  for_each_index(j, [&](int i) { vars.push_back(phi.variable(i)); });
  return validate_family(GroundSet(j.size()), phi.space(), std::move(vars));
}

RandomFamily tensor(const RandomFamily& phi, const RandomFamily& psi) {
  if (phi.ground() != psi.ground()) {
    throw Error(ErrorKind::GroundMismatch,
                "tensor factors live on ground sets of sizes " +
                    std::to_string(phi.ground().size()) + " and " +
                    std::to_string(psi.ground().size()));
  }
  const std::size_t m1 = phi.outcome_count();
  const std::size_t m2 = psi.outcome_count();
  ProbabilitySpace space;
  space.probs.reserve(m1 * m2);
  for (std::size_t a = 0; a < m1; ++a) {
    for (std::size_t b = 0; b < m2; ++b) {
      space.probs.push_back(phi.space().probs[a] * psi.space().probs[b]);
    }
  }
  std::vector<RandomVariable> vars(phi.ground().size());
  for (int i = 1; i <= phi.ground().size(); ++i) {
    const auto& x = phi.variable(i).values;
    const auto& y = psi.variable(i).values;
    const std::uint64_t k = psi.variable(i).range_size();
    auto& out = vars[i - 1].values;
    out.reserve(m1 * m2);
    for (std::size_t a = 0; a < m1; ++a) {
      for (std::size_t b = 0; b < m2; ++b) {
        const std::uint64_t code = x[a] * k + y[b];
        if (code > std::numeric_limits<std::uint32_t>::max()) {
          throw Error(ErrorKind::TooLarge, "paired value code overflows 32 bits");
        }
        out.push_back(static_cast<std::uint32_t>(code));
      }
    }
  }
  return validate_family(phi.ground(), std::move(space), std::move(vars));
}

bool check_component_independence(const RandomFamily& phi) {
  const ComponentPartition parts = connected_components(connectivity_structure(phi));
  const Subset whole = Subset::whole(phi.ground());
  const JointDistribution joint = joint_distribution(phi, whole);
  std::vector<JointDistribution> marginals;
  std::size_t product_support = 1;
  for (Subset c : parts.components()) {
    marginals.push_back(joint_distribution(phi, c));
    product_support *= marginals.back().table.size();
  }
  // The product law charges exactly the tuples whose projections are all
  // charged; equal supports plus pointwise agreement is full equality.
  if (product_support != joint.table.size()) return false;
  for (const auto& [tuple, p] : joint.table) {
    Rational product(1);
    for (const JointDistribution& marginal : marginals) {
      std::vector<std::uint32_t> projected;
      for_each_index(marginal.domain, [&](int i) { projected.push_back(tuple[i - 1]); });
      const auto it = marginal.table.find(projected);
      if (it == marginal.table.end()) return false;
      product *= it->second;
    }
    if (product != p) return false;
  }
  return true;
}

}  // namespace cnct
