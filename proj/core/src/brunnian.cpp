#include "cnct/brunnian.hpp"

#include <algorithm>

#include "cnct/error.hpp"

namespace cnct {

RandomFamily discrete_family(GroundSet ground) {
  std::vector<RandomVariable> vars(ground.size(), RandomVariable{{0}});
  return validate_family(ground, ProbabilitySpace::uniform(1), std::move(vars));
}

RandomFamily brunnian_family(GroundSet ground, Subset m_set) {
  if (m_set.size() < 2) {
    throw Error(ErrorKind::TooSmall,
                "parity family needs at least two indices, got " + m_set.to_string());
  }
  if (!m_set.within(ground)) {
    throw Error(ErrorKind::OutOfRange, m_set.to_string() + " exceeds the ground set");
  }
  const std::vector<int> members = m_set.indices();
  const int free_bits = static_cast<int>(members.size()) - 1;
  const std::size_t outcomes = std::size_t{1} << free_bits;

  std::vector<RandomVariable> vars(ground.size());
  for (auto& var : vars) var.values.assign(outcomes, 0);
  for (std::size_t t = 0; t < outcomes; ++t) {
    std::uint32_t parity = 0;
    for (int k = 0; k < free_bits; ++k) {
      const std::uint32_t bit = (t >> (free_bits - 1 - k)) & 1U;
      vars[members[k] - 1].values[t] = bit;
      parity ^= bit;
    }
    vars[members.back() - 1].values[t] = parity;
  }
  return validate_family(ground, ProbabilitySpace::uniform(outcomes), std::move(vars));
}

RandomFamily realize(const ConnectivityStructure& k) {
  std::vector<Subset> factors = irreducibles(k);
  if (factors.empty()) return discrete_family(k.ground());
  std::sort(factors.begin(), factors.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  RandomFamily result = brunnian_family(k.ground(), factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = tensor(result, brunnian_family(k.ground(), factors[i]));
  }
  return result;
}

int realize_exponent(const ConnectivityStructure& k) {
  int exponent = 0;
  for (Subset s : irreducibles(k)) exponent += s.size() - 1;
  return exponent;
}

RandomFamily wedge(const RandomFamily& phi, const RandomFamily& psi) {
  if (phi.ground() != psi.ground()) {
    throw Error(ErrorKind::GroundMismatch, "wedge factors live on different ground sets");
  }
  return realize(intersection(connectivity_structure(phi), connectivity_structure(psi)));
}

}  // namespace cnct
