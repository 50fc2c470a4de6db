#pragma once

#include "cnct/family.hpp"
#include "cnct/structure.hpp"

namespace cnct {

// One outcome of probability 1; every variable is constant. Its structure is
// the discrete one.
RandomFamily discrete_family(GroundSet ground);

// Parity family of M = {i_1 < ... < i_m}: uniform on {0,1}^{m-1}, the first
// m-1 members of M read one coordinate each, i_m reads the parity of all
// coordinates, and indices outside M are constant. M is its only connected
// set besides the empty set and singletons. Throws Error(TooSmall) when
// |M| < 2, Error(OutOfRange) when M exceeds the ground set.
//
// Outcome t encodes omega with omega_1 as the most significant bit.
RandomFamily brunnian_family(GroundSet ground, Subset m_set);

// A family whose structure is k: the tensor product of the parity families of
// the irreducibles of k, folded left in increasing bitmask order, or the
// discrete family when k has no irreducible. The universe has
// 2^{sum(|K|-1)} outcomes.
RandomFamily realize(const ConnectivityStructure& k);

// Universe size realize(k) would produce, as a power of two exponent.
int realize_exponent(const ConnectivityStructure& k);

// Realization of the intersection of both structures. Throws
// Error(GroundMismatch).
RandomFamily wedge(const RandomFamily& phi, const RandomFamily& psi);

}  // namespace cnct
