#pragma once

#include <cstdint>

#include "cnct/family.hpp"
#include "cnct/structure.hpp"

namespace cnct {

enum class ProbabilityModel {
  UniformDyadic,  // uniform probability, universe sizes restricted to powers of two
  UniformAnyM,    // uniform probability, every universe size
};

struct SearchBudget {
  static constexpr int kMaxUniverse = 12;

  int max_universe = 8;
  int max_alphabet = 3;
  std::uint64_t max_candidates = 2'000'000;
  ProbabilityModel probability_model = ProbabilityModel::UniformAnyM;

  // Throws Error(OutOfRange) unless every cap is positive and
  // max_universe <= 12.
  void validate() const;
};

struct SearchResult {
  RandomFamily family;
  bool found_by_search = false;  // false: fell back to realize()
  std::uint64_t candidates = 0;   // value assignments enumerated
};

/// Looks for a family with structure k on a smaller universe than realize(k).
///
/// Universe sizes m = 1, 2, ... up to min(max_universe, canonical size) are
/// tried in turn, each with the uniform probability 1/m. For a given m a
/// family is a multiset of m outcome rows, each row holding one value in
/// [0, max_alphabet) per variable; multisets are enumerated as nondecreasing
/// row sequences, so outcome permutations are quotiented out. A candidate is
/// evaluated only if it is the lexicographic minimum of its orbit under
/// per-variable value permutations. The first candidate whose structure is k
/// wins; when the search is exhausted or the candidate budget runs out the
/// canonical realization is returned instead, so the result's structure is
/// always k.
SearchResult search_minimal(const ConnectivityStructure& k, const SearchBudget& budget);

RandomFamily minimize_family(const ConnectivityStructure& k, const SearchBudget& budget);

}  // namespace cnct
