#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cnct/family.hpp"
#include "cnct/structure.hpp"

namespace cnct {

// Every integral structure on a small ground set, ordered by member count and
// then by member list (compared member by member in canonical order). The
// discrete structure comes first and the gross structure last.
struct StructureCatalog {
  GroundSet ground;
  std::vector<ConnectivityStructure> structures;
};

inline constexpr int kMaxCatalogSize = 5;

// Throws Error(TooLarge) for n > 5.
StructureCatalog enumerate_structures(GroundSet ground);

// Definition-literal structure of a family: every joint law is recomputed from
// the outcomes with rational arithmetic for every dissociation, without
// caching. Independent of connectivity_structure().
ConnectivityStructure oracle_connectivity_structure(const RandomFamily& phi);

// Definition-literal factorization test behind the oracle.
bool oracle_family_respects(const RandomFamily& phi, const Dissociation& sigma);

struct RoundtripEntry {
  std::size_t member_count = 0;
  std::size_t universe_size = 0;
  bool optimized_ok = false;
  bool oracle_ok = false;

  bool passed() const noexcept { return optimized_ok && oracle_ok; }
};

struct RoundtripReport {
  std::vector<RoundtripEntry> entries;

  std::size_t pass_count() const noexcept;
  bool all_passed() const noexcept { return pass_count() == entries.size(); }
};

// Realizes each structure and recomputes its structure along both paths.
// Entries follow the input order.
RoundtripReport verify_roundtrip(std::span<const ConnectivityStructure> structures);
RoundtripReport verify_roundtrip(const StructureCatalog& catalog);

// One line per entry: "<member-count> <universe-size> PASS|FAIL". With
// `summary`, a trailing "# <passed>/<total> passed" line.
void write_report(std::ostream& os, const RoundtripReport& report, bool summary = false);

// `count` distinct catalog positions drawn with the seeded LCG (partial
// Fisher-Yates over the index list), returned in increasing order.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed);

}  // namespace cnct
