#include "cnct/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "cnct/brunnian.hpp"
#include "cnct/error.hpp"
#include "cnct/lcg.hpp"

namespace cnct {
namespace {

// Include/exclude search over the candidate sets by decreasing cardinality.
// When two overlapping included sets are both decided their union is larger
// (or one of them), hence already decided, so a violation is caught the
// moment its second set is included.
class StructureSearch {
 public:
  explicit StructureSearch(GroundSet ground)
      : ground_(ground), present_(ground.subset_count(), false) {
    for (std::uint32_t bits = 0; bits < ground.subset_count(); ++bits) {
      if (std::popcount(bits) >= 2) candidates_.emplace_back(bits);
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](Subset a, Subset b) { return CanonicalLess{}(b, a); });
  }

  std::vector<ConnectivityStructure> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t pos) {
    if (pos == candidates_.size()) {
      found_.push_back(validate_structure(ground_, included_));
      return;
    }
    const Subset x = candidates_[pos];
    descend(pos + 1);
    const bool compatible = std::all_of(included_.begin(), included_.end(), [&](Subset y) {
      return !x.intersects(y) || present_[(x | y).bits()];
    });
    if (!compatible) return;
    present_[x.bits()] = true;
    included_.push_back(x);
    descend(pos + 1);
    included_.pop_back();
    present_[x.bits()] = false;
  }

  GroundSet ground_;
  std::vector<Subset> candidates_;
  std::vector<bool> present_;
  std::vector<Subset> included_;
  std::vector<ConnectivityStructure> found_;
};

bool catalog_less(const ConnectivityStructure& a, const ConnectivityStructure& b) {
  const auto& ma = a.members();
  const auto& mb = b.members();
  if (ma.size() != mb.size()) return ma.size() < mb.size();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end(),
                                      CanonicalLess{});
}

using Table = std::map<std::vector<std::uint32_t>, Rational>;

Table literal_joint(const RandomFamily& phi, Subset j) {
  Table table;
  const auto& probs = phi.space().probs;
  const std::vector<int> idx = j.indices();
  std::vector<std::uint32_t> tuple(idx.size());
  for (std::size_t w = 0; w < probs.size(); ++w) {
    for (std::size_t k = 0; k < idx.size(); ++k) tuple[k] = phi.variable(idx[k]).values[w];
    table[tuple] += probs[w];
  }
  return table;
}

}  // namespace

StructureCatalog enumerate_structures(GroundSet ground) {
  if (ground.size() > kMaxCatalogSize) {
    throw Error(ErrorKind::TooLarge, "structure enumeration is limited to n <= 5, got n = " +
                                         std::to_string(ground.size()));
  }
  std::vector<ConnectivityStructure> all = StructureSearch(ground).run();
  std::sort(all.begin(), all.end(), catalog_less);
  return StructureCatalog{ground, std::move(all)};
}

bool oracle_family_respects(const RandomFamily& phi, const Dissociation& sigma) {
  const Subset domain = sigma.domain();
  const Table joint = literal_joint(phi, domain);
  const Table left = literal_joint(phi, sigma.first());
  const Table right = literal_joint(phi, sigma.second());

  // Position of each domain index inside the left or right tuple.
  const std::vector<int> idx = domain.indices();
  std::vector<std::pair<bool, std::size_t>> source;
  std::size_t li = 0;
  std::size_t ri = 0;
  for (int i : idx) {
    if (sigma.first().contains(i)) {
      source.emplace_back(true, li++);
    } else {
      source.emplace_back(false, ri++);
    }
  }
  // Values outside the left or right marginal support give zero on both
  // sides, so the quantification runs over the product of the supports.
  std::vector<std::uint32_t> tuple(idx.size());
  const Rational zero;
  for (const auto& [x1, p1] : left) {
    for (const auto& [x2, p2] : right) {
      for (std::size_t k = 0; k < idx.size(); ++k) {
        tuple[k] = source[k].first ? x1[source[k].second] : x2[source[k].second];
      }
      const auto it = joint.find(tuple);
      const Rational& pj = it == joint.end() ? zero : it->second;
      if (pj != p1 * p2) return false;
    }
  }
  return true;
}

ConnectivityStructure oracle_connectivity_structure(const RandomFamily& phi) {
  std::vector<Subset> connected;
  for (std::uint32_t bits = 0; bits < phi.ground().subset_count(); ++bits) {
    const Subset j(bits);
    bool every_contested = true;
    for (const Dissociation& sigma : enumerate_dissociations(j)) {
      if (oracle_family_respects(phi, sigma)) {
        every_contested = false;
        break;
      }
    }
    if (every_contested) connected.push_back(j);
  }
  return validate_structure(phi.ground(), connected);
}

std::size_t RoundtripReport::pass_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const RoundtripEntry& e) { return e.passed(); }));
}

RoundtripReport verify_roundtrip(std::span<const ConnectivityStructure> structures) {
  RoundtripReport report;
  for (const ConnectivityStructure& k : structures) {
    const RandomFamily phi = realize(k);
    RoundtripEntry entry;
    entry.member_count = k.members().size();
    entry.universe_size = phi.outcome_count();
    entry.optimized_ok = connectivity_structure(phi) == k;
    entry.oracle_ok = oracle_connectivity_structure(phi) == k;
    report.entries.push_back(entry);
  }
  return report;
}

RoundtripReport verify_roundtrip(const StructureCatalog& catalog) {
  return verify_roundtrip(catalog.structures);
}

void write_report(std::ostream& os, const RoundtripReport& report, bool summary) {
  for (const RoundtripEntry& e : report.entries) {
    os << e.member_count << ' ' << e.universe_size << ' ' << (e.passed() ? "PASS" : "FAIL")
       << '\n';
  }
  if (summary) {
    os << "# " << report.pass_count() << '/' << report.entries.size() << " passed\n";
  }
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed) {
  count = std::min(count, population);
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Lcg rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(static_cast<std::uint32_t>(population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace cnct
