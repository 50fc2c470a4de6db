#include "cnct/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cnct/brunnian.hpp"
#include "cnct/error.hpp"

namespace cnct {
namespace {

// Row codes are base-`alphabet` numbers with variable 1 as the most
// significant digit, so numeric order is lexicographic row order.
class RowCodec {
 public:
  RowCodec(int variables, std::uint32_t alphabet) : variables_(variables), alphabet_(alphabet) {
    rows_ = 1;
    for (int i = 0; i < variables; ++i) rows_ *= alphabet;
  }

  std::uint64_t row_count() const noexcept { return rows_; }

  std::uint32_t digit(std::uint64_t code, int variable) const noexcept {
    for (int i = variables_ - 1; i > variable; --i) code /= alphabet_;
    return static_cast<std::uint32_t>(code % alphabet_);
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& digits) const noexcept {
    std::uint64_t code = 0;
    for (std::uint32_t d : digits) code = code * alphabet_ + d;
    return code;
  }

 private:
  int variables_;
  std::uint32_t alphabet_;
  std::uint64_t rows_;
};

// True iff the sorted row sequence is the smallest among all its images under
// per-variable value permutations (each image re-sorted).
bool is_canonical(const std::vector<std::uint64_t>& rows, const RowCodec& codec, int variables) {
  const std::size_t m = rows.size();
  std::vector<std::vector<std::uint32_t>> matrix(m, std::vector<std::uint32_t>(variables));
  std::vector<std::uint32_t> used(variables, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (int i = 0; i < variables; ++i) {
      matrix[r][i] = codec.digit(rows[r], i);
      used[i] = std::max(used[i], matrix[r][i] + 1);
    }
  }
  // Codes must be dense: lowering a value into an unused gap keeps the order
  // and gives a smaller sequence.
  for (int i = 0; i < variables; ++i) {
    std::vector<bool> seen(used[i], false);
    for (std::size_t r = 0; r < m; ++r) seen[matrix[r][i]] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }

  std::vector<std::vector<std::uint32_t>> perms(variables);
  for (int i = 0; i < variables; ++i) {
    perms[i].resize(used[i]);
    std::iota(perms[i].begin(), perms[i].end(), 0U);
  }
  std::vector<std::uint64_t> image(m);
  std::vector<std::uint32_t> digits(variables);
  while (true) {
    // Odometer over the per-variable permutations; the identity comes first
    // and is skipped by advancing before the comparison.
    int i = variables - 1;
    while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
    if (i < 0) return true;
    for (std::size_t r = 0; r < m; ++r) {
      for (int v = 0; v < variables; ++v) digits[v] = perms[v][matrix[r][v]];
      image[r] = codec.encode(digits);
    }
    std::sort(image.begin(), image.end());
    if (image < rows) return false;
  }
}

RandomFamily family_from_rows(GroundSet ground, const std::vector<std::uint64_t>& rows,
                              const RowCodec& codec) {
  std::vector<RandomVariable> vars(ground.size());
  for (int i = 0; i < ground.size(); ++i) {
    vars[i].values.reserve(rows.size());
    for (std::uint64_t row : rows) vars[i].values.push_back(codec.digit(row, i));
  }
  return validate_family(ground, ProbabilitySpace::uniform(rows.size()), std::move(vars));
}

class UniverseSearch {
 public:
  UniverseSearch(const ConnectivityStructure& target, const SearchBudget& budget)
      : target_(target),
        budget_(budget),
        codec_(target.ground().size(), static_cast<std::uint32_t>(budget.max_alphabet)) {}

  // Nondecreasing sequences of m row codes in lexicographic order.
  std::optional<RandomFamily> run(std::size_t m) {
    rows_.assign(m, 0);
    return extend(0, 0);
  }

  bool exhausted() const noexcept { return candidates_ >= budget_.max_candidates; }
  std::uint64_t candidates() const noexcept { return candidates_; }

 private:
  std::optional<RandomFamily> extend(std::size_t pos, std::uint64_t low) {
    if (pos == rows_.size()) {
      ++candidates_;
      if (!is_canonical(rows_, codec_, target_.ground().size())) return std::nullopt;
      RandomFamily phi = family_from_rows(target_.ground(), rows_, codec_);
      if (connectivity_structure(phi) == target_) return phi;
      return std::nullopt;
    }
    for (std::uint64_t code = low; code < codec_.row_count(); ++code) {
      if (exhausted()) return std::nullopt;
      // The first row of a canonical sequence is all zeros.
      if (pos == 0 && code != 0) break;
      rows_[pos] = code;
      if (auto found = extend(pos + 1, code)) return found;
    }
    return std::nullopt;
  }

  const ConnectivityStructure& target_;
  const SearchBudget& budget_;
  RowCodec codec_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t candidates_ = 0;
};

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

}  // namespace

void SearchBudget::validate() const {
  if (max_universe < 1 || max_universe > kMaxUniverse) {
    throw Error(ErrorKind::OutOfRange,
                "max_universe must lie in [1, 12], got " + std::to_string(max_universe));
  }
  if (max_alphabet < 1) {
    throw Error(ErrorKind::OutOfRange,
                "max_alphabet must be positive, got " + std::to_string(max_alphabet));
  }
  if (max_candidates < 1) throw Error(ErrorKind::OutOfRange, "max_candidates must be positive");
}

SearchResult search_minimal(const ConnectivityStructure& k, const SearchBudget& budget) {
  budget.validate();
  const int exponent = realize_exponent(k);
  // Never look past the canonical universe size 2^exponent.
  const std::size_t canonical = exponent < 32 ? std::size_t{1} << exponent : SIZE_MAX;
  const std::size_t limit = std::min(static_cast<std::size_t>(budget.max_universe), canonical);

  UniverseSearch search(k, budget);
  for (std::size_t m = 1; m <= limit && !search.exhausted(); ++m) {
    if (budget.probability_model == ProbabilityModel::UniformDyadic && !is_power_of_two(m)) {
      continue;
    }
    if (auto found = search.run(m)) {
      return SearchResult{std::move(*found), true, search.candidates()};
    }
  }
  return SearchResult{realize(k), false, search.candidates()};
}

RandomFamily minimize_family(const ConnectivityStructure& k, const SearchBudget& budget) {
  return search_minimal(k, budget).family;
}

}  // namespace cnct
