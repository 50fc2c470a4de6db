#pragma once

// Exact factorization tests on integer weights.
//
// Probabilities are scaled by the least common denominator D so that every
// outcome carries an integer weight and every marginal is an integer sum.
// A dissociation (A, B) of J is respected iff w_J(x) * D == w_A(x_A) * w_B(x_B)
// for all tuples x. Weights are uint64 when D fits, BigInt otherwise.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cnct/family.hpp"

namespace cnct::detail {

// Partition of the weighted rows by the value tuple on some subset.
template <typename W>
struct Partition {
  std::vector<std::uint32_t> class_of_row;
  std::vector<W> class_weight;
  std::vector<std::uint32_t> representative;  // one row per class

  std::size_t class_count() const noexcept { return class_weight.size(); }
};

template <typename W>
class MarginalCache {
 public:
  MarginalCache(const RandomFamily& phi, std::vector<std::uint32_t> rows, std::vector<W> weights,
                W total)
      : phi_(phi),
        rows_(std::move(rows)),
        weights_(std::move(weights)),
        total_(std::move(total)),
        memo_(phi.ground().subset_count()) {}

  const Partition<W>& partition(Subset j) {
    auto& slot = memo_[j.bits()];
    if (!slot) slot = std::make_unique<Partition<W>>(build(j));
    return *slot;
  }

  bool respects(const Dissociation& sigma) {
    const Partition<W>& whole = partition(sigma.domain());
    const Partition<W>& left = partition(sigma.first());
    const Partition<W>& right = partition(sigma.second());
    // The joint support sits inside the product of the marginal supports;
    // factorization forces equality of the two.
    if (whole.class_count() != left.class_count() * right.class_count()) return false;
    // With matching supports, agreement on every support tuple accounts for
    // all of the product mass, so tuples outside need no separate check.
    for (std::size_t c = 0; c < whole.class_count(); ++c) {
      const std::uint32_t r = whole.representative[c];
      if (!equal_products(whole.class_weight[c], total_,
                          left.class_weight[left.class_of_row[r]],
                          right.class_weight[right.class_of_row[r]])) {
        return false;
      }
    }
    return true;
  }

 private:
  static bool equal_products(const W& a, const W& b, const W& c, const W& d) {
    if constexpr (std::is_same_v<W, std::uint64_t>) {
      __extension__ typedef unsigned __int128 Wide;
      return Wide{a} * b == Wide{c} * d;
    } else {
      return a * b == c * d;
    }
  }

  Partition<W> build(Subset j) {
    Partition<W> out;
    const std::size_t rows = rows_.size();
    if (j.empty()) {
      out.class_of_row.assign(rows, 0);
      out.class_weight.push_back(total_);
      out.representative.push_back(0);
      return out;
    }
    const int top = j.max_element();
    const Partition<W>& parent = partition(j.without(top));
    const RandomVariable& var = phi_.variable(top);
    const std::uint64_t range = var.range_size();
    const std::uint64_t keys = parent.class_count() * range;

    out.class_of_row.resize(rows);
    auto assign = [&](std::size_t r, std::uint32_t& slot) {
      if (slot == kUnset) {
        slot = static_cast<std::uint32_t>(out.class_weight.size());
        out.class_weight.push_back(weights_[r]);
        out.representative.push_back(static_cast<std::uint32_t>(r));
      } else {
        out.class_weight[slot] += weights_[r];
      }
      out.class_of_row[r] = slot;
    };

    if (keys <= std::max<std::uint64_t>(4 * rows, 4096)) {
      std::vector<std::uint32_t> index(keys, kUnset);
      for (std::size_t r = 0; r < rows; ++r) {
        assign(r, index[parent.class_of_row[r] * range + var.values[rows_[r]]]);
      }
    } else {
      std::unordered_map<std::uint64_t, std::uint32_t> index;
      index.reserve(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        const std::uint64_t key = parent.class_of_row[r] * range + var.values[rows_[r]];
        assign(r, index.try_emplace(key, kUnset).first->second);
      }
    }
    return out;
  }

  static constexpr std::uint32_t kUnset = 0xFFFFFFFFU;

  const RandomFamily& phi_;
  std::vector<std::uint32_t> rows_;  // outcomes of positive probability
  std::vector<W> weights_;
  W total_;
  std::vector<std::unique_ptr<Partition<W>>> memo_;
};

// Builds the cache with the narrowest weight type that holds the common
// denominator and hands it to fn.
template <typename Fn>
decltype(auto) with_marginal_cache(const RandomFamily& phi, Fn&& fn) {
  const auto& probs = phi.space().probs;
  BigInt lcm = 1;
  for (const Rational& p : probs) {
    if (!p.is_zero()) lcm = boost::multiprecision::lcm(lcm, p.denominator());
  }
  std::vector<std::uint32_t> rows;
  std::vector<BigInt> big;
  for (std::size_t w = 0; w < probs.size(); ++w) {
    if (probs[w].is_zero()) continue;
    rows.push_back(static_cast<std::uint32_t>(w));
    big.push_back(probs[w].numerator() * (lcm / probs[w].denominator()));
  }
  if (lcm <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    std::vector<std::uint64_t> small;
    small.reserve(big.size());
    for (const BigInt& b : big) small.push_back(b.convert_to<std::uint64_t>());
    MarginalCache<std::uint64_t> cache(phi, std::move(rows), std::move(small),
                                       lcm.convert_to<std::uint64_t>());
    return fn(cache);
  }
  MarginalCache<BigInt> cache(phi, std::move(rows), std::move(big), lcm);
  return fn(cache);
}

}  // namespace cnct::detail
