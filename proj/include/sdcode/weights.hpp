#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdcode/code.hpp"
#include "sdcode/enumerate.hpp"

namespace sdcode {

// Exact counts per weight, index 0..n. Counts are bounded by 2^k with k at
// most the enumeration budget, so 64-bit integers hold them exactly.
struct Distribution {
  std::size_t n = 0;
  std::vector<std::uint64_t> counts;

  Distribution() = default;
  Distribution(std::size_t length, std::vector<std::uint64_t> c) : n(length), counts(std::move(c)) {
    counts.resize(n + 1, 0);
  }
  explicit Distribution(std::size_t length) : n(length), counts(length + 1, 0) {}

  std::uint64_t operator[](std::size_t w) const noexcept { return w < counts.size() ? counts[w] : 0; }

  std::uint64_t total() const noexcept {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  // Least weight > 0 (or ≥ 0 when include_zero) with a nonzero count.
  std::optional<std::size_t> min_weight(bool include_zero = false) const noexcept {
    for (std::size_t w = include_zero ? 0 : 1; w < counts.size(); ++w) {
      if (counts[w]) return w;
    }
    return std::nullopt;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

// A_0..A_n of a code.
struct WeightDistribution : Distribution {
  using Distribution::Distribution;
};

// B_0..B_n of a shadow.
struct ShadowDistribution : Distribution {
  using Distribution::Distribution;
};

inline WeightDistribution weight_distribution(const LinearCode& c, std::size_t threads = 0) {
  return {c.length(), weight_histogram(c.rows(), BitVector(c.length()), c.length(), threads)};
}

// Shadow weights from streaming the two shadow cosets of C0.
inline ShadowDistribution shadow_distribution(const LinearCode& c, std::size_t threads = 0) {
  const auto parts = shadow_parts(c);
  check_enumeration_budget(parts.c0.dimension());
  ShadowDistribution out(c.length());
  for (const auto& rep : parts.coset_reps) {
    auto h = weight_histogram(parts.c0.rows(), rep, c.length(), threads);
    for (std::size_t w = 0; w <= c.length(); ++w) out.counts[w] += h[w];
  }
  return out;
}

// Counts of the vectors of weight ≤ max_weight in offset + span(basis),
// via information-set enumeration.
inline Distribution low_weight_counts(std::span<const BitVector> basis, const BitVector& offset, std::size_t n,
                                      std::size_t max_weight) {
  Distribution out(n);
  for_each_low_weight(basis, offset, n, max_weight, [&](Word lo, Word hi) {
    out.counts[static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi))]++;
  });
  return out;
}

inline std::vector<BitVector> low_weight_vectors(std::span<const BitVector> basis, const BitVector& offset,
                                                 std::size_t n, std::size_t max_weight) {
  std::vector<BitVector> out;
  for_each_low_weight(basis, offset, n, max_weight, [&](Word lo, Word hi) { out.emplace_back(n, lo, hi); });
  std::sort(out.begin(), out.end());
  return out;
}

// Nonzero codewords of weight ≤ max_weight, sorted in serialization order.
inline std::vector<BitVector> codewords_up_to(const LinearCode& c, std::size_t max_weight) {
  auto words = low_weight_vectors(c.rows(), BitVector(c.length()), c.length(), max_weight);
  std::erase_if(words, [](const BitVector& v) { return v.none(); });
  return words;
}

struct MinWeight {
  std::size_t weight = 0;
  // false only when a target was given and a codeword lighter than it was
  // found; `weight` is then an upper bound on the minimum weight.
  bool exact = true;
};

// Minimum nonzero weight with information-set lower bounds: after all
// combinations of ≤ w rows on each of m disjoint information sets have been
// seen, every unseen codeword has weight ≥ m(w+1).
inline MinWeight min_weight(const LinearCode& c, std::optional<std::size_t> target = std::nullopt) {
  const std::size_t k = c.dimension();
  if (k == 0) throw DomainError("minimum weight of the zero code is undefined");
  const std::size_t n = c.length();
  std::size_t best = n + 1;
  for (const auto& r : c.rows()) best = std::min(best, r.weight());
  if (target && best < *target) return {best, false};

  const auto sets = disjoint_information_sets(c.rows(), n);
  const std::size_t m = sets.size();
  auto full_walk = [&]() -> MinWeight {
    check_enumeration_budget(k);
    gray_walk(PackedRows(c.rows()), BitVector(n), 1, std::uint64_t{1} << k, [&](Word lo, Word hi) {
      best = std::min(best, static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi)));
    });
    return {best, true};
  };
  if (m == 0 || k <= 16) return full_walk();

  std::uint64_t spent = 0;
  bool stopped = false;
  for (std::size_t w = 1; w <= k; ++w) {
    spent += m * binomial(k, w);
    if (k <= kEnumerationBudget && spent > (std::uint64_t{1} << k)) return full_walk();
    for (std::size_t j = 0; j < m; ++j) {
      for_each_combination(sets[j].rows, w, 0, 0, [&](Word lo, Word hi) {
        const auto wt = static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi));
        if (wt < best) {
          best = wt;
          if (target && best < *target) {
            stopped = true;
            return false;
          }
        }
        return true;
      });
      if (stopped) return {best, false};
      const std::size_t lower = (j + 1) * (w + 1) + (m - j - 1) * w;
      if (best <= lower) return {best, true};
    }
  }
  return {best, true};
}

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Krawtchouk polynomial K_j(i) for length n.
inline BigInt krawtchouk(std::size_t n, std::size_t j, std::size_t i) {
  BigInt sum = 0;
  for (std::size_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    BigInt term = big_binomial(i, s) * big_binomial(n - i, j - s);
    if (s % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace detail

// True iff W(x+y, x-y) / 2^k reproduces w exactly, i.e. w is a fixed point of
// the MacWilliams transform for a code of dimension k.
inline bool macwilliams_check(const WeightDistribution& w, std::size_t k) {
  using detail::BigInt;
  const std::size_t n = w.n;
  const BigInt scale = BigInt(1) << k;
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (w[i]) sum += BigInt(w[i]) * detail::krawtchouk(n, j, i);
    }
    if (sum % scale != 0) return false;
    if (sum / scale != BigInt(w[j])) return false;
  }
  return true;
}

}  // namespace sdcode
