#pragma once

// Streaming enumeration of the vectors of an affine space offset + span(basis).
//
// Two strategies are provided: a full single-bit-change (Gray) walk over all
// 2^k combinations, and a low-weight walk driven by pairwise disjoint
// information sets. The second visits every vector of weight ≤ w exactly once:
// a vector is reported from the first information set on which its
// restriction has weight ≤ w/m, where m is the number of sets.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdcode/errors.hpp"
#include "sdcode/gf2.hpp"
#include "sdcode/parallel.hpp"

namespace sdcode {

using Word = BitVector::Word;

// Largest dimension for which a full 2^k walk is attempted.
inline constexpr std::size_t kEnumerationBudget = 34;

inline std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

inline std::uint64_t binomial_prefix(std::size_t n, std::size_t r) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i <= std::min(r, n); ++i) s += binomial(n, i);
  return s;
}

struct PackedRows {
  std::vector<Word> lo, hi;

  PackedRows() = default;
  explicit PackedRows(std::span<const BitVector> rows) {
    lo.reserve(rows.size());
    hi.reserve(rows.size());
    for (const auto& r : rows) {
      lo.push_back(r.word(0));
      hi.push_back(r.word(1));
    }
  }
  std::size_t size() const noexcept { return lo.size(); }
};

// Gray-order walk over combination indices [begin, end); fn(lo, hi) receives
// the packed words of offset + Σ g_i basis_i with g the Gray code of the index.
template <class Fn>
void gray_walk(const PackedRows& basis, const BitVector& offset, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  Word lo = offset.word(0), hi = offset.word(1);
  std::uint64_t g = begin ^ (begin >> 1);
  while (g) {
    const auto b = static_cast<std::size_t>(std::countr_zero(g));
    lo ^= basis.lo[b];
    hi ^= basis.hi[b];
    g &= g - 1;
  }
  fn(lo, hi);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto b = static_cast<std::size_t>(std::countr_zero(i));
    lo ^= basis.lo[b];
    hi ^= basis.hi[b];
    fn(lo, hi);
  }
}

inline void check_enumeration_budget(std::size_t k) {
  if (k > kEnumerationBudget) {
    throw ResourceError("full enumeration needs 2^" + std::to_string(k) + " steps; limit is dimension " +
                            std::to_string(kEnumerationBudget),
                        kEnumerationBudget);
  }
}

// Exact weight histogram (index 0..n) of offset + span(basis).
inline std::vector<std::uint64_t> weight_histogram(std::span<const BitVector> basis, const BitVector& offset,
                                                   std::size_t n, std::size_t threads = 0) {
  check_enumeration_budget(basis.size());
  const PackedRows packed(basis);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  const std::size_t chunks = resolve_threads(threads);
  std::vector<std::array<std::uint64_t, kMaxLength + 1>> partial(chunks);
  parallel_ranges(total, chunks, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
    // Two interleaved tables avoid a store-to-load dependency on repeated weights.
    std::array<std::uint64_t, kMaxLength + 1> even{}, odd{};
    bool flip = false;
    gray_walk(packed, offset, begin, end, [&](Word lo, Word hi) {
      const auto w = static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi));
      (flip ? odd : even)[w]++;
      flip = !flip;
    });
    for (std::size_t w = 0; w <= kMaxLength; ++w) partial[c][w] = even[w] + odd[w];
  });
  std::vector<std::uint64_t> out(n + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t w = 0; w <= n; ++w) out[w] += p[w];
  }
  return out;
}

// Generator rows put in systematic form on `columns` (0-based): row r has a
// 1 at columns[r] and 0 at every other listed column.
struct InformationSet {
  PackedRows rows;
  std::vector<std::size_t> columns;
  BitVector mask;
};

// Greedily peels off pairwise disjoint information sets of span(basis),
// lowest columns first. `basis` must be linearly independent.
inline std::vector<InformationSet> disjoint_information_sets(std::span<const BitVector> basis, std::size_t n) {
  std::vector<InformationSet> sets;
  const std::size_t k = basis.size();
  if (k == 0) return sets;
  BitVector used(n);
  while (true) {
    std::vector<BitVector> work(basis.begin(), basis.end());
    std::vector<std::size_t> cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < k; ++col) {
      if (used.test(col)) continue;
      std::size_t pick = r;
      while (pick < k && !work[pick].test(col)) ++pick;
      if (pick == k) continue;
      std::swap(work[pick], work[r]);
      for (std::size_t o = 0; o < k; ++o) {
        if (o != r && work[o].test(col)) work[o] ^= work[r];
      }
      cols.push_back(col);
      ++r;
    }
    if (r < k) break;
    InformationSet s;
    s.rows = PackedRows(work);
    s.columns = cols;
    s.mask = BitVector(n);
    for (auto c : cols) s.mask.set(c);
    used |= s.mask;
    sets.push_back(std::move(s));
  }
  return sets;
}

// Calls fn(lo, hi) for offset ^ (XOR of exactly `count` rows), over all row
// subsets in lexicographic order. fn returns false to stop; the walk then
// returns false as well.
template <class Fn>
bool for_each_combination(const PackedRows& rows, std::size_t count, Word lo, Word hi, Fn&& fn) {
  const std::size_t k = rows.size();
  if (count > k) return true;
  if (count == 0) return fn(lo, hi);
  // Iterative DFS over index stacks keeps the hot loop free of recursion.
  std::array<std::size_t, 64> idx{};
  std::array<Word, 65> acc_lo{}, acc_hi{};
  acc_lo[0] = lo;
  acc_hi[0] = hi;
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    if (idx[depth] + (count - depth) > k) {
      if (depth == 0) return true;
      --depth;
      ++idx[depth];
      continue;
    }
    const std::size_t i = idx[depth];
    acc_lo[depth + 1] = acc_lo[depth] ^ rows.lo[i];
    acc_hi[depth + 1] = acc_hi[depth] ^ rows.hi[i];
    if (depth + 1 == count) {
      if (!fn(acc_lo[depth + 1], acc_hi[depth + 1])) return false;
      ++idx[depth];
    } else {
      idx[depth + 1] = i + 1;
      ++depth;
    }
  }
}

// offset with its restriction to the set's columns cleared, so that the
// restriction of offset_j + Σ x_r row_r to the set is exactly x.
inline BitVector normalize_offset(const InformationSet& s, BitVector offset) {
  for (std::size_t r = 0; r < s.columns.size(); ++r) {
    if (offset.test(s.columns[r])) offset ^= BitVector(offset.length(), s.rows.lo[r], s.rows.hi[r]);
  }
  return offset;
}

// Visits every vector of offset + span(basis) whose weight is ≤ max_weight
// exactly once, as fn(lo, hi). Falls back to a full Gray walk when that is
// cheaper or when no information set exists.
template <class Fn>
void for_each_low_weight(std::span<const BitVector> basis, const BitVector& offset, std::size_t n,
                         std::size_t max_weight, Fn&& fn) {
  const std::size_t k = basis.size();
  auto sets = disjoint_information_sets(basis, n);
  const std::size_t m = sets.size();
  const std::size_t per_set = m ? max_weight / m : 0;
  const std::uint64_t targeted = m ? m * binomial_prefix(k, per_set) : ~std::uint64_t{0};
  if (k < 63 && (m == 0 || targeted >= (std::uint64_t{1} << k))) {
    check_enumeration_budget(k);
    gray_walk(PackedRows(basis), offset, 0, std::uint64_t{1} << k, [&](Word lo, Word hi) {
      if (static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi)) <= max_weight) fn(lo, hi);
    });
    return;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const BitVector start = normalize_offset(sets[j], offset);
    for (std::size_t t = 0; t <= per_set; ++t) {
      for_each_combination(sets[j].rows, t, start.word(0), start.word(1), [&](Word lo, Word hi) {
        if (static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi)) > max_weight) return true;
        for (std::size_t e = 0; e < j; ++e) {
          const auto on_earlier = static_cast<std::size_t>(std::popcount(lo & sets[e].mask.word(0)) +
                                                           std::popcount(hi & sets[e].mask.word(1)));
          if (on_earlier <= per_set) return true;
        }
        fn(lo, hi);
        return true;
      });
    }
  }
}

}  // namespace sdcode
