#pragma once

// Four-circulant codes: generator (I_2n | M) with M = [[A, B], [B^T, A^T]] for
// n×n circulants A, B given by their first rows.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sdcode/code.hpp"
#include "sdcode/errors.hpp"
#include "sdcode/gf2.hpp"
#include "sdcode/parallel.hpp"
#include "sdcode/weights.hpp"

namespace sdcode {

struct CirculantPair {
  std::size_t block = 0;
  BitVector ra;  // first row of A
  BitVector rb;  // first row of B

  friend bool operator==(const CirculantPair&, const CirculantPair&) = default;
  friend auto operator<=>(const CirculantPair& a, const CirculantPair& b) {
    if (auto c = a.ra <=> b.ra; c != 0) return c;
    return a.rb <=> b.rb;
  }
};

// Coordinate i moves to (i + shift) mod n.
inline BitVector rotate_right(const BitVector& v, std::size_t shift) {
  const std::size_t n = v.length();
  BitVector out(n);
  if (n == 0) return out;
  v.for_each_set([&](std::size_t i) { out.set((i + shift) % n); });
  return out;
}

// First row of the transpose of circulant(first_row): t_j = r_{-j mod n}.
inline BitVector transpose_first_row(const BitVector& r) {
  const std::size_t n = r.length();
  BitVector out(n);
  r.for_each_set([&](std::size_t i) { out.set((n - i) % n); });
  return out;
}

// Row i+1 is the right rotation of row i.
inline BitMatrix circulant_matrix(const BitVector& first_row) {
  const std::size_t n = first_row.length();
  if (n == 0) throw ArgumentError("circulant of an empty row");
  BitMatrix m(n, std::vector<BitVector>{});
  BitVector row = first_row;
  for (std::size_t i = 0; i < n; ++i) {
    m.append(row);
    row = rotate_right(row, 1);
  }
  return m;
}

inline LinearCode build_four_circulant(const CirculantPair& p) {
  const std::size_t n = p.block;
  if (p.ra.length() != n || p.rb.length() != n) {
    throw DimensionError("circulant rows must have length " + std::to_string(n));
  }
  if (4 * n > kMaxLength) throw DimensionError("four-circulant length exceeds " + std::to_string(kMaxLength));
  const BitMatrix a = circulant_matrix(p.ra);
  const BitMatrix b = circulant_matrix(p.rb);
  const BitMatrix at = circulant_matrix(transpose_first_row(p.ra));
  const BitMatrix bt = circulant_matrix(transpose_first_row(p.rb));
  std::vector<BitVector> rows;
  rows.reserve(2 * n);
  auto place = [&](std::size_t unit, const BitVector& left, const BitVector& right) {
    BitVector row(4 * n);
    row.set(unit);
    left.for_each_set([&](std::size_t j) { row.set(2 * n + j); });
    right.for_each_set([&](std::size_t j) { row.set(3 * n + j); });
    rows.push_back(row);
  };
  for (std::size_t i = 0; i < n; ++i) place(i, a[i], b[i]);
  for (std::size_t i = 0; i < n; ++i) place(n + i, bt[i], at[i]);
  return LinearCode::from_rows(rows, 4 * n);
}

// Cyclic autocorrelation: bit s is Σ_t r_t r_{t+s} mod 2, i.e. the first row
// of R R^T for R = circulant(r).
inline BitVector autocorrelation(const BitVector& r) {
  const std::size_t n = r.length();
  BitVector out(n);
  for (std::size_t s = 0; s < n; ++s) out.set(s, r.dot(rotate_right(r, n - s)));
  return out;
}

// AA^T + BB^T = I_n, evaluated as a(x)a(x^-1) + b(x)b(x^-1) = 1 mod x^n - 1.
inline bool self_dual_condition(const CirculantPair& p) {
  if (p.ra.length() != p.block || p.rb.length() != p.block) return false;
  return (autocorrelation(p.ra) ^ autocorrelation(p.rb)) == BitVector::unit(p.block, 0);
}

struct SearchOptions {
  std::size_t block = 15;
  std::size_t d_target = 12;
  // Lower bound on wt(ra) + wt(rb); defaults to d_target - 1 (each generator
  // row has weight 1 + wt(ra) + wt(rb)).
  std::optional<std::size_t> weight_bound;
  std::size_t congruence = 1;  // required residue of wt(ra) + wt(rb) mod 4
  bool last_b_entry_one = true;
  // Keep only codes whose minimum weight is exactly d_target.
  bool exact_weight = false;
  std::size_t threads = 0;
  // Called with (completed ra values, total) from worker threads.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

inline constexpr std::size_t kMaxSearchBlock = 16;

namespace detail {

inline std::uint32_t rotate_mask(std::uint32_t v, std::size_t shift, std::size_t n) {
  shift %= n;
  if (shift == 0) return v;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  return ((v << shift) | (v >> (n - shift))) & full;
}

inline std::uint32_t autocorrelation_mask(std::uint32_t r, std::size_t n) {
  std::uint32_t out = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (std::popcount(r & rotate_mask(r, s, n)) & 1) out |= 1u << s;
  }
  return out;
}

inline BitVector mask_to_vector(std::uint32_t m, std::size_t n) { return BitVector(n, m, 0); }

}  // namespace detail

// All pairs satisfying the self-duality identity, the weight congruence and
// bound, the last-entry normalization of rb, and minimum weight ≥ d_target
// (or = d_target with exact_weight).
// Sorted by (ra, rb) in serialization order.
inline std::vector<CirculantPair> search_four_circulant(const SearchOptions& opt) {
  const std::size_t n = opt.block;
  if (n == 0) throw ArgumentError("block size must be positive");
  if (n > kMaxSearchBlock) {
    throw ResourceError("search block " + std::to_string(n) + " exceeds the budget of " +
                            std::to_string(kMaxSearchBlock),
                        kMaxSearchBlock);
  }
  const std::size_t bound = opt.weight_bound.value_or(opt.d_target > 0 ? opt.d_target - 1 : 0);
  const std::uint32_t count = 1u << n;
  std::vector<std::uint32_t> ac(count);
  for (std::uint32_t v = 0; v < count; ++v) ac[v] = detail::autocorrelation_mask(v, n);

  // rb candidates grouped by autocorrelation.
  std::vector<std::vector<std::uint32_t>> by_ac(count);
  const std::uint32_t last = 1u << (n - 1);
  for (std::uint32_t b = 0; b < count; ++b) {
    if (opt.last_b_entry_one && !(b & last)) continue;
    by_ac[ac[b]].push_back(b);
  }

  const std::size_t chunks = resolve_threads(opt.threads);
  std::vector<std::vector<CirculantPair>> found(chunks);
  std::atomic<std::uint64_t> done{0};
  parallel_ranges(count, chunks, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t a64 = begin; a64 < end; ++a64) {
      const auto a = static_cast<std::uint32_t>(a64);
      for (std::uint32_t b : by_ac[ac[a] ^ 1u]) {
        const auto s = static_cast<std::size_t>(std::popcount(a) + std::popcount(b));
        if (s % 4 != opt.congruence % 4 || s < bound) continue;
        CirculantPair p{n, detail::mask_to_vector(a, n), detail::mask_to_vector(b, n)};
        if (1 + s < opt.d_target) continue;
        const auto mw = min_weight(build_four_circulant(p), opt.d_target);
        if (!mw.exact || mw.weight < opt.d_target) continue;
        if (opt.exact_weight && mw.weight != opt.d_target) continue;
        found[c].push_back(std::move(p));
      }
      const auto d = done.fetch_add(1) + 1;
      if (opt.progress && (d % 1024 == 0 || d == count)) opt.progress(d, count);
    }
  });
  std::vector<CirculantPair> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdcode
