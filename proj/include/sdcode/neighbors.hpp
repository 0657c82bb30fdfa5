#pragma once

// Self-dual neighbors: codes N with dim(C ∩ N) = n/2 - 1.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdcode/code.hpp"
#include "sdcode/equivalence.hpp"
#include "sdcode/errors.hpp"
#include "sdcode/parallel.hpp"
#include "sdcode/weights.hpp"

namespace sdcode {

struct NeighborDescriptor {
  std::string base;
  std::vector<std::size_t> support;  // 1-based, ascending
  std::string name;

  friend bool operator==(const NeighborDescriptor&, const NeighborDescriptor&) = default;
};

// Basis of C ∩ x^⊥ for x ∉ C^⊥.
inline std::vector<BitVector> orthogonal_subcode(const LinearCode& c, const BitVector& x) {
  std::vector<BitVector> out;
  const BitVector* pivot = nullptr;
  for (const auto& r : c.rows()) {
    if (!r.dot(x)) {
      out.push_back(r);
    } else if (!pivot) {
      pivot = &r;
    } else {
      out.push_back(r ^ *pivot);
    }
  }
  return out;
}

// ⟨C ∩ ⟨x⟩^⊥, x⟩.
inline LinearCode neighbor(const LinearCode& c, const BitVector& x) {
  if (x.length() != c.length()) throw DimensionError("neighbor vector length differs from the code length");
  if (!is_self_dual(c)) throw ArgumentError("neighbor construction needs a self-dual code");
  if (x.weight() % 2) throw ArgumentError("neighbor vector has odd weight " + std::to_string(x.weight()));
  if (c.contains(x)) throw ArgumentError("not a proper neighbor: x lies in the code");
  auto rows = orthogonal_subcode(c, x);
  rows.push_back(x);
  auto out = LinearCode::from_rows(rows, c.length());
  if (!is_self_dual(out)) throw InternalError("neighbor failed the self-duality re-check");
  return out;
}

inline LinearCode neighbor(const LinearCode& c, std::span<const std::size_t> support) {
  return neighbor(c, BitVector::from_support(c.length(), support));
}

// Generators of C as (all-ones, g_1..g_{k-1}) and vectors d_i with
// <d_i, g_j> = δ_ij, <d_i, 1> = 0.
struct NeighborFrame {
  std::size_t n = 0;
  std::vector<BitVector> gens;   // gens[0] is all-ones
  std::vector<BitVector> duals;  // duals[i] pairs with gens[i + 1]
};

inline NeighborFrame neighbor_frame(const LinearCode& c) {
  if (!is_self_dual(c)) throw ArgumentError("neighbor enumeration needs a self-dual code");
  const std::size_t n = c.length(), k = c.dimension();
  const BitVector one = BitVector::ones(n);
  if (!c.contains(one)) throw DomainError("self-dual code without the all-one vector");
  NeighborFrame f;
  f.n = n;
  f.gens.push_back(one);
  // Complete the all-ones vector to a basis using the echelon rows.
  for (const auto& r : c.rows()) {
    std::vector<BitVector> trial(f.gens);
    trial.push_back(r);
    if (rank(BitMatrix(n, trial)) == trial.size()) f.gens.push_back(r);
    if (f.gens.size() == k) break;
  }
  if (k > 64) throw ResourceError("dimension above 64", 64);
  // Row-reduce H = gens while tracking E with E·H = R.
  std::vector<BitVector> red(f.gens);
  std::vector<std::uint64_t> ops(k);
  for (std::size_t i = 0; i < k; ++i) ops[i] = std::uint64_t{1} << i;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < k; ++col) {
    std::size_t p = r;
    while (p < k && !red[p].test(col)) ++p;
    if (p == k) continue;
    std::swap(red[p], red[r]);
    std::swap(ops[p], ops[r]);
    for (std::size_t o = 0; o < k; ++o) {
      if (o != r && red[o].test(col)) {
        red[o] ^= red[r];
        ops[o] ^= ops[r];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  // D_l = Σ_j E[j][l] e_{p_j} satisfies H·D = I.
  for (std::size_t l = 1; l < k; ++l) {
    BitVector d(n);
    for (std::size_t j = 0; j < k; ++j) {
      if ((ops[j] >> l) & 1) d.set(pivots[j]);
    }
    f.duals.push_back(d);
  }
  return f;
}

// Number of codimension-1 subcodes containing the all-ones vector.
inline std::uint64_t hyperplane_count(const LinearCode& c) {
  const std::size_t k = c.dimension();
  if (k == 0) return 0;
  if (k - 1 >= 63) throw ResourceError("hyperplane index space too large", 62);
  return (std::uint64_t{1} << (k - 1)) - 1;
}

// The two neighbors attached to hyperplane number `index` (1-based, Gray
// order of the functional on g_1..g_{k-1}): x = y and x = y + c0.
inline std::pair<BitVector, BitVector> neighbor_vectors(const NeighborFrame& f, std::uint64_t index) {
  const std::uint64_t g = index ^ (index >> 1);
  BitVector y(f.n);
  for (std::size_t i = 0; i < f.duals.size(); ++i) {
    if ((g >> i) & 1) y ^= f.duals[i];
  }
  const auto c0 = static_cast<std::size_t>(std::countr_zero(g));
  return {y, y ^ f.gens[c0 + 1]};
}

inline std::vector<BitVector> hyperplane_basis(const NeighborFrame& f, std::uint64_t index) {
  const std::uint64_t g = index ^ (index >> 1);
  const auto c0 = static_cast<std::size_t>(std::countr_zero(g));
  std::vector<BitVector> rows{f.gens[0]};
  for (std::size_t i = 0; i + 1 < f.gens.size(); ++i) {
    if (i == c0) continue;
    rows.push_back((g >> i) & 1 ? f.gens[i + 1] ^ f.gens[c0 + 1] : f.gens[i + 1]);
  }
  return rows;
}

// Calls fn(index, x, neighbor) for every self-dual neighbor attached to the
// hyperplanes with index in [begin, end), two per hyperplane, in index order.
// fn returns false to stop.
template <class Fn>
void enumerate_self_dual_neighbors(const LinearCode& c, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const auto f = neighbor_frame(c);
  end = std::min(end, hyperplane_count(c) + 1);
  for (std::uint64_t index = std::max<std::uint64_t>(begin, 1); index < end; ++index) {
    auto rows = hyperplane_basis(f, index);
    const auto [x1, x2] = neighbor_vectors(f, index);
    for (const auto& x : {x1, x2}) {
      rows.push_back(x);
      auto code = LinearCode::from_rows(rows, f.n);
      rows.pop_back();
      if (!fn(index, x, code)) return;
    }
  }
}

template <class Fn>
void enumerate_self_dual_neighbors(const LinearCode& c, Fn&& fn) {
  enumerate_self_dual_neighbors(c, 1, ~std::uint64_t{0}, std::forward<Fn>(fn));
}

// All neighbors accepted by `filter`, in enumeration order.
inline std::vector<LinearCode> self_dual_neighbors(const LinearCode& c,
                                                   const std::function<bool(const LinearCode&)>& filter = {}) {
  std::vector<LinearCode> out;
  enumerate_self_dual_neighbors(c, [&](std::uint64_t, const BitVector&, const LinearCode& n) {
    if (!filter || filter(n)) out.push_back(n);
    return true;
  });
  return out;
}

struct SurveyOptions {
  bool extended = false;
  // Hyperplanes allowed without `extended`.
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::size_t threads = 0;
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SurveyResult {
  std::uint64_t examined = 0;   // neighbors built
  std::uint64_t extremal = 0;   // neighbors with minimum weight ≥ d_min
  std::vector<BitVector> vectors;     // x of each new class representative
  std::vector<LinearCode> new_codes;  // one per class equivalent to nothing in `known`
};

inline SurveyResult extremal_neighbor_survey(const LinearCode& c, std::size_t d_min, std::span<const LinearCode> known,
                                             const SurveyOptions& opt = {}) {
  const std::uint64_t hyperplanes = hyperplane_count(c);
  if (hyperplanes > opt.budget && !opt.extended) {
    throw ResourceError("neighbor survey over " + std::to_string(hyperplanes) +
                            " hyperplanes exceeds the default budget; needs --extended",
                        opt.budget);
  }
  struct Hit {
    std::uint64_t index;
    BitVector x;
    LinearCode code;
  };
  const std::size_t chunks = resolve_threads(opt.threads);
  std::vector<std::vector<Hit>> hits(chunks);
  std::atomic<std::uint64_t> done{0};
  parallel_ranges(hyperplanes, chunks, [&](std::size_t ch, std::uint64_t begin, std::uint64_t end) {
    enumerate_self_dual_neighbors(c, begin + 1, end + 1, [&](std::uint64_t index, const BitVector& x, const LinearCode& n) {
      const auto mw = min_weight(n, d_min);
      if (mw.exact && mw.weight >= d_min) hits[ch].push_back({index, x, n});
      const auto d = done.fetch_add(1) + 1;
      if (opt.progress && d % 4096 == 0) opt.progress(d / 2, hyperplanes);
      return true;
    });
  });
  SurveyResult out;
  out.examined = 2 * hyperplanes;
  std::vector<LinearCode> codes;
  std::vector<BitVector> xs;
  for (auto& h : hits) {
    for (auto& hit : h) {
      codes.push_back(std::move(hit.code));
      xs.push_back(hit.x);
    }
  }
  out.extremal = codes.size();
  if (codes.empty()) return out;
  ClassifyOptions copt;
  copt.threads = opt.threads;
  for (const auto& cls : classify(codes, copt)) {
    const auto& rep = codes[cls.representative];
    const bool seen = std::any_of(known.begin(), known.end(), [&](const LinearCode& k) {
      return k.length() == rep.length() && k.dimension() == rep.dimension() && are_equivalent(rep, k).equivalent();
    });
    if (seen) continue;
    out.new_codes.push_back(rep);
    out.vectors.push_back(xs[cls.representative]);
  }
  return out;
}

}  // namespace sdcode
