#pragma once

// Classification of four-circulant search output.
//
// Several pair operations map a four-circulant code onto an equivalent one by
// an explicit coordinate permutation:
//   independent rotations  (a x^s, b x^t)
//   a unit multiplier      (a(x^u), b(x^u))
//   transposing one row    (a(x^-1), b), valid for self-dual pairs
//   exchanging the rows    (b, a)
// Raw pairs are first grouped by a canonical form under these operations, so
// that only one code per group goes through the general equivalence test.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "sdcode/circulant.hpp"
#include "sdcode/equivalence.hpp"

namespace sdcode {

// A pair together with a coordinate permutation taking the code of some
// original pair onto the code of `pair`.
struct TrackedPair {
  CirculantPair pair;
  std::vector<std::size_t> perm;
};

namespace detail {

inline std::size_t coord(std::size_t n, std::size_t blk, std::size_t j) { return blk * n + j % n; }

inline BitVector multiply_exponents(const BitVector& r, std::size_t u) {
  const std::size_t n = r.length();
  BitVector out(n);
  r.for_each_set([&](std::size_t k) { out.set(k * u % n); });
  return out;
}

// Applies `step` (a permutation of the current pair's code) after t.perm.
inline void then(TrackedPair& t, const std::vector<std::size_t>& step) { t.perm = compose_permutations(t.perm, step); }

inline void exchange_rows(TrackedPair& t) {
  const std::size_t n = t.pair.block;
  std::vector<std::size_t> step(4 * n);
  std::iota(step.begin(), step.end(), std::size_t{0});
  for (std::size_t j = 0; j < n; ++j) std::swap(step[coord(n, 2, j)], step[coord(n, 3, j)]);
  std::swap(t.pair.ra, t.pair.rb);
  then(t, step);
}

// (a, b) -> (a^T, b). The code of (a, b) is also spanned by (M^T | I), whose
// blocks rearrange into the generator of the new pair.
inline void transpose_first(TrackedPair& t) {
  const std::size_t n = t.pair.block;
  std::vector<std::size_t> step(4 * n);
  for (std::size_t j = 0; j < n; ++j) {
    step[coord(n, 0, j)] = coord(n, 2, j);
    step[coord(n, 2, j)] = coord(n, 0, j);
    step[coord(n, 1, j)] = coord(n, 3, j);
    step[coord(n, 3, j)] = coord(n, 1, j);
  }
  t.pair.ra = transpose_first_row(t.pair.ra);
  then(t, step);
}

inline void transpose_second(TrackedPair& t) {
  exchange_rows(t);
  transpose_first(t);
  exchange_rows(t);
}

inline void multiplier(TrackedPair& t, std::size_t u) {
  const std::size_t n = t.pair.block;
  std::vector<std::size_t> step(4 * n);
  for (std::size_t blk = 0; blk < 4; ++blk) {
    for (std::size_t j = 0; j < n; ++j) step[coord(n, blk, j)] = coord(n, blk, j * u);
  }
  t.pair.ra = multiply_exponents(t.pair.ra, u);
  t.pair.rb = multiply_exponents(t.pair.rb, u);
  then(t, step);
}

inline void rotate(TrackedPair& t, std::size_t s, std::size_t u) {
  const std::size_t n = t.pair.block;
  std::vector<std::size_t> step(4 * n);
  for (std::size_t j = 0; j < n; ++j) {
    step[coord(n, 0, j)] = coord(n, 0, j);
    step[coord(n, 1, j)] = coord(n, 1, j + s + u);
    step[coord(n, 2, j)] = coord(n, 2, j + s);
    step[coord(n, 3, j)] = coord(n, 3, j + u);
  }
  t.pair.ra = rotate_right(t.pair.ra, s);
  t.pair.rb = rotate_right(t.pair.rb, u);
  then(t, step);
}

inline std::size_t least_rotation(const BitVector& r) {
  std::size_t best = 0;
  BitVector best_vec = r;
  for (std::size_t s = 1; s < r.length(); ++s) {
    auto v = rotate_right(r, s);
    if (v < best_vec) {
      best_vec = v;
      best = s;
    }
  }
  return best;
}

}  // namespace detail

inline std::vector<std::size_t> units_mod(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t u = 1; u <= n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u % n == 0 ? 1 : u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Least pair reachable from p under the operations above, with the
// permutation from code(p) onto its code. p must satisfy the self-dual
// condition.
inline TrackedPair canonical_pair(const CirculantPair& p) {
  if (!self_dual_condition(p)) throw ArgumentError("canonical form needs a self-dual pair");
  const std::size_t n = p.block;
  std::vector<std::size_t> id(4 * n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::optional<TrackedPair> best;
  for (std::size_t u : units_mod(n)) {
    for (int flips = 0; flips < 4; ++flips) {
      for (int exchange = 0; exchange < 2; ++exchange) {
        TrackedPair t{p, id};
        if (flips & 1) detail::transpose_first(t);
        if (flips & 2) detail::transpose_second(t);
        detail::multiplier(t, u);
        if (exchange) detail::exchange_rows(t);
        detail::rotate(t, detail::least_rotation(t.pair.ra), detail::least_rotation(t.pair.rb));
        if (!best || t.pair < best->pair) best = std::move(t);
      }
    }
  }
  return std::move(*best);
}

struct SearchClassification {
  std::vector<EquivalenceClass> classes;  // indices into the input pairs
  std::size_t orbit_count = 0;            // groups sent to the general test
};

// Equivalence classes of the codes of `pairs`, with the same representative
// rule and certificate convention as classify().
inline SearchClassification classify_pairs(std::span<const CirculantPair> pairs, const ClassifyOptions& opt = {}) {
  SearchClassification out;
  if (pairs.empty()) return out;
  const std::size_t count = pairs.size();
  std::vector<LinearCode> codes(count);
  std::vector<std::string> keys(count);
  std::vector<TrackedPair> canon(count);
  parallel_ranges(count, resolve_threads(opt.threads), [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      codes[i] = build_four_circulant(pairs[i]);
      keys[i] = detail::serialized_generator(codes[i]);
      canon[i] = canonical_pair(pairs[i]);
    }
  });

  // Group representative: least serialized generator within the group.
  std::map<CirculantPair, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < count; ++i) groups[canon[i].pair].push_back(i);
  std::vector<std::size_t> reps;
  std::vector<std::size_t> group_of(count);
  std::vector<std::vector<std::size_t>> to_rep(count);
  for (auto& [key, members] : groups) {
    const std::size_t rep = *std::min_element(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(keys[x], x) < std::tie(keys[y], y);
    });
    const auto back = invert_permutation(canon[rep].perm);
    for (auto m : members) {
      group_of[m] = reps.size();
      to_rep[m] = compose_permutations(canon[m].perm, back);
    }
    reps.push_back(rep);
  }
  out.orbit_count = reps.size();

  std::vector<LinearCode> rep_codes;
  for (auto r : reps) rep_codes.push_back(codes[r]);
  const auto rep_classes = classify(rep_codes, opt);

  std::vector<std::size_t> class_of_group(reps.size());
  std::vector<std::vector<std::size_t>> group_to_class(reps.size());
  for (std::size_t c = 0; c < rep_classes.size(); ++c) {
    for (std::size_t m = 0; m < rep_classes[c].members.size(); ++m) {
      class_of_group[rep_classes[c].members[m]] = c;
      group_to_class[rep_classes[c].members[m]] = rep_classes[c].certificates[m];
    }
  }
  out.classes.resize(rep_classes.size());
  for (std::size_t c = 0; c < rep_classes.size(); ++c) out.classes[c].representative = reps[rep_classes[c].representative];
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t g = group_of[i];
    auto& cls = out.classes[class_of_group[g]];
    auto perm = compose_permutations(to_rep[i], group_to_class[g]);
    if (!verify_permutation(codes[i], codes[cls.representative], perm)) {
      throw InternalError("circulant certificate failed membership verification");
    }
    cls.members.push_back(i);
    cls.certificates.push_back(std::move(perm));
  }
  return out;
}

}  // namespace sdcode
