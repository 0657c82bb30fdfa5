#pragma once

// Permutation equivalence of binary linear codes.
//
// A code is represented by the incidence structure of its lightest codewords
// that still span it: points are coordinates, blocks are codewords. Any
// coordinate permutation mapping one code onto another maps these structures
// onto each other, and conversely any structure isomorphism maps a spanning
// set into the other code. The search individualizes coordinates and refines
// the induced partitions; the first code follows a single path while every
// choice is tried on the second, so the search is complete. Leaves are
// accepted only after the permutation is checked by codeword membership.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdcode/code.hpp"
#include "sdcode/errors.hpp"
#include "sdcode/parallel.hpp"
#include "sdcode/weights.hpp"

namespace sdcode {

struct InvariantSignature {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::vector<std::uint64_t> weight_prefix;   // A_d .. A_{d+8}
  std::vector<std::uint64_t> shadow_prefix;   // B_0 .. B_{d+8}; empty unless singly even self-dual
  std::vector<std::uint64_t> point_degrees;   // sorted, over minimum-weight codewords
  std::vector<std::uint64_t> pair_counts;     // sorted, over minimum-weight codewords

  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
  friend auto operator<=>(const InvariantSignature&, const InvariantSignature&) = default;
};

// Name of the first field in which two signatures differ, empty if equal.
inline std::string first_difference(const InvariantSignature& a, const InvariantSignature& b) {
  if (a.n != b.n) return "length";
  if (a.k != b.k) return "dimension";
  if (a.d != b.d) return "minimum weight";
  if (a.weight_prefix != b.weight_prefix) return "weight distribution";
  if (a.shadow_prefix != b.shadow_prefix) return "shadow distribution";
  if (a.point_degrees != b.point_degrees) return "coordinate incidence";
  if (a.pair_counts != b.pair_counts) return "pairwise co-occurrence";
  return "";
}

namespace detail {

inline std::vector<std::uint64_t> window(const Distribution& d, std::size_t from, std::size_t to) {
  std::vector<std::uint64_t> out;
  for (std::size_t w = from; w <= std::min(to, d.n); ++w) out.push_back(d[w]);
  return out;
}

inline void incidence_counts(std::span<const BitVector> words, std::size_t n, std::vector<std::uint64_t>& degrees,
                             std::vector<std::uint64_t>& pairs) {
  degrees.assign(n, 0);
  std::vector<std::uint64_t> grid(n * n, 0);
  std::vector<std::size_t> pts;
  for (const auto& w : words) {
    pts.clear();
    w.for_each_set([&](std::size_t p) { pts.push_back(p); });
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ++degrees[pts[i]];
      for (std::size_t j = i + 1; j < pts.size(); ++j) ++grid[pts[i] * n + pts[j]];
    }
  }
  pairs.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back(grid[i * n + j]);
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(pairs.begin(), pairs.end());
}

}  // namespace detail

inline InvariantSignature signature(const LinearCode& c) {
  check_enumeration_budget(c.dimension());
  InvariantSignature s;
  s.n = c.length();
  s.k = c.dimension();
  if (s.k == 0) return s;
  s.d = min_weight(c).weight;
  const std::size_t top = s.d + 8;
  s.weight_prefix = detail::window(low_weight_counts(c.rows(), BitVector(s.n), s.n, top), s.d, top);
  if (is_self_dual(c) && parity_class(c) == ParityClass::singly_even) {
    const auto parts = shadow_parts(c);
    Distribution shadow(s.n);
    for (const auto& rep : parts.coset_reps) {
      const auto part = low_weight_counts(parts.c0.rows(), rep, s.n, top);
      for (std::size_t w = 0; w <= s.n; ++w) shadow.counts[w] += part[w];
    }
    s.shadow_prefix = detail::window(shadow, 0, top);
  }
  detail::incidence_counts(codewords_up_to(c, s.d), s.n, s.point_degrees, s.pair_counts);
  return s;
}

struct EquivalenceCertificate {
  // perm[i] is the image of coordinate i (0-based); applying it to every
  // codeword of the first code yields the second code.
  std::optional<std::vector<std::size_t>> perm;
  std::string distinct_reason;  // first differing invariant when perm is absent
  std::uint64_t nodes = 0;      // search nodes visited

  bool equivalent() const noexcept { return perm.has_value(); }
};

inline bool verify_permutation(const LinearCode& from, const LinearCode& to, std::span<const std::size_t> perm) {
  if (from.length() != to.length() || from.dimension() != to.dimension() || perm.size() != from.length()) return false;
  std::vector<bool> hit(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || hit[p]) return false;
    hit[p] = true;
  }
  return std::all_of(from.rows().begin(), from.rows().end(),
                     [&](const BitVector& r) { return to.contains(permute(r, perm)); });
}

inline std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

// (second ∘ first): apply `first`, then `second`.
inline std::vector<std::size_t> compose_permutations(std::span<const std::size_t> first,
                                                     std::span<const std::size_t> second) {
  std::vector<std::size_t> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Coordinates as points, codewords as blocks colored by weight.
struct Incidence {
  std::size_t n = 0;
  std::vector<std::uint32_t> block_weight;
  std::vector<std::vector<std::uint32_t>> block_points;
  std::vector<std::vector<std::uint32_t>> point_blocks;

  Incidence(std::span<const BitVector> words, std::size_t length) : n(length), point_blocks(length) {
    block_weight.reserve(words.size());
    block_points.reserve(words.size());
    for (std::size_t b = 0; b < words.size(); ++b) {
      std::vector<std::uint32_t> pts;
      words[b].for_each_set([&](std::size_t p) {
        pts.push_back(static_cast<std::uint32_t>(p));
        point_blocks[p].push_back(static_cast<std::uint32_t>(b));
      });
      block_weight.push_back(static_cast<std::uint32_t>(pts.size()));
      block_points.push_back(std::move(pts));
    }
  }
};

// An ordered partition of the points: colors are cell indices 0..cells-1,
// numbered by an order that depends only on isomorphism-invariant data.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::size_t cells = 0;
  std::uint64_t trace = 0;
};

// Renumbers points by the sorted distinct keys; returns the new cell count
// and folds the (key, size) list into the trace.
inline std::size_t canonicalize(std::vector<std::pair<std::uint64_t, std::uint64_t>>& keys, Coloring& c) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct(keys);
  std::sort(distinct.begin(), distinct.end());
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t>> sized;
  for (const auto& k : distinct) {
    if (sized.empty() || sized.back().first != k) {
      sized.push_back({k, 1});
    } else {
      ++sized.back().second;
    }
  }
  for (std::size_t p = 0; p < keys.size(); ++p) {
    const auto it = std::lower_bound(sized.begin(), sized.end(), keys[p],
                                     [](const auto& e, const auto& key) { return e.first < key; });
    c.color[p] = static_cast<std::uint32_t>(it - sized.begin());
  }
  std::uint64_t h = mix64(sized.size());
  for (const auto& [key, size] : sized) h = mix64(h ^ mix64(key.first * 31 + key.second) ^ size);
  c.trace = mix64(c.trace ^ h);
  c.cells = sized.size();
  return sized.size();
}

// Iterates color refinement of points through the blocks until stable.
inline void refine(const Incidence& g, Coloring& c) {
  std::vector<std::uint64_t> block_hash(g.block_points.size());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys(g.n);
  while (true) {
    for (std::size_t b = 0; b < g.block_points.size(); ++b) {
      std::uint64_t h = mix64(0xB10Cull + g.block_weight[b]);
      for (auto p : g.block_points[b]) h += mix64(c.color[p] + 0x5EEDull);
      block_hash[b] = mix64(h);
    }
    for (std::size_t p = 0; p < g.n; ++p) {
      std::uint64_t h = 0;
      for (auto b : g.point_blocks[p]) h += block_hash[b];
      keys[p] = {c.color[p], mix64(h)};
    }
    const std::size_t before = c.cells;
    if (canonicalize(keys, c) == before) return;
  }
}

inline Coloring initial_coloring(const Incidence& g) {
  Coloring c;
  c.color.assign(g.n, 0);
  c.cells = 1;
  refine(g, c);
  return c;
}

inline Coloring individualize(const Incidence& g, const Coloring& from, std::size_t point) {
  Coloring c = from;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys(g.n);
  for (std::size_t p = 0; p < g.n; ++p) keys[p] = {from.color[p], p == point ? 0u : 1u};
  canonicalize(keys, c);
  refine(g, c);
  return c;
}

struct Matcher {
  const Incidence& a;
  const Incidence& b;
  const LinearCode& code_a;
  const LinearCode& code_b;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> found;

  bool search(const Coloring& ca, const Coloring& cb) {
    ++nodes;
    const std::size_t n = a.n;
    if (ca.cells == n) {
      std::vector<std::size_t> by_color(n);
      for (std::size_t q = 0; q < n; ++q) by_color[cb.color[q]] = q;
      std::vector<std::size_t> perm(n);
      for (std::size_t p = 0; p < n; ++p) perm[p] = by_color[ca.color[p]];
      if (!verify_permutation(code_a, code_b, perm)) return false;
      found = std::move(perm);
      return true;
    }
    std::vector<std::size_t> size(ca.cells, 0);
    for (auto col : ca.color) ++size[col];
    std::size_t target = ca.cells;
    for (std::size_t cell = 0; cell < ca.cells; ++cell) {
      if (size[cell] >= 2 && (target == ca.cells || size[cell] < size[target])) target = cell;
    }
    std::size_t pa = 0;
    while (ca.color[pa] != target) ++pa;
    const Coloring next_a = individualize(a, ca, pa);
    for (std::size_t pb = 0; pb < n; ++pb) {
      if (cb.color[pb] != target) continue;
      const Coloring next_b = individualize(b, cb, pb);
      if (next_b.trace != next_a.trace || next_b.cells != next_a.cells) continue;
      if (search(next_a, next_b)) return true;
    }
    return false;
  }
};

// Lightest weight w such that the codewords of weight ≤ w span the code.
inline std::pair<std::size_t, std::vector<BitVector>> spanning_words(const LinearCode& c) {
  const std::size_t d = min_weight(c).weight;
  for (std::size_t w = d;; ++w) {
    auto words = codewords_up_to(c, w);
    if (rank(BitMatrix(c.length(), words)) == c.dimension()) return {w, std::move(words)};
  }
}

inline Distribution weight_counts(std::span<const BitVector> words, std::size_t n) {
  Distribution d(n);
  for (const auto& w : words) ++d.counts[w.weight()];
  return d;
}

}  // namespace detail

inline EquivalenceCertificate are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    throw ArgumentError("equivalence test needs codes of equal length and dimension");
  }
  check_enumeration_budget(a.dimension());
  EquivalenceCertificate cert;
  const std::size_t n = a.length();
  if (a == b) {
    cert.perm = std::vector<std::size_t>(n);
    std::iota(cert.perm->begin(), cert.perm->end(), std::size_t{0});
    return cert;
  }
  if (a.dimension() == 0) {
    cert.distinct_reason = "length";
    return cert;
  }
  const std::size_t da = min_weight(a).weight, db = min_weight(b).weight;
  if (da != db) {
    cert.distinct_reason = "minimum weight";
    return cert;
  }
  auto [span_weight, words_a] = detail::spanning_words(a);
  auto words_b = codewords_up_to(b, span_weight);
  if (detail::weight_counts(words_a, n) != detail::weight_counts(words_b, n)) {
    cert.distinct_reason = "weight distribution";
    return cert;
  }
  if (rank(BitMatrix(n, words_b)) != b.dimension()) {
    cert.distinct_reason = "span of low-weight codewords";
    return cert;
  }
  {
    std::vector<std::uint64_t> deg_a, deg_b, pair_a, pair_b;
    detail::incidence_counts(words_a, n, deg_a, pair_a);
    detail::incidence_counts(words_b, n, deg_b, pair_b);
    if (deg_a != deg_b) {
      cert.distinct_reason = "coordinate incidence";
      return cert;
    }
    if (pair_a != pair_b) {
      cert.distinct_reason = "pairwise co-occurrence";
      return cert;
    }
  }
  const detail::Incidence ga(words_a, n), gb(words_b, n);
  const auto ca = detail::initial_coloring(ga);
  const auto cb = detail::initial_coloring(gb);
  if (ca.trace != cb.trace || ca.cells != cb.cells) {
    cert.distinct_reason = "coordinate partition refinement";
    return cert;
  }
  detail::Matcher m{ga, gb, a, b};
  if (m.search(ca, cb)) {
    cert.perm = std::move(m.found);
  } else {
    cert.distinct_reason = "exhausted search";
  }
  cert.nodes = m.nodes;
  return cert;
}

struct EquivalenceClass {
  std::size_t representative = 0;          // index into the input list
  std::vector<std::size_t> members;        // ascending input indices, representative included
  std::vector<std::vector<std::size_t>> certificates;  // member -> representative, aligned with members
};

struct ClassifyOptions {
  std::size_t threads = 0;
};

namespace detail {

inline std::string serialized_generator(const LinearCode& c) {
  std::string s;
  for (const auto& r : c.rows()) s += r.to_string();
  return s;
}

}  // namespace detail

// Partitions codes into permutation-equivalence classes. Codes are bucketed
// by signature and compared pairwise within a bucket; each class is
// represented by its member with the lexicographically least serialized
// generator, so the partition and representatives do not depend on input
// order. Classes are ordered by representative.
inline std::vector<EquivalenceClass> classify(std::span<const LinearCode> codes, const ClassifyOptions& opt = {}) {
  if (codes.empty()) return {};
  for (const auto& c : codes) {
    if (c.length() != codes[0].length() || c.dimension() != codes[0].dimension()) {
      throw ArgumentError("classification needs codes of uniform length and dimension");
    }
  }
  std::vector<InvariantSignature> sigs(codes.size());
  std::vector<std::string> keys(codes.size());
  parallel_ranges(codes.size(), resolve_threads(opt.threads), [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      sigs[i] = signature(codes[i]);
      keys[i] = detail::serialized_generator(codes[i]);
    }
  });

  std::map<InvariantSignature, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < codes.size(); ++i) buckets[sigs[i]].push_back(i);
  std::vector<std::vector<std::size_t>> bucket_list;
  for (auto& [sig, members] : buckets) bucket_list.push_back(std::move(members));

  std::vector<std::vector<EquivalenceClass>> per_bucket(bucket_list.size());
  parallel_ranges(bucket_list.size(), resolve_threads(opt.threads),
                  [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t bi = begin; bi < end; ++bi) {
                      auto order = bucket_list[bi];
                      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                        return std::tie(keys[x], x) < std::tie(keys[y], y);
                      });
                      auto& classes = per_bucket[bi];
                      for (std::size_t idx : order) {
                        bool placed = false;
                        for (auto& cls : classes) {
                          auto cert = are_equivalent(codes[idx], codes[cls.representative]);
                          if (cert.perm) {
                            cls.members.push_back(idx);
                            cls.certificates.push_back(std::move(*cert.perm));
                            placed = true;
                            break;
                          }
                        }
                        if (!placed) {
                          std::vector<std::size_t> id(codes[idx].length());
                          std::iota(id.begin(), id.end(), std::size_t{0});
                          classes.push_back({idx, {idx}, {std::move(id)}});
                        }
                      }
                    }
                  });

  std::vector<EquivalenceClass> out;
  for (auto& classes : per_bucket) {
    for (auto& cls : classes) {
      std::vector<std::size_t> order(cls.members.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cls.members[x] < cls.members[y]; });
      EquivalenceClass sorted{cls.representative, {}, {}};
      for (auto o : order) {
        sorted.members.push_back(cls.members[o]);
        sorted.certificates.push_back(std::move(cls.certificates[o]));
      }
      out.push_back(std::move(sorted));
    }
  }
  std::sort(out.begin(), out.end(), [&](const EquivalenceClass& x, const EquivalenceClass& y) {
    return std::tie(keys[x.representative], x.representative) < std::tie(keys[y.representative], y.representative);
  });
  return out;
}

}  // namespace sdcode
