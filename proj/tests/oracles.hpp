#pragma once

// Brute-force reference implementations for short codes (n <= 20). They work
// on plain integer masks and share nothing with the library beyond BitVector
// conversion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sdcode/sdcode.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline Mask to_mask(const sdcode::BitVector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.length(); ++i) {
    if (v.test(i)) m |= Mask{1} << i;
  }
  return m;
}

inline sdcode::BitVector to_vector(Mask m, std::size_t n) { return sdcode::BitVector(n, m, 0); }

inline std::vector<Mask> generators(const sdcode::LinearCode& c) {
  std::vector<Mask> out;
  for (const auto& r : c.rows()) out.push_back(to_mask(r));
  return out;
}

// Every XOR of a subset of gens, as a sorted set.
inline std::vector<Mask> span(const std::vector<Mask>& gens) {
  std::set<Mask> words{0};
  for (Mask g : gens) {
    std::vector<Mask> add;
    for (Mask w : words) add.push_back(w ^ g);
    words.insert(add.begin(), add.end());
  }
  return {words.begin(), words.end()};
}

inline std::vector<Mask> span(const sdcode::LinearCode& c) { return span(generators(c)); }

inline int parity(Mask m) { return std::popcount(m) & 1; }

inline std::vector<Mask> dual_words(const std::vector<Mask>& words, std::size_t n) {
  std::vector<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    if (std::all_of(words.begin(), words.end(), [&](Mask w) { return !parity(v & w); })) out.push_back(v);
  }
  return out;
}

inline std::vector<std::uint64_t> histogram(const std::vector<Mask>& words, std::size_t n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  for (Mask w : words) ++h[std::popcount(w)];
  return h;
}

// {v : v.c = wt(c)/2 mod 2 for every c in C}.
inline std::vector<Mask> shadow(const std::vector<Mask>& words, std::size_t n) {
  std::vector<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    if (std::all_of(words.begin(), words.end(),
                    [&](Mask w) { return parity(v & w) == ((std::popcount(w) / 2) & 1); })) {
      out.push_back(v);
    }
  }
  return out;
}

inline std::size_t min_weight(const std::vector<Mask>& words) {
  std::size_t best = 64;
  for (Mask w : words) {
    if (w) best = std::min<std::size_t>(best, std::popcount(w));
  }
  return best;
}

// Distinct self-dual neighbors <C ∩ x^⊥, x> over all even x outside C, each as
// its sorted codeword list.
inline std::set<std::vector<Mask>> neighbors(const std::vector<Mask>& words, std::size_t n) {
  const std::set<Mask> in(words.begin(), words.end());
  std::set<std::vector<Mask>> out;
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (parity(x) || in.count(x)) continue;
    std::vector<Mask> sub;
    for (Mask w : words) {
      if (!parity(w & x)) sub.push_back(w);
    }
    std::vector<Mask> nb = sub;
    for (Mask w : sub) nb.push_back(w ^ x);
    std::sort(nb.begin(), nb.end());
    out.insert(nb);
  }
  return out;
}

inline Mask permute(Mask m, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (m >> i & 1) out |= Mask{1} << perm[i];
  }
  return out;
}

// Tries all n! coordinate permutations.
inline bool equivalent(const std::vector<Mask>& gens_a, const std::vector<Mask>& words_b, std::size_t n) {
  if (span(gens_a).size() != words_b.size()) return false;
  std::vector<char> b(std::size_t{1} << n, 0);
  for (Mask w : words_b) b[w] = 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (std::all_of(gens_a.begin(), gens_a.end(), [&](Mask g) { return b[permute(g, perm)] != 0; })) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Backtracking over coordinate images: once the images of coordinates
// 0..t are fixed, every codeword of A supported there must land in B.
inline bool equivalent_backtrack(const std::vector<Mask>& words_a, const std::vector<Mask>& words_b, std::size_t n) {
  if (words_a.size() != words_b.size() || histogram(words_a, n) != histogram(words_b, n)) return false;
  std::vector<char> in_b(std::size_t{1} << n, 0);
  for (Mask w : words_b) in_b[w] = 1;
  std::vector<std::vector<Mask>> closing(n);  // words whose highest coordinate is t
  for (Mask w : words_a) {
    if (w) closing[31 - std::countl_zero(w)].push_back(w);
  }
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  auto go = [&](auto& self, std::size_t t) -> bool {
    if (t == n) return true;
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img]) continue;
      perm[t] = img;
      bool ok = true;
      for (Mask w : closing[t]) {
        Mask out = 0;
        for (std::size_t i = 0; i <= t; ++i) {
          if (w >> i & 1) out |= Mask{1} << perm[i];
        }
        if (!in_b[out]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[img] = 1;
      if (self(self, t + 1)) return true;
      used[img] = 0;
    }
    return false;
  };
  return go(go, 0);
}

// Class label per code, by pairwise exhaustive comparison against class leaders.
inline std::vector<std::size_t> classify(const std::vector<sdcode::LinearCode>& codes) {
  std::vector<std::size_t> label(codes.size());
  std::vector<std::size_t> leaders;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto gens = generators(codes[i]);
    const auto hist = histogram(span(gens), codes[i].length());
    bool placed = false;
    for (std::size_t l = 0; l < leaders.size() && !placed; ++l) {
      const auto& lead = codes[leaders[l]];
      if (lead.length() != codes[i].length()) continue;
      const auto words = span(lead);
      if (histogram(words, lead.length()) != hist) continue;
      if (equivalent(gens, words, lead.length())) {
        label[i] = l;
        placed = true;
      }
    }
    if (!placed) {
      label[i] = leaders.size();
      leaders.push_back(i);
    }
  }
  return label;
}

// Random self-dual code of length n: i2^{n/2}, a few random neighbor steps,
// then a random coordinate permutation.
inline sdcode::LinearCode random_self_dual(std::size_t n, std::mt19937_64& rng) {
  std::vector<Mask> gens;
  for (std::size_t i = 0; i < n / 2; ++i) gens.push_back(Mask{3} << (2 * i));
  std::uniform_int_distribution<Mask> pick(1, (Mask{1} << n) - 1);
  const int steps = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int s = 0; s < steps; ++s) {
    const auto words = span(gens);
    const std::set<Mask> in(words.begin(), words.end());
    Mask x = 0;
    for (int tries = 0; tries < 1000; ++tries) {
      const Mask cand = pick(rng);
      if (!parity(cand) && !in.count(cand)) {
        x = cand;
        break;
      }
    }
    if (!x) break;
    std::vector<Mask> next{x};
    for (Mask w : words) {
      if (!parity(w & x)) next.push_back(w);
    }
    gens = next;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<sdcode::BitVector> rows;
  for (Mask g : gens) rows.push_back(to_vector(permute(g, perm), n));
  return sdcode::LinearCode::from_rows(rows, n);
}

}  // namespace oracle
