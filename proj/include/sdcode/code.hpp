#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdcode/errors.hpp"
#include "sdcode/gf2.hpp"

namespace sdcode {

// A binary linear [n, k] code, held as its reduced row echelon generator.
// Two codes compare equal iff they have the same row space.
class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode from_rows(std::span<const BitVector> rows, std::size_t n) {
    for (const auto& r : rows) {
      if (r.length() != n) {
        throw DimensionError("row of length " + std::to_string(r.length()) + " for a length-" +
                             std::to_string(n) + " code");
      }
    }
    auto ech = rref(BitMatrix(n, {rows.begin(), rows.end()}));
    LinearCode c;
    c.n_ = n;
    c.gen_ = BitMatrix(n, {ech.reduced.data().begin(),
                           ech.reduced.data().begin() + static_cast<std::ptrdiff_t>(ech.rank)});
    c.pivots_ = std::move(ech.pivots);
    return c;
  }

  static LinearCode from_matrix(const BitMatrix& m) { return from_rows(m.span(), m.cols()); }

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const BitMatrix& generator() const noexcept { return gen_; }
  std::span<const BitVector> rows() const noexcept { return gen_.span(); }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  // Clears every pivot coordinate of v using the generator rows. The result is
  // the lexicographically smallest element of the coset v + C.
  BitVector reduce(BitVector v) const noexcept {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      if (v.test(pivots_[r])) v ^= gen_[r];
    }
    return v;
  }

  bool contains(const BitVector& v) const {
    if (v.length() != n_) return false;
    return reduce(v).none();
  }

  bool contains(const LinearCode& sub) const {
    if (sub.length() != n_) return false;
    return std::all_of(sub.rows().begin(), sub.rows().end(), [&](const BitVector& r) { return contains(r); });
  }

  // Image under the coordinate permutation i -> perm[i] (0-based).
  LinearCode permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.n_ == b.n_ && a.gen_ == b.gen_; }

 private:
  std::size_t n_ = 0;
  BitMatrix gen_;
  std::vector<std::size_t> pivots_;
};

struct NamedCode {
  std::string name;
  LinearCode code;
};

inline BitVector permute(const BitVector& v, std::span<const std::size_t> perm) {
  BitVector out(v.length());
  v.for_each_set([&](std::size_t i) { out.set(perm[i]); });
  return out;
}

inline LinearCode LinearCode::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) {
    throw DimensionError("permutation of size " + std::to_string(perm.size()) + " for length " +
                         std::to_string(n_));
  }
  std::vector<BitVector> rows;
  rows.reserve(dimension());
  for (const auto& r : gen_.data()) rows.push_back(permute(r, perm));
  return from_rows(rows, n_);
}

inline LinearCode dual(const LinearCode& c) {
  return LinearCode::from_matrix(kernel(BitMatrix(c.length(), {c.rows().begin(), c.rows().end()})));
}

inline bool is_self_orthogonal(const LinearCode& c) {
  const auto rows = c.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (rows[i].dot(rows[j])) return false;
    }
  }
  return true;
}

inline bool is_self_dual(const LinearCode& c) {
  return c.length() % 2 == 0 && 2 * c.dimension() == c.length() && is_self_orthogonal(c);
}

inline bool contains_all_ones(const LinearCode& c) { return c.contains(BitVector::ones(c.length())); }

enum class ParityClass { singly_even, doubly_even, odd_containing };

inline std::string to_string(ParityClass p) {
  switch (p) {
    case ParityClass::singly_even: return "singly-even";
    case ParityClass::doubly_even: return "doubly-even";
    case ParityClass::odd_containing: return "odd-containing";
  }
  return "?";
}

// wt(a+b) = wt(a) + wt(b) - 2|a∩b|, so generator weights mod 4 plus pairwise
// intersection parities decide the class of the whole span.
inline ParityClass parity_class(const LinearCode& c) {
  const auto rows = c.rows();
  bool all_zero_mod4 = true;
  for (const auto& r : rows) {
    if (r.weight() % 2) return ParityClass::odd_containing;
    if (r.weight() % 4) all_zero_mod4 = false;
  }
  if (!all_zero_mod4) return ParityClass::singly_even;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].dot(rows[j])) return ParityClass::singly_even;
    }
  }
  return ParityClass::doubly_even;
}

// Codewords of weight ≡ 0 (mod 4). On a self-orthogonal code c -> wt(c)/2 mod 2
// is linear, so this is its kernel.
inline LinearCode doubly_even_subcode(const LinearCode& c) {
  if (!is_self_orthogonal(c)) throw DomainError("doubly-even subcode requires a self-orthogonal code");
  std::vector<BitVector> rows;
  std::optional<BitVector> odd;
  for (const auto& r : c.rows()) {
    if (r.weight() % 4 == 0) {
      rows.push_back(r);
    } else if (!odd) {
      odd = r;
    } else {
      rows.push_back(r ^ *odd);
    }
  }
  return LinearCode::from_rows(rows, c.length());
}

// Shadow S = C0^⊥ \ C of a singly even self-dual code, kept implicit as C0 plus
// the two coset representatives (each the lexicographically least vector of
// its coset, stored in ascending order).
struct ShadowParts {
  LinearCode c0;
  std::array<BitVector, 2> coset_reps;
};

inline ShadowParts shadow_parts(const LinearCode& c) {
  if (!is_self_dual(c) || parity_class(c) != ParityClass::singly_even) {
    throw DomainError("shadow requires a singly even self-dual code");
  }
  ShadowParts out;
  out.c0 = doubly_even_subcode(c);
  const LinearCode c0_dual = dual(out.c0);
  const BitVector* outside = nullptr;
  for (const auto& r : c0_dual.rows()) {
    if (!c.contains(r)) {
      outside = &r;
      break;
    }
  }
  const BitVector* singly = nullptr;
  for (const auto& r : c.rows()) {
    if (r.weight() % 4 == 2) {
      singly = &r;
      break;
    }
  }
  if (!outside || !singly) throw InternalError("shadow coset structure inconsistent");
  out.coset_reps = {out.c0.reduce(*outside), out.c0.reduce(*outside ^ *singly)};
  if (out.coset_reps[1] < out.coset_reps[0]) std::swap(out.coset_reps[0], out.coset_reps[1]);
  return out;
}

// Drops the given 0-based bit positions, closing the gaps.
inline BitVector delete_positions(const BitVector& v, std::span<const std::size_t> drop) {
  BitVector out(v.length() - drop.size());
  std::size_t o = 0;
  for (std::size_t i = 0; i < v.length(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) != drop.end()) continue;
    out.set(o++, v.test(i));
  }
  return out;
}

// Self-dual [n-2, n/2-1] code from the codewords with c_i = c_j, both
// coordinates then deleted. i and j are 1-based.
inline LinearCode subtract_coordinates(const LinearCode& c, std::size_t i, std::size_t j) {
  const std::size_t n = c.length();
  if (i == j) throw ArgumentError("subtraction needs two distinct coordinates");
  if (i < 1 || j < 1 || i > n || j > n) {
    throw ArgumentError("coordinates (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                        std::to_string(n));
  }
  if (!is_self_dual(c)) throw ArgumentError("subtraction requires a self-dual code");
  const std::size_t bi = i - 1, bj = j - 1;
  std::vector<BitVector> agree;
  std::optional<BitVector> differ;
  for (const auto& r : c.rows()) {
    if (r.test(bi) == r.test(bj)) {
      agree.push_back(r);
    } else if (!differ) {
      differ = r;
    } else {
      agree.push_back(r ^ *differ);
    }
  }
  const std::array<std::size_t, 2> drop = {std::min(bi, bj), std::max(bi, bj)};
  std::vector<BitVector> rows;
  rows.reserve(agree.size());
  for (const auto& r : agree) rows.push_back(delete_positions(r, drop));
  auto out = LinearCode::from_rows(rows, n - 2);
  if (!is_self_dual(out)) {
    throw InternalError("subtracting (" + std::to_string(i) + "," + std::to_string(j) +
                        ") did not produce a self-dual code");
  }
  return out;
}

}  // namespace sdcode
