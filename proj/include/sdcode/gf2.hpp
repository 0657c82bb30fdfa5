#pragma once

// Bit-packed vectors and matrices over GF(2), sized for lengths up to 128.
//
// Internally coordinates are 0-based bit positions (coordinate 1 of the
// external 1-based numbering is bit 0 of word 0). Every function that takes
// or returns a coordinate *set* in the external sense (supports, serialized
// strings) uses the 1-based convention.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdcode/errors.hpp"

namespace sdcode {

inline constexpr std::size_t kMaxLength = 128;

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = kMaxLength / kWordBits;

  BitVector() = default;

  explicit BitVector(std::size_t length) : length_(length) {
    if (length > kMaxLength) {
      throw DimensionError("vector length " + std::to_string(length) + " exceeds " +
                           std::to_string(kMaxLength));
    }
  }

  BitVector(std::size_t length, Word lo, Word hi) : BitVector(length) {
    words_ = {lo, hi};
    clear_tail();
  }

  // '0'/'1' string, leftmost character is coordinate 1.
  static BitVector parse(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.set(i);
      } else if (text[i] != '0') {
        throw ArgumentError("invalid character '" + std::string(1, text[i]) +
                            "' in binary vector");
      }
    }
    return v;
  }

  // Support given as 1-based coordinates.
  static BitVector from_support(std::size_t length, std::span<const std::size_t> support) {
    BitVector v(length);
    for (std::size_t c : support) {
      if (c < 1 || c > length) {
        throw ArgumentError("coordinate " + std::to_string(c) + " outside 1.." +
                            std::to_string(length));
      }
      v.set(c - 1);
    }
    return v;
  }

  static BitVector ones(std::size_t length) {
    BitVector v(length);
    v.words_ = {~Word{0}, ~Word{0}};
    v.clear_tail();
    return v;
  }

  static BitVector unit(std::size_t length, std::size_t bit) {
    BitVector v(length);
    v.set(bit);
    return v;
  }

  std::size_t length() const noexcept { return length_; }
  const std::array<Word, kWords>& words() const noexcept { return words_; }
  Word word(std::size_t w) const noexcept { return words_[w]; }

  bool test(std::size_t bit) const noexcept { return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1u; }

  void set(std::size_t bit, bool value = true) noexcept {
    const Word mask = Word{1} << (bit % kWordBits);
    if (value) {
      words_[bit / kWordBits] |= mask;
    } else {
      words_[bit / kWordBits] &= ~mask;
    }
  }

  void flip(std::size_t bit) noexcept { words_[bit / kWordBits] ^= Word{1} << (bit % kWordBits); }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }

  bool none() const noexcept { return (words_[0] | words_[1]) == 0; }
  bool any() const noexcept { return !none(); }

  // Standard inner product over GF(2).
  bool dot(const BitVector& other) const noexcept {
    return (std::popcount(words_[0] & other.words_[0]) + std::popcount(words_[1] & other.words_[1])) & 1;
  }

  // Lowest set bit position, or length() when zero.
  std::size_t first_set() const noexcept {
    if (words_[0]) return static_cast<std::size_t>(std::countr_zero(words_[0]));
    if (words_[1]) return kWordBits + static_cast<std::size_t>(std::countr_zero(words_[1]));
    return length_;
  }

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      Word bits = words_[w];
      while (bits) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  // 1-based coordinates of the set bits, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    out.reserve(weight());
    for_each_set([&](std::size_t i) { out.push_back(i + 1); });
    return out;
  }

  BitVector& operator^=(const BitVector& other) noexcept {
    words_[0] ^= other.words_[0];
    words_[1] ^= other.words_[1];
    return *this;
  }

  BitVector& operator&=(const BitVector& other) noexcept {
    words_[0] &= other.words_[0];
    words_[1] &= other.words_[1];
    return *this;
  }

  BitVector& operator|=(const BitVector& other) noexcept {
    words_[0] |= other.words_[0];
    words_[1] |= other.words_[1];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  // Orders like the serialized strings: the first differing coordinate
  // decides, and '0' sorts before '1'. Lengths are compared first.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t w = 0; w < kWords; ++w) {
      const Word diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        const Word lowest = diff & (~diff + 1);
        return (a.words_[w] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void clear_tail() noexcept {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * kWordBits;
      if (length_ <= lo) {
        words_[w] = 0;
      } else if (length_ < lo + kWordBits) {
        words_[w] &= (Word{1} << (length_ - lo)) - 1;
      }
    }
  }

  std::array<Word, kWords> words_{};
  std::size_t length_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    if (cols > kMaxLength) {
      throw DimensionError("matrix width " + std::to_string(cols) + " exceeds " +
                           std::to_string(kMaxLength));
    }
    for (const auto& r : rows_) {
      if (r.length() != cols_) {
        throw DimensionError("row of length " + std::to_string(r.length()) +
                             " in matrix with " + std::to_string(cols_) + " columns");
      }
    }
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_.empty(); }

  const BitVector& operator[](std::size_t r) const noexcept { return rows_[r]; }
  BitVector& operator[](std::size_t r) noexcept { return rows_[r]; }
  const std::vector<BitVector>& data() const noexcept { return rows_; }
  std::span<const BitVector> span() const noexcept { return rows_; }

  bool test(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }

  void append(const BitVector& row) {
    if (row.length() != cols_) {
      throw DimensionError("appending row of length " + std::to_string(row.length()) +
                           " to matrix with " + std::to_string(cols_) + " columns");
    }
    rows_.push_back(row);
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      rows_[r].for_each_set([&](std::size_t c) { t.rows_[c].set(r); });
    }
    return t;
  }

  // this * other
  BitMatrix multiply(const BitMatrix& other) const {
    if (cols_ != other.rows()) {
      throw DimensionError("product of " + std::to_string(rows()) + "x" + std::to_string(cols_) +
                           " and " + std::to_string(other.rows()) + "x" + std::to_string(other.cols()));
    }
    BitMatrix out(rows_.size(), other.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      rows_[r].for_each_set([&](std::size_t c) { out.rows_[r] ^= other.rows_[c]; });
    }
    return out;
  }

  // m·v^T as a vector with one entry per row.
  BitVector syndrome(const BitVector& v) const {
    if (v.length() != cols_) {
      throw DimensionError("syndrome of length-" + std::to_string(v.length()) + " vector by " +
                           std::to_string(cols_) + "-column matrix");
    }
    BitVector s(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) s.set(r, rows_[r].dot(v));
    return s;
  }

  static BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) {
      throw DimensionError("stacking matrices with " + std::to_string(top.cols()) + " and " +
                           std::to_string(bottom.cols()) + " columns");
    }
    std::vector<BitVector> rows = top.rows_;
    rows.insert(rows.end(), bottom.rows_.begin(), bottom.rows_.end());
    return BitMatrix(top.cols(), std::move(rows));
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowEchelon {
  BitMatrix reduced;                 // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // 0-based pivot columns, ascending
};

// Reduced row echelon form; pivots are taken lowest column first, so the
// result depends only on the row space.
inline RowEchelon rref(const BitMatrix& m) {
  RowEchelon out{m, 0, {}};
  auto& rows = out.reduced;
  const std::size_t nrows = rows.rows();
  for (std::size_t col = 0; col < m.cols() && out.rank < nrows; ++col) {
    std::size_t pick = out.rank;
    while (pick < nrows && !rows[pick].test(col)) ++pick;
    if (pick == nrows) continue;
    std::swap(rows[pick], rows[out.rank]);
    const BitVector pivot_row = rows[out.rank];
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r != out.rank && rows[r].test(col)) rows[r] ^= pivot_row;
    }
    out.pivots.push_back(col);
    ++out.rank;
  }
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

// Basis of {v : m·v^T = 0}, in reduced echelon form.
inline BitMatrix kernel(const BitMatrix& m) {
  const auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  BitMatrix basis(n, std::vector<BitVector>{});
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(n);
    v.set(free);
    for (std::size_t r = 0; r < ech.rank; ++r) {
      if (ech.reduced[r].test(free)) v.set(ech.pivots[r]);
    }
    basis.append(v);
  }
  auto red = rref(basis);
  return BitMatrix(n, {red.reduced.data().begin(), red.reduced.data().begin() + static_cast<std::ptrdiff_t>(red.rank)});
}

// Nonzero rows of rref(m).
inline BitMatrix row_basis(const BitMatrix& m) {
  auto ech = rref(m);
  return BitMatrix(m.cols(), {ech.reduced.data().begin(), ech.reduced.data().begin() + static_cast<std::ptrdiff_t>(ech.rank)});
}

// Basis of rowspace(a) ∩ rowspace(b), as the annihilator of the sum of annihilators.
inline BitMatrix intersect(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("intersecting subspaces of lengths " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.cols()));
  }
  const BitMatrix dual_sum = BitMatrix::stack(kernel(a), kernel(b));
  if (dual_sum.empty()) return row_basis(a);
  return kernel(dual_sum);
}

inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  return a.cols() == b.cols() && row_basis(a) == row_basis(b);
}

}  // namespace sdcode

template <>
struct std::hash<sdcode::BitVector> {
  std::size_t operator()(const sdcode::BitVector& v) const noexcept {
    std::uint64_t h = v.word(0) * 0x9E3779B97F4A7C15ull;
    h ^= (v.word(1) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ v.length());
  }
};
