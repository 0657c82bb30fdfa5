#pragma once

#include <random>
#include <vector>

#include "properties.hpp"
#include "sdcode/manifest.hpp"
#include "sdcode/paper_data_embedded.hpp"

namespace testing_support {

using namespace sdcode;

inline const PaperData& paper() {
  static const PaperData data = PaperData::parse(kPaperDataJson);
  return data;
}

inline BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::vector<BitVector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(random_vector(cols, rng));
  return BitMatrix(cols, std::move(r));
}

inline LinearCode code_of(std::initializer_list<const char*> rows) {
  std::vector<BitVector> v;
  for (const char* r : rows) v.push_back(BitVector::parse(r));
  return LinearCode::from_rows(v, v.front().length());
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_support
