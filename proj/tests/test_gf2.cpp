#include <gtest/gtest.h>

#include "support.hpp"

using namespace sdcode;
using namespace testing_support;

TEST(BitVector, ParseAndFormatRoundTrip) {
  const auto v = BitVector::parse("0110001");
  EXPECT_EQ(v.length(), 7u);
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_EQ(v.to_string(), "0110001");
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{2, 3, 7}));
  EXPECT_TRUE(v.test(1));
  EXPECT_FALSE(v.test(0));
  EXPECT_THROW(BitVector::parse("01x"), ArgumentError);
}

TEST(BitVector, SupportRoundTripAcrossWordBoundary) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 63u, 64u, 65u, 127u, 128u}) {
    for (int t = 0; t < 20; ++t) {
      const auto v = random_vector(n, rng);
      EXPECT_EQ(BitVector::from_support(n, v.support()), v);
      EXPECT_EQ(BitVector::parse(v.to_string()), v);
    }
  }
  const std::size_t bad[] = {0};
  EXPECT_THROW(BitVector::from_support(4, bad), ArgumentError);
  const std::size_t over[] = {5};
  EXPECT_THROW(BitVector::from_support(4, over), ArgumentError);
  EXPECT_THROW(BitVector(129), DimensionError);
}

TEST(BitVector, TailStaysClear) {
  const BitVector v(10, ~0ull, ~0ull);
  EXPECT_EQ(v.weight(), 10u);
  EXPECT_EQ(BitVector::ones(70).weight(), 70u);
  EXPECT_TRUE(BitVector(5).none());
}

TEST(Rref, IdentityIsFixed) {
  const auto id = BitMatrix::identity(5);
  const auto e = rref(id);
  EXPECT_EQ(e.reduced, id);
  EXPECT_EQ(e.rank, 5u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Rref, SmallEchelon) {
  const BitMatrix m(4, {BitVector::parse("1100"), BitVector::parse("0110")});
  const auto e = rref(m);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced[0].to_string(), "1010");
  EXPECT_EQ(e.reduced[1].to_string(), "0110");
}

TEST(Rref, ZeroMatrix) {
  const auto e = rref(BitMatrix(3, 4));
  EXPECT_EQ(e.rank, 0u);
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Rref, RandomAgreesWithSpanOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(6, 10, rng);
    const auto e = rref(m);
    std::vector<oracle::Mask> gens, red;
    for (const auto& r : m.data()) gens.push_back(oracle::to_mask(r));
    for (const auto& r : e.reduced.data()) red.push_back(oracle::to_mask(r));
    const auto want = oracle::span(gens);
    EXPECT_EQ(oracle::span(red), want);
    EXPECT_EQ(std::size_t{1} << e.rank, want.size());
    EXPECT_EQ(rank(e.reduced), e.rank);
    for (std::size_t r = 0; r < e.rank; ++r) {
      for (std::size_t q = 0; q < e.rank; ++q) EXPECT_EQ(e.reduced.test(q, e.pivots[r]), q == r);
    }
    for (std::size_t r = e.rank; r < 6; ++r) EXPECT_TRUE(e.reduced[r].none());
  }
}

TEST(Kernel, Basics) {
  EXPECT_TRUE(kernel(BitMatrix::identity(6)).empty());
  const auto k = kernel(BitMatrix(4, {BitVector::ones(4)}));
  EXPECT_EQ(k.rows(), 3u);
  for (const auto& r : k.data()) EXPECT_EQ(r.weight() % 2, 0u);
}

TEST(Kernel, RandomAgreesWithExhaustiveOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(4, 8, rng);
    const auto k = kernel(m);
    EXPECT_EQ(k.rows() + rank(m), 8u);
    for (const auto& r : k.data()) EXPECT_TRUE(m.syndrome(r).none());
    std::vector<oracle::Mask> rows;
    for (const auto& r : m.data()) rows.push_back(oracle::to_mask(r));
    const auto want = oracle::dual_words(rows, 8);
    std::vector<oracle::Mask> kg;
    for (const auto& r : k.data()) kg.push_back(oracle::to_mask(r));
    EXPECT_EQ(oracle::span(kg), want);
  }
}

TEST(Intersect, Basics) {
  std::mt19937_64 rng(4);
  const auto a = row_basis(random_matrix(4, 9, rng));
  EXPECT_TRUE(same_row_space(intersect(a, a), a));
  const BitMatrix e1(4, {BitVector::parse("1000")}), e2(4, {BitVector::parse("0100")});
  EXPECT_TRUE(intersect(e1, e2).empty());
  EXPECT_THROW(intersect(e1, BitMatrix(5, {BitVector::parse("10000")})), DimensionError);
}

TEST(Intersect, RandomAgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = row_basis(random_matrix(5, 10, rng));
    const auto b = row_basis(random_matrix(5, 10, rng));
    const auto i = intersect(a, b);
    EXPECT_TRUE(same_row_space(i, intersect(b, a)));
    EXPECT_EQ(i.rows(), rank(a) + rank(b) - rank(BitMatrix::stack(a, b)));
    std::vector<oracle::Mask> ga, gb, gi;
    for (const auto& r : a.data()) ga.push_back(oracle::to_mask(r));
    for (const auto& r : b.data()) gb.push_back(oracle::to_mask(r));
    for (const auto& r : i.data()) gi.push_back(oracle::to_mask(r));
    const auto sa = oracle::span(ga), sb = oracle::span(gb);
    std::vector<oracle::Mask> both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
    EXPECT_EQ(oracle::span(gi), both);
  }
}

TEST(BitMatrix, TransposeAndProduct) {
  std::mt19937_64 rng(6);
  const auto m = random_matrix(5, 7, rng);
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.multiply(BitMatrix::identity(7)), m);
  EXPECT_THROW(m.multiply(BitMatrix::identity(5)), DimensionError);
}
