#include <gtest/gtest.h>

#include "support.hpp"

using namespace sdcode;
using namespace testing_support;

namespace {

// AA^T + BB^T = I from materialized matrices.
bool matrix_condition(const CirculantPair& p) {
  const auto a = circulant_matrix(p.ra), b = circulant_matrix(p.rb);
  const auto s = a.multiply(a.transpose());
  const auto t = b.multiply(b.transpose());
  for (std::size_t i = 0; i < p.block; ++i) {
    if ((s[i] ^ t[i]) != BitVector::unit(p.block, i)) return false;
  }
  return true;
}

// Generator (I_{2n} | [[A, B], [B^T, A^T]]) written out from the matrices.
std::vector<oracle::Mask> oracle_code(const CirculantPair& p) {
  const std::size_t n = p.block;
  const auto a = circulant_matrix(p.ra), b = circulant_matrix(p.rb);
  const auto at = a.transpose(), bt = b.transpose();
  std::vector<oracle::Mask> gens;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    oracle::Mask g = oracle::Mask{1} << i;
    const auto& l = i < n ? a[i] : bt[i - n];
    const auto& r = i < n ? b[i] : at[i - n];
    for (std::size_t j = 0; j < n; ++j) {
      if (l.test(j)) g |= oracle::Mask{1} << (2 * n + j);
      if (r.test(j)) g |= oracle::Mask{1} << (3 * n + j);
    }
    gens.push_back(g);
  }
  return gens;
}

std::vector<CirculantPair> brute_force_search(std::size_t n, std::size_t d, std::size_t bound, bool normalize) {
  std::vector<CirculantPair> out;
  for (oracle::Mask a = 0; a < (oracle::Mask{1} << n); ++a) {
    for (oracle::Mask b = 0; b < (oracle::Mask{1} << n); ++b) {
      CirculantPair p{n, oracle::to_vector(a, n), oracle::to_vector(b, n)};
      const std::size_t s = p.ra.weight() + p.rb.weight();
      if (!matrix_condition(p) || s % 4 != 1 || s < bound) continue;
      if (normalize && !p.rb.test(n - 1)) continue;
      if (oracle::min_weight(oracle::span(oracle_code(p))) < d) continue;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Circulant, Matrices) {
  EXPECT_EQ(circulant_matrix(BitVector::parse("100")), BitMatrix::identity(3));
  const auto ones = circulant_matrix(BitVector::parse("111"));
  for (const auto& r : ones.data()) EXPECT_EQ(r.to_string(), "111");
  const auto m = circulant_matrix(BitVector::parse("1101"));
  EXPECT_EQ(m[1].to_string(), "1110");
  EXPECT_EQ(m[3].to_string(), "1011");
  const auto& e = paper().entry("C60_1");
  const auto a = circulant_matrix(e.pair.ra);
  for (const auto& r : a.data()) EXPECT_EQ(r.weight(), 9u);
}

TEST(Circulant, RotationCommutes) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + t % 13, s = rng() % n;
    const auto r = random_vector(n, rng);
    const auto rotated = circulant_matrix(rotate_right(r, s));
    const auto m = circulant_matrix(r);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(rotated[i], rotate_right(m[i], s));
    EXPECT_EQ(circulant_matrix(transpose_first_row(r)), m.transpose());
  }
}

TEST(Circulant, BuildSmall) {
  const auto c = build_four_circulant({1, BitVector::parse("1"), BitVector::parse("0")});
  EXPECT_EQ(c, code_of({"1010", "0101"}));
  const auto& e = paper().entry("C60_1");
  const auto big = build_four_circulant(e.pair);
  EXPECT_EQ(big.length(), 60u);
  EXPECT_EQ(big.dimension(), 30u);
  EXPECT_THROW(build_four_circulant({3, BitVector::parse("10"), BitVector::parse("100")}), DimensionError);
}

TEST(Circulant, ConditionMatchesMatrixProduct) {
  std::mt19937_64 rng(32);
  int holds = 0;
  for (int t = 0; t < 10000; ++t) {
    CirculantPair p{15, random_vector(15, rng), random_vector(15, rng)};
    const bool want = matrix_condition(p);
    ASSERT_EQ(self_dual_condition(p), want) << p.ra.to_string() << ";" << p.rb.to_string();
    holds += want;
  }
  // Random pairs almost never qualify; check the published ones too.
  for (const auto& name : paper().names()) {
    const auto& e = paper().entry(name);
    if (e.kind != PaperCode::Kind::circulant) continue;
    EXPECT_TRUE(self_dual_condition(e.pair)) << name;
    EXPECT_TRUE(matrix_condition(e.pair)) << name;
  }
  EXPECT_TRUE(self_dual_condition({5, BitVector::parse("10000"), BitVector(5)}));
  (void)holds;
}

TEST(Circulant, SelfDualIffCondition) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + t % 8;
    CirculantPair p{n, random_vector(n, rng), random_vector(n, rng)};
    EXPECT_EQ(is_self_dual(build_four_circulant(p)), self_dual_condition(p));
  }
}

TEST(Circulant, PublishedCodes) {
  const auto g = paper().build("G60_13");
  EXPECT_TRUE(is_self_dual(g));
  EXPECT_EQ(min_weight(g).weight, 10u);
}

TEST(Search, MatchesBruteForceAtSmallBlocks) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t d : {2u, 4u, 6u}) {
      for (bool normalize : {true, false}) {
        SearchOptions opt;
        opt.block = n;
        opt.d_target = d;
        opt.last_b_entry_one = normalize;
        EXPECT_EQ(search_four_circulant(opt), brute_force_search(n, d, d - 1, normalize))
            << "block " << n << " d " << d << " normalize " << normalize;
      }
    }
  }
}

TEST(Search, BlockTwoCoversShiftsOfBruteForce) {
  SearchOptions opt;
  opt.block = 2;
  opt.d_target = 4;
  const auto got = search_four_circulant(opt);
  // Every unnormalized hit is a simultaneous shift of a normalized one.
  for (const auto& p : brute_force_search(2, 4, 3, false)) {
    bool covered = false;
    for (std::size_t s = 0; s < 2; ++s) {
      const CirculantPair q{2, rotate_right(p.ra, s), rotate_right(p.rb, s)};
      covered |= std::find(got.begin(), got.end(), q) != got.end();
    }
    EXPECT_TRUE(covered) << p.ra.to_string() << ";" << p.rb.to_string();
  }
}

TEST(Search, WeightsAndOrder) {
  SearchOptions opt;
  opt.block = 7;
  opt.d_target = 6;
  const auto pairs = search_four_circulant(opt);
  ASSERT_FALSE(pairs.empty());
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  for (const auto& p : pairs) {
    const auto s = p.ra.weight() + p.rb.weight();
    EXPECT_EQ(s % 4, 1u);
    EXPECT_GE(s, 5u);
    EXPECT_TRUE(p.rb.test(6));
    EXPECT_GE(min_weight(build_four_circulant(p)).weight, 6u);
  }
  opt.threads = 3;
  EXPECT_EQ(search_four_circulant(opt), pairs);
  opt.exact_weight = true;
  opt.d_target = 8;
  for (const auto& p : search_four_circulant(opt)) EXPECT_EQ(min_weight(build_four_circulant(p)).weight, 8u);
}

TEST(Search, Budget) {
  SearchOptions opt;
  opt.block = kMaxSearchBlock + 1;
  EXPECT_THROW(search_four_circulant(opt), ResourceError);
}

TEST(CanonicalPair, CertificatesMapCodes) {
  SearchOptions opt;
  opt.block = 7;
  opt.d_target = 4;
  for (const auto& p : search_four_circulant(opt)) {
    const auto t = canonical_pair(p);
    EXPECT_TRUE(verify_permutation(build_four_circulant(p), build_four_circulant(t.pair), t.perm));
  }
  EXPECT_THROW(canonical_pair({3, BitVector::parse("110"), BitVector::parse("000")}), ArgumentError);
}

TEST(CanonicalPair, ShiftedPairsShareClass) {
  std::mt19937_64 rng(34);
  const auto& e = paper().entry("C60_3");
  std::vector<CirculantPair> pairs{e.pair};
  for (int t = 0; t < 4; ++t) {
    const std::size_t s = rng() % 15;
    pairs.push_back({15, rotate_right(e.pair.ra, s), rotate_right(e.pair.rb, s)});
  }
  pairs.push_back(paper().entry("C60_9").pair);
  const auto r = classify_pairs(pairs);
  ASSERT_EQ(r.classes.size(), 2u);
  for (const auto& cls : r.classes) {
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
      EXPECT_TRUE(verify_permutation(build_four_circulant(pairs[cls.members[m]]),
                                     build_four_circulant(pairs[cls.representative]), cls.certificates[m]));
    }
  }
}

TEST(ClassifyPairs, SmallSearchAgreesWithGeneralClassify) {
  SearchOptions opt;
  opt.block = 7;
  opt.d_target = 4;
  const auto pairs = search_four_circulant(opt);
  std::vector<LinearCode> codes;
  for (const auto& p : pairs) codes.push_back(build_four_circulant(p));
  const auto a = classify_pairs(pairs);
  const auto b = classify(codes);
  ASSERT_EQ(a.classes.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_EQ(a.classes[i].members, b[i].members);
    EXPECT_EQ(a.classes[i].representative, b[i].representative);
  }
}
