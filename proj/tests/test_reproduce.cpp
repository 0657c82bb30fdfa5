#include <gtest/gtest.h>

#include "support.hpp"

using namespace sdcode;
using namespace testing_support;

TEST(Reproduce, BalanceTable) {
  const auto r = reproduce_table(paper(), "C7");
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.rows.size(), 2u);
}

TEST(Reproduce, NeighborTable) {
  const auto r = reproduce_table(paper(), "T2");
  EXPECT_EQ(r.rows.size(), 7u);
  for (const auto& row : r.rows) EXPECT_TRUE(row.pass) << row.name << " " << row.detail;
}

TEST(Reproduce, SearchesNeedExtended) {
  const auto r = reproduce_table(paper(), "P3");
  EXPECT_TRUE(r.skipped);
  EXPECT_FALSE(r.pass());
  EXPECT_THROW(reproduce_table(paper(), "T99"), ArgumentError);
}

TEST(Reproduce, DetectsWrongExpectations) {
  auto doc = paper().document();
  for (auto& e : doc["neighbors"]) {
    if (e["name"] == "D60_3") e["beta"] = 4;
  }
  const auto bad = PaperData::parse(doc.dump());
  const auto r = reproduce_table(bad, "T2");
  EXPECT_FALSE(r.pass());
  std::size_t failed = 0;
  for (const auto& row : r.rows) failed += !row.pass;
  EXPECT_EQ(failed, 1u);
}
