#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace sdcode;
using namespace testing_support;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_code(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(CodeFile, RoundTrip) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const NamedCode c{"c" + std::to_string(t), oracle::random_self_dual(2 * (1 + t), rng)};
    const auto back = parse_code(format_code(c));
    EXPECT_EQ(back.name, c.name);
    EXPECT_EQ(back.code, c.code);
  }
  const NamedCode big{"C60_1", paper().build("C60_1")};
  const auto text = format_code(big);
  EXPECT_NE(text.find("\"k\": 30"), std::string::npos);
  EXPECT_EQ(parse_code(text).code, big.code);
}

TEST(CodeFile, AcceptsNonEchelonRows) {
  const auto c = parse_code(R"({"name": "x", "n": 4, "rows": ["1111", "1100", "0011"]})");
  EXPECT_EQ(c.code.dimension(), 2u);
  EXPECT_EQ(c.code.rows()[0].to_string(), "1100");
}

TEST(CodeFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("{\n \"n\": 4,\n \"rows\": [\n  \"1100\",\n  \"11x0\"\n ]\n}"), 5u);
  EXPECT_EQ(parse_error_line("{\n \"n\": 4,\n \"rows\": [\n  \"1100\",\n  \"110\"\n ]\n}"), 5u);
  EXPECT_EQ(parse_error_line("{\n \"n\": 4,\n \"k\": 2,\n \"rows\": [\"1100\"]\n}"), 3u);
  EXPECT_EQ(parse_error_line("{\n \"n\": -4,\n \"rows\": []\n}"), 2u);
  EXPECT_EQ(parse_error_line("{\n \"n\": 4,\n \"rows\": [\"1100\",,]\n}"), 3u);
  EXPECT_GE(parse_error_line("{\"rows\": []}"), 1u);
  EXPECT_THROW(parse_code("[1, 2]"), ParseError);
}

TEST(CodeFile, ReadFromDisk) {
  const auto path = (std::filesystem::temp_directory_path() / "sdcode_io_test.json").string();
  write_text(path, format_code({"i2", code_of({"11"})}));
  EXPECT_EQ(read_code_file(path).code, code_of({"11"}));
  write_text(path, "{\n\"n\": 2,\n\"rows\": [\"1\"]}");
  try {
    read_code_file(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(path), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(read_text(path), ParseError);
}

TEST(DistributionFile, RoundTrip) {
  const auto w = weight_distribution(paper().build("C58_1"));
  const auto text = format_distribution(w);
  EXPECT_EQ(text.rfind("weight,count\n0,1\n", 0), 0u);
  EXPECT_EQ(text.find(",0\n"), std::string::npos);
  EXPECT_EQ(parse_distribution(text, 58), static_cast<const Distribution&>(w));
  try {
    parse_distribution("weight,count\n0,1\n2,x\n", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_distribution("w,c\n", 4), ParseError);
  EXPECT_THROW(parse_distribution("weight,count\n9,1\n", 4), ParseError);
}

TEST(PairFile, RoundTrip) {
  SearchOptions opt;
  opt.block = 7;
  opt.d_target = 6;
  const auto pairs = search_four_circulant(opt);
  EXPECT_EQ(parse_pairs(format_pairs(pairs)), pairs);
  const auto parsed = parse_pairs("# comment\n\n101;011\n");
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0].block, 3u);
  try {
    parse_pairs("101;011\n10;011\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_pairs("101011\n"), ParseError);
}

TEST(DescriptorFile, RoundTrip) {
  const NeighborDescriptor d{"C60_1", {4, 8, 9, 32, 42, 43, 48, 51, 53, 54, 56, 60}, "D60_3"};
  const auto text = format_descriptor(d) + "\n" + format_descriptor({"C60_2", {1, 2}, ""});
  const auto back = parse_descriptors(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], d);
  EXPECT_EQ(back[1].support, (std::vector<std::size_t>{1, 2}));
  try {
    parse_descriptors(text + "{\"base\": \"x\", \"supp\": [0]}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(IndexList, Parse) {
  EXPECT_EQ(parse_index_list("4,8,9"), (std::vector<std::size_t>{4, 8, 9}));
  EXPECT_THROW(parse_index_list("4,,9"), ArgumentError);
  EXPECT_THROW(parse_index_list("0"), ArgumentError);
  EXPECT_THROW(parse_index_list("a"), ArgumentError);
}

TEST(Report, OneBasedPermutations) {
  const std::vector<LinearCode> codes{code_of({"1100", "0011"}), code_of({"1010", "0101"})};
  const auto classes = classify(codes);
  const std::vector<std::string> names{"a", "b"};
  const auto r = classification_report(names, classes);
  EXPECT_EQ(r["class_count"], 1);
  for (const auto& perm : r["classes"][0]["permutations"]) {
    std::vector<std::size_t> p;
    for (const auto& v : perm) p.push_back(v.get<std::size_t>());
    std::sort(p.begin(), p.end());
    EXPECT_EQ(p, (std::vector<std::size_t>{1, 2, 3, 4}));
  }
}

TEST(PaperData, Integrity) {
  EXPECT_EQ(sha256_hex(kPaperDataJson), kPaperDataSha256);
  const auto& pd = paper();
  EXPECT_EQ(pd.table("T1").size(), 13u);
  EXPECT_EQ(pd.table("T5").size(), 18u);
  EXPECT_THROW(pd.entry("nope"), ArgumentError);
  EXPECT_THROW(pd.table("T9"), ArgumentError);
  EXPECT_THROW(PaperData::parse("{}"), ParseError);
  EXPECT_THROW(PaperData::parse(R"({"four_circulant": [], "subtractions": [],
      "neighbors": [{"name": "a", "base": "b", "supp": [1, 2]}, {"name": "b", "base": "a", "supp": [1, 2]}]})")
                   .build("a"),
               ParseError);
}

TEST(Manifest, DigestsAndDeterminism) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  auto make = [] {
    RunManifest m;
    m.command = "search";
    m.parameters = {{"block", 7}};
    m.add_input("in", "data");
    m.add_output("out", format_pairs(search_four_circulant({7, 6})));
    return m;
  };
  const auto a = make(), b = make();
  EXPECT_EQ(a.output_digests, b.output_digests);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(manifest_path("x/out.txt"), "x/out.txt.manifest.json");
}
