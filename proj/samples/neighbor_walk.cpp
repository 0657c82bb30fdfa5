// Builds a few published codes by name, then walks the neighbors of a small code.
#include <iostream>

#include "sdcode/paper_data_embedded.hpp"
#include "sdcode/sdcode.hpp"

using namespace sdcode;

int main() {
  const auto data = PaperData::parse(kPaperDataJson);
  for (const char* name : {"C60_1", "D60_3", "J60_5"}) {
    const auto c = data.build(name);
    const auto p = low_weight_profile(c, 14);
    const auto f = classify_enumerator(p.weights, p.shadow);
    std::cout << name << ": [" << c.length() << "," << c.dimension() << "," << min_weight(c).weight << "] "
              << to_string(f.family);
    if (f.beta) std::cout << " beta=" << *f.beta;
    std::cout << "\n";
  }

  // i2^8 has 2^7 - 1 hyperplanes through the all-ones vector, two neighbors each.
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t supp[] = {2 * i + 1, 2 * i + 2};
    rows.push_back(BitVector::from_support(16, supp));
  }
  const auto base = LinearCode::from_rows(rows, 16);
  std::size_t d4 = 0, total = 0;
  enumerate_self_dual_neighbors(base, [&](std::uint64_t, const BitVector&, const LinearCode& n) {
    ++total;
    d4 += min_weight(n).weight >= 4;
    return true;
  });
  std::cout << total << " neighbors of i2^8, " << d4 << " with d >= 4\n";
}
