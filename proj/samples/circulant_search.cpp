// Small four-circulant search: block 7, d >= 6, then classify the hits.
#include <iostream>

#include "sdcode/sdcode.hpp"

int main() {
  sdcode::SearchOptions opt;
  opt.block = 7;
  opt.d_target = 6;
  opt.congruence = 1;
  const auto pairs = sdcode::search_four_circulant(opt);
  std::cout << pairs.size() << " pairs with d >= 6 at length 28\n";

  const auto result = sdcode::classify_pairs(pairs);
  std::cout << result.classes.size() << " inequivalent codes\n";
  for (const auto& cls : result.classes) {
    const auto& p = pairs[cls.representative];
    const auto code = sdcode::build_four_circulant(p);
    std::cout << "  " << p.ra.to_string() << " " << p.rb.to_string() << "  d=" << sdcode::min_weight(code).weight
              << "  " << cls.members.size() << " pairs\n";
  }
}
