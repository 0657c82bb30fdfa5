// Permutes a code at random and recovers the permutation.
#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>

#include "sdcode/paper_data_embedded.hpp"
#include "sdcode/sdcode.hpp"

using namespace sdcode;

int main() {
  const auto data = PaperData::parse(kPaperDataJson);
  const auto a = data.build("C58_1");
  std::vector<std::size_t> perm(a.length());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64{7});
  const auto b = a.permuted(perm);

  const auto cert = are_equivalent(a, b);
  std::cout << "C58_1 vs shuffled copy: " << (cert.equivalent() ? "equivalent" : "distinct") << ", "
            << cert.nodes << " search nodes, certificate "
            << (cert.perm && verify_permutation(a, b, *cert.perm) ? "checks" : "fails") << "\n";

  const auto other = are_equivalent(a, data.build("C58_3"));
  std::cout << "C58_1 vs C58_3: " << (other.equivalent() ? "equivalent" : "distinct (" + other.distinct_reason + ")")
            << "\n";
}
