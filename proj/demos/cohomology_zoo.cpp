// Schur multipliers and mod-m second cohomology for the small groups the
// library constructs directly, no input files involved.

#include <iostream>
#include <string>
#include <vector>

#include "cliffpair/cohomology.hpp"

using namespace cliffpair;

namespace {

std::string factors_str(const H2Result& h) {
  if (h.invariant_factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < h.invariant_factors.size(); ++i)
    out += (i ? " x " : "") + ("Z/" + std::to_string(h.invariant_factors[i]));
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, GroupPtr>> zoo;
  zoo.emplace_back("C4", Group::cyclic(4));
  zoo.emplace_back("C2 x C2", direct_product({Group::cyclic(2), Group::cyclic(2)}).group);
  zoo.emplace_back("S3", Group::from_permutations(3, {"(1 2)", "(1 2 3)"}));
  zoo.emplace_back("D8", Group::from_permutations(4, {"(1 2 3 4)", "(1 3)"}));
  zoo.emplace_back("A4", Group::from_permutations(4, {"(1 2 3)", "(1 2)(3 4)"}));
  zoo.emplace_back("C2 x C2 x C2",
                   direct_product({Group::cyclic(2), Group::cyclic(2), Group::cyclic(2)}).group);

  std::cout << "Schur multipliers (H2 with coefficients Z/|G|):\n";
  for (const auto& [name, g] : zoo)
    std::cout << "  " << name << ": " << factors_str(schur_multiplier(g)) << "\n";

  std::cout << "\nH2(C2 x C2, Z/m) as m varies:\n";
  GroupPtr v4 = direct_product({Group::cyclic(2), Group::cyclic(2)}).group;
  for (long m : {2, 3, 4, 6})
    std::cout << "  m = " << m << ": " << factors_str(h2_cyclic(v4, m)) << "\n";

  std::cout << "\nH2(S3, Z/m) as m varies:\n";
  GroupPtr s3 = Group::from_permutations(3, {"(1 2)", "(1 2 3)"});
  for (long m : {2, 3, 6})
    std::cout << "  m = " << m << ": " << factors_str(h2_cyclic(s3, m)) << "\n";

  return 0;
}
