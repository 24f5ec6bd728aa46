// The quaternion group over C2 with its faithful linear kernel character,
// and what the standard constructions do to it: semi-invariance, the center
// of the orbit algebra, conjugates, products, and induction into C2 x C2.

#include <iostream>

#include "cliffpair/cliffordpairs.hpp"

using namespace cliffpair;

namespace {

// 1, -1, i, -i, j, -j, k, -k; element 2a is the a-th unit, 2a+1 its negative
std::vector<std::vector<int>> quaternion_table() {
  static const int bt[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int st[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = st[a / 2][b / 2];
      if (a % 2) sign = -sign;
      if (b % 2) sign = -sign;
      t[a][b] = 2 * bt[a / 2][b / 2] + (sign < 0 ? 1 : 0);
    }
  return t;
}

std::string field_str(const FieldSpec& f) {
  if (f.conductor() == 1) return "Q";
  std::string out = "Q(zeta" + std::to_string(f.conductor()) + ")";
  if (f.stabilizer() != std::vector<long>{1}) out += " fixed by " + std::to_string(f.stabilizer().size()) + " automorphisms";
  return out;
}

void describe(const char* label, const CliffordPair& p, const FieldSpec& F) {
  CenterAlgebraInfo c = center_algebra(p, F);
  std::cout << label << ": |Ghat| = " << p.ghat()->order() << ", |N| = " << p.n.group->order()
            << ", center " << field_str(c.field) << " with r = " << c.orbit_size << "\n";
}

}  // namespace

int main() {
  const FieldSpec F = FieldSpec::rationals();
  auto q8 = Group::from_cayley(quaternion_table());
  auto c2 = Group::cyclic(2);
  Hom kappa = make_hom(q8, c2, {0, 0, 0, 0, 1, 1, 1, 1});

  // lambda on the kernel <i>: 1, -1, i, -i go to 1, -1, zeta4, zeta4^3
  auto kv = subgroup_group(q8, kernel_of(kappa));
  Character lambda{kv.group,
                   {Cyclotomic(Rational(1)), Cyclotomic(Rational(-1)),
                    Cyclotomic::root_of_unity(4, 1), Cyclotomic::root_of_unity(4, 3)}};
  CliffordPair p = pair_make(kappa, lambda);

  auto alpha = semi_invariance(p, F);
  std::cout << "quaternion pair over Q is "
            << (alpha ? "semi-invariant" : "not semi-invariant") << "\n";
  if (alpha)
    std::cout << "the coset of j sends zeta4 to zeta4^" << alpha->map[1].rep
              << " (complex conjugation)\n";

  describe("pair", p, F);
  describe("conjugate", conjugate_pair(p), F);
  describe("product with itself", product_pair(p, p, F), F);
  describe("product with the conjugate", product_pair(p, conjugate_pair(p), F), F);

  // push the target into C2 x C2: the kernel becomes N x N, r doubles
  Product v4 = direct_product({c2, c2});
  describe("induced to C2 x C2", induce_pair(p, v4.embed[0], F), F);

  return 0;
}
