#include <catch2/catch_amalgamated.hpp>

#include "cliffpair/charkit.hpp"

using namespace cliffpair;

namespace {

Cyclotomic zeta(long n, long k) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic q(long v) { return Cyclotomic(Rational(v)); }

// index of the row equal to the given values, or -1
int find_row(const CharTable& t, const std::vector<Cyclotomic>& values) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].values == values) return static_cast<int>(i);
  return -1;
}

std::vector<Integer> degrees(const CharTable& t) {
  std::vector<Integer> out;
  for (const auto& r : t.rows) out.push_back(r.degree());
  return out;
}

GroupPtr s3() { return Group::from_permutations(3, {"(1 2)", "(1 2 3)"}); }
GroupPtr a4() { return Group::from_permutations(4, {"(1 2 3)", "(1 2)(3 4)"}); }

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

}  // namespace

TEST_CASE("conjugacy classes") {
  auto g = s3();
  auto cls = conj_classes(g);
  REQUIRE(cls.size() == 3);
  CHECK(cls.classes[0] == std::vector<int>{0});
  CHECK(cls.classes[1].size() == 3);  // transpositions
  CHECK(cls.classes[2].size() == 2);  // three cycles
  CHECK(cls.inverse_class == std::vector<int>{0, 1, 2});

  auto c4 = Group::cyclic(4);
  auto c4c = conj_classes(c4);
  CHECK(c4c.size() == 4);
  CHECK(c4c.inverse_class == std::vector<int>{0, 3, 2, 1});
}

TEST_CASE("cyclic character tables") {
  auto t3 = character_table(Group::cyclic(3));
  REQUIRE(t3.rows.size() == 3);
  CHECK(find_row(t3, {q(1), q(1), q(1)}) >= 0);
  CHECK(find_row(t3, {q(1), zeta(3, 1), zeta(3, 2)}) >= 0);
  CHECK(find_row(t3, {q(1), zeta(3, 2), zeta(3, 1)}) >= 0);

  auto t4 = character_table(Group::cyclic(4));
  REQUIRE(t4.rows.size() == 4);
  int faithful = find_row(t4, {q(1), zeta(4, 1), q(-1), zeta(4, 3)});
  REQUIRE(faithful >= 0);
  CHECK(is_faithful_character(t4.cls, t4.rows[faithful]));
  int real = find_row(t4, {q(1), q(-1), q(1), q(-1)});
  REQUIRE(real >= 0);
  CHECK_FALSE(is_faithful_character(t4.cls, t4.rows[real]));
  CHECK(character_field(t4.rows[faithful], FieldSpec::rationals()) == FieldSpec(4, {1}));
  CHECK(character_field(t4.rows[real], FieldSpec::rationals()) == FieldSpec::rationals());
}

TEST_CASE("symmetric group table") {
  auto t = character_table(s3());
  REQUIRE(degrees(t) == std::vector<Integer>{1, 1, 2});
  CHECK(t.rows[0].values == std::vector<Cyclotomic>{q(1), q(-1), q(1)});
  CHECK(t.rows[1].values == std::vector<Cyclotomic>{q(1), q(1), q(1)});
  CHECK(t.rows[2].values == std::vector<Cyclotomic>{q(2), q(0), q(-1)});
  for (const auto& r : t.rows) CHECK(is_irreducible_character(t.cls, r));
  CHECK(is_faithful_character(t.cls, t.rows[2]));
  CHECK(character_kernel(t.cls, t.rows[0]) == std::vector<int>{0, 3, 4});
}

TEST_CASE("quaternion table") {
  auto q8 = Group::from_cayley(quaternion_table());
  auto t = character_table(q8);
  REQUIRE(degrees(t) == std::vector<Integer>{1, 1, 1, 1, 2});
  CHECK(t.rows[4].values == std::vector<Cyclotomic>{q(2), q(-2), q(0), q(0), q(0)});
  // the three nontrivial linear characters kill exactly one of i, j, k
  int minus_at_2 = 0;
  for (int i = 0; i < 4; ++i) {
    for (const auto& v : t.rows[i].values) CHECK((v == q(1) || v == q(-1)));
    if (t.rows[i].values[2] == q(-1)) ++minus_at_2;
  }
  CHECK(minus_at_2 == 2);
  CHECK(is_faithful_character(t.cls, t.rows[4]));
  CHECK(character_field(t.rows[4], FieldSpec::rationals()) == FieldSpec::rationals());
}

TEST_CASE("alternating group table") {
  auto t = character_table(a4());
  REQUIRE(degrees(t) == std::vector<Integer>{1, 1, 1, 3});
  // classes: identity, the two mutually inverse 3-cycle classes, then the
  // double transpositions
  CHECK(t.cls.classes[1].size() == 4);
  CHECK(t.cls.classes[2].size() == 4);
  CHECK(t.cls.classes[3].size() == 3);
  CHECK(t.cls.inverse_class == std::vector<int>{0, 2, 1, 3});
  CHECK(find_row(t, {q(1), zeta(3, 1), zeta(3, 2), q(1)}) >= 0);
  CHECK(find_row(t, {q(1), zeta(3, 2), zeta(3, 1), q(1)}) >= 0);
  CHECK(find_row(t, {q(3), q(0), q(0), q(-1)}) >= 0);
  int w = find_row(t, {q(1), zeta(3, 1), zeta(3, 2), q(1)});
  CHECK(character_field(t.rows[w], FieldSpec::rationals()) == FieldSpec(3, {1}));
  CHECK(character_kernel(t.cls, t.rows[w]).size() == 4);
}

TEST_CASE("dihedral table sanity") {
  auto d8 = Group::from_permutations(4, {"(1 2 3 4)", "(1 3)"});
  auto t = character_table(d8);
  REQUIRE(degrees(t) == std::vector<Integer>{1, 1, 1, 1, 2});
  const auto& two = t.rows[4].values;
  CHECK(std::count(two.begin(), two.end(), q(-2)) == 1);
  CHECK(std::count(two.begin(), two.end(), q(0)) == 3);
  CHECK(is_faithful_character(t.cls, t.rows[4]));
}

TEST_CASE("induction and restriction") {
  auto g = s3();
  auto big = conj_classes(g);
  auto h = subgroup_group(g, closure(*g, {2}));  // generated by a transposition
  auto hcls = conj_classes(h.group);

  Character sgn{h.group, {q(1), q(-1)}};
  auto ind = induce_character(big, h, sgn);
  CHECK(ind.values == std::vector<Cyclotomic>{q(3), q(-1), q(0)});

  auto t = character_table(g);
  // reciprocity: the induced character decomposes as sign plus the 2-dim row
  CHECK(inner_product(big, ind, t.rows[0]) == q(1));
  CHECK(inner_product(big, ind, t.rows[1]) == q(0));
  CHECK(inner_product(big, ind, t.rows[2]) == q(1));

  auto a3 = subgroup_group(g, closure(*g, {3}));
  auto res = restrict_character(big, t.rows[2], a3);
  CHECK(res.values == std::vector<Cyclotomic>{q(2), q(-1), q(-1)});
  auto small_table = character_table(a3.group);
  auto scls = conj_classes(a3.group);
  Cyclotomic total;
  for (const auto& row : small_table.rows) total = total + inner_product(scls, res, row);
  CHECK(total == q(2));  // two distinct linear constituents
}

TEST_CASE("conjugating and twisting characters") {
  auto g = s3();
  auto a3 = subgroup_group(g, closure(*g, {3}));
  auto tbl = character_table(a3.group);
  // pick the row sending the generator mapped from the first 3-cycle to zeta_3
  Character lam = tbl.rows[1];
  REQUIRE(lam.values[1].conductor() == 3);

  int transposition = 2;
  auto conj = conj_character(a3, lam, transposition);
  CHECK(conj.values != lam.values);
  CHECK(conj.values == tbl.rows[2].values);
  int three = 3;
  auto fixed = conj_character(a3, lam, three);
  CHECK(fixed.values == lam.values);

  auto twisted = galois_twist(lam, 2);
  CHECK(twisted.values == conj.values);
  CHECK_THROWS_AS(galois_twist(lam, 3), domain_error);

  auto h = subgroup_group(g, closure(*g, {2}));
  Character sgn{h.group, {q(1), q(-1)}};
  // (1 3) does not normalize the subgroup generated by (1 2)
  int other = 5;
  REQUIRE(g->labels()[other] == "(1 3)");
  CHECK_THROWS_AS(conj_character(h, sgn, other), domain_error);
}

TEST_CASE("product characters") {
  auto c2 = Group::cyclic(2);
  auto c3 = Group::cyclic(3);
  auto p = direct_product({c2, c3});
  auto t2 = character_table(c2);
  auto t3 = character_table(c3);
  // both factors have their nontrivial rows after sorting
  Character sgn = t2.rows[0].values[1] == q(-1) ? t2.rows[0] : t2.rows[1];
  int lam_i = find_row(t3, {q(1), zeta(3, 1), zeta(3, 2)});
  REQUIRE(lam_i >= 0);
  auto prod = product_character(p, {sgn, t3.rows[lam_i]});
  auto pcls = conj_classes(p.group);
  CHECK(prod.degree() == 1);
  CHECK(is_irreducible_character(pcls, prod));
  CHECK(is_faithful_character(pcls, prod));
  CHECK(prod.at_elem(pcls, p.group->mul(p.embed[0](1), p.embed[1](1))) == q(-1) * zeta(3, 1));

  auto other = product_character(p, {sgn, t3.rows[0]});
  CHECK(inner_product(pcls, prod, other) == q(0));
}

TEST_CASE("tables certify themselves on larger input") {
  auto ext = [] {
    auto klein = Group::from_permutations(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    auto tr = coset_transversal(klein, closure(*klein, {1}));
    auto kappa = make_hom(Group::cyclic(4), klein, {0, 1, 0, 1});
    return extension_tensor(kappa, tr);
  }();
  auto t = character_table(ext.ghat);
  Integer total = 0;
  for (const auto& r : t.rows) total += r.degree() * r.degree();
  CHECK(total == 16);
  for (const auto& r : t.rows) CHECK(is_irreducible_character(t.cls, r));
}
