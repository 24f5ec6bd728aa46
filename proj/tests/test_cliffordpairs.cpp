#include <catch2/catch_amalgamated.hpp>

#include "cliffpair/cliffordpairs.hpp"

using namespace cliffpair;

namespace {

Cyclotomic zeta(long n, long k) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic q(long v) { return Cyclotomic(Rational(v)); }

GroupPtr s3() { return Group::from_permutations(3, {"(1 2)", "(1 2 3)"}); }
GroupPtr a4() { return Group::from_permutations(4, {"(1 2 3)", "(1 2)(3 4)"}); }
GroupPtr d8() { return Group::from_permutations(4, {"(1 2 3 4)", "(1 3)"}); }

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

const FieldSpec kQ = FieldSpec::rationals();

// shared targets, so pairs built below can be multiplied
GroupPtr target_c2() {
  static GroupPtr g = Group::cyclic(2);
  return g;
}

// Q8 -> C2 with kernel <i> carrying lambda(i) = zeta4
CliffordPair quat_pair() {
  auto q8 = Group::from_cayley(quaternion_table());
  Hom kappa = make_hom(q8, target_c2(), {0, 0, 0, 0, 1, 1, 1, 1});
  auto kv = subgroup_group(q8, kernel_of(kappa));
  // kernel elements in order: 1, -1, i, -i
  return pair_make(kappa, Character{kv.group, {q(1), q(-1), zeta(4, 1), zeta(4, 3)}});
}

// S3 -> C2 with kernel C3 carrying a faithful lambda
CliffordPair sym3_pair() {
  auto g = s3();
  Hom kappa = make_hom(g, target_c2(), {0, 1, 1, 0, 0, 1});
  auto kv = subgroup_group(g, kernel_of(kappa));
  return pair_make(kappa, Character{kv.group, {q(1), zeta(3, 1), zeta(3, 2)}});
}

// A4 -> A4/V4 with a nontrivial linear character of the kernel
CliffordPair alt4_pair() {
  auto g = a4();
  std::vector<int> v4;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) <= 2) v4.push_back(x);
  Quotient qu = quotient(g, v4);
  auto kv = subgroup_group(g, v4);
  ConjClasses cls = conj_classes(kv.group);
  CharTable t = character_table(kv.group);
  for (const auto& r : t.rows)
    if (r.degree() == 1 && character_kernel(t.cls, r).size() == 2)
      return pair_make(qu.proj, r);
  throw error("no such character");
}

// kernel C3 with faithful theta over the given one-point target
CliffordPair point_pair(GroupPtr t1) {
  auto c3 = Group::cyclic(3);
  Hom kappa = make_hom(c3, t1, {0, 0, 0});
  auto kv = subgroup_group(c3, kernel_of(kappa));
  return pair_make(kappa, Character{kv.group, {q(1), zeta(3, 1), zeta(3, 2)}});
}

GaloisActionMap inversion_on_zeta3(GroupPtr c2) {
  FieldSpec e = FieldSpec::cyclotomic(3);
  return make_galois_action(c2, e, {GaloisElem(e, 1), GaloisElem(e, 2)});
}

}  // namespace

TEST_CASE("pair validation") {
  CliffordPair p = quat_pair();
  CHECK(p.ghat()->order() == 8);
  CHECK(p.n.group->order() == 4);
  CHECK(p.theta.degree() == 1);

  auto q8 = Group::from_cayley(quaternion_table());
  auto c4 = Group::cyclic(4);

  SECTION("kappa must be onto") {
    Hom to_self = identity_hom(q8);
    Hom squash = make_hom(q8, c4, {0, 0, 2, 2, 0, 0, 2, 2});  // image {0,2}
    auto kv = subgroup_group(q8, kernel_of(squash));
    CHECK_THROWS_AS(pair_make(squash, trivial_character(kv.group)), domain_error);
    (void)to_self;
  }

  SECTION("theta must be irreducible") {
    Hom kappa = make_hom(q8, target_c2(), {0, 0, 0, 0, 1, 1, 1, 1});
    auto kv = subgroup_group(q8, kernel_of(kappa));
    Character doubled{kv.group, {q(2), q(-2), q(0), q(0)}};
    CHECK_THROWS_AS(pair_make(kappa, doubled), domain_error);
  }

  SECTION("theta must live on the kernel") {
    Hom kappa = make_hom(q8, target_c2(), {0, 0, 0, 0, 1, 1, 1, 1});
    CHECK_THROWS_AS(pair_make(kappa, trivial_character(target_c2())), domain_error);
    // a C4 in its natural order multiplies differently from {1,-1,i,-i}
    CHECK_THROWS_AS(pair_make(kappa, Character{c4, {q(1), zeta(4, 1), q(-1), zeta(4, 3)}}),
                    domain_error);
    // a fresh object with the matching table is accepted
    auto copy = Group::from_cayley(p.n.group->table());
    CliffordPair ok = pair_make(kappa, Character{copy, {q(1), q(-1), zeta(4, 1), zeta(4, 3)}});
    CHECK(ok.theta.group != copy);
    CHECK(ok.theta.values[2] == zeta(4, 1));
  }
}

TEST_CASE("semi-invariance") {
  SECTION("faithful C3 kernel under S3") {
    CliffordPair p = sym3_pair();
    auto a = semi_invariance(p, kQ);
    REQUIRE(a.has_value());
    CHECK(a->field == FieldSpec::cyclotomic(3));
    CHECK(a->map[0].rep == 1);
    CHECK(a->map[1].rep == 2);
    // over the full field of values the twist is gone and so is the witness
    CHECK_FALSE(semi_invariance(p, FieldSpec::cyclotomic(3)).has_value());
  }

  SECTION("quaternion pair") {
    CliffordPair p = quat_pair();
    auto a = semi_invariance(p, kQ);
    REQUIRE(a.has_value());
    CHECK(a->field == FieldSpec::cyclotomic(4));
    CHECK(a->map[1].rep == 3);
    CHECK(galois_compose(a->map[1], a->map[1]) == a->map[0]);
  }

  SECTION("A4 breaks the orbit") {
    CHECK_FALSE(semi_invariance(alt4_pair(), kQ).has_value());
  }

  SECTION("abelian extension keeps theta invariant") {
    auto c4 = Group::cyclic(4);
    Hom kappa = make_hom(c4, target_c2(), {0, 1, 0, 1});
    auto kv = subgroup_group(c4, kernel_of(kappa));
    CliffordPair p = pair_make(kappa, Character{kv.group, {q(1), q(-1)}});
    auto a = semi_invariance(p, kQ);
    REQUIRE(a.has_value());
    CHECK(a->field == kQ);
    CHECK(a->map[0].rep == 1);
    CHECK(a->map[1].rep == 1);
  }
}

TEST_CASE("center of the rational orbit algebra") {
  SECTION("quaternion pair over Q") {
    CenterAlgebraInfo info = center_algebra(quat_pair(), kQ);
    CHECK(info.field == FieldSpec::cyclotomic(4));
    CHECK(info.orbit_size == 1);
    CHECK(info.stabilizer == std::vector<int>{0, 1});
    CHECK(info.action.map[0].rep == 1);
    CHECK(info.action.map[1].rep == 3);
  }

  SECTION("A4 pair splits into three summands") {
    CliffordPair p = alt4_pair();
    CenterAlgebraInfo info = center_algebra(p, kQ);
    CHECK(info.field == kQ);
    CHECK(info.orbit_size == 3);
    CHECK(info.stabilizer == std::vector<int>{0});
    CHECK(info.orbit_size * static_cast<long>(info.stabilizer.size()) == p.target()->order());
  }

  SECTION("base field matters") {
    CliffordPair p = sym3_pair();
    CenterAlgebraInfo over_q = center_algebra(p, kQ);
    CHECK(over_q.orbit_size == 1);
    CHECK(over_q.field == FieldSpec::cyclotomic(3));
    CHECK(over_q.action.map[1].rep == 2);
    CenterAlgebraInfo over_e = center_algebra(p, FieldSpec::cyclotomic(3));
    CHECK(over_e.orbit_size == 2);
    CHECK(over_e.stabilizer == std::vector<int>{0});
    CHECK(over_e.field == FieldSpec::cyclotomic(3));
  }
}

TEST_CASE("conjugate pairs") {
  CliffordPair p = quat_pair();
  CliffordPair c = conjugate_pair(p);
  CHECK(c.theta.values[2] == zeta(4, 3));
  CenterAlgebraInfo a = center_algebra(p, kQ);
  CenterAlgebraInfo b = center_algebra(c, kQ);
  CHECK(a.field == b.field);
  CHECK(a.orbit_size == b.orbit_size);
  CHECK(a.stabilizer == b.stabilizer);
  CHECK(a.action.map == b.action.map);

  // real-valued theta is its own conjugate
  CliffordPair r = conjugate_pair(conjugate_pair(p));
  CHECK(r.theta.values == p.theta.values);
}

TEST_CASE("products of pairs") {
  CliffordPair p = quat_pair();

  SECTION("the quaternion pair squared") {
    CliffordPair sq = product_pair(p, p, kQ);
    CHECK(sq.ghat()->order() == 32);
    CHECK(sq.n.group->order() == 16);
    CHECK(sq.n.group->is_abelian());
    CHECK(sq.theta.degree() == 1);
    auto a = semi_invariance(sq, kQ);
    REQUIRE(a.has_value());
    CHECK(a->field == FieldSpec::cyclotomic(4));
    CHECK(a->map[1].rep == 3);
  }

  SECTION("conjugate partner") {
    CliffordPair pr = product_pair(p, conjugate_pair(p), kQ);
    CHECK(pr.ghat()->order() == 32);
    CHECK(semi_invariance(pr, kQ).has_value());
  }

  SECTION("targets must be the same object") {
    auto other = Group::cyclic(2);
    auto q8 = Group::from_cayley(quaternion_table());
    Hom kappa = make_hom(q8, other, {0, 0, 0, 0, 1, 1, 1, 1});
    auto kv = subgroup_group(q8, kernel_of(kappa));
    CliffordPair foreign =
        pair_make(kappa, Character{kv.group, {q(1), q(-1), zeta(4, 1), zeta(4, 3)}});
    CHECK_THROWS_AS(product_pair(p, foreign, kQ), domain_error);
  }

  SECTION("fields of values must agree") {
    CHECK_THROWS_AS(product_pair(p, sym3_pair(), kQ), domain_error);
  }

  SECTION("factors must be semi-invariant") {
    CliffordPair bad = alt4_pair();
    CHECK_THROWS_AS(product_pair(bad, bad, kQ), domain_error);
  }
}

TEST_CASE("identity pairs from an action") {
  SECTION("inversion on Q(zeta3) over C2") {
    auto c2 = target_c2();
    CliffordPair p = identity_pair(c2, inversion_on_zeta3(c2), 3, kQ);
    CHECK(p.ghat()->order() == 6);
    CHECK(is_isomorphic(*p.ghat(), *s3()));
    CHECK(p.n.group->order() == 3);
    CHECK(is_faithful_character(conj_classes(p.n.group), p.theta));
  }

  SECTION("the full action on Q(zeta5) over C4") {
    auto c4 = Group::cyclic(4);
    FieldSpec e = FieldSpec::cyclotomic(5);
    auto beta = make_galois_action(
        c4, e, {GaloisElem(e, 1), GaloisElem(e, 2), GaloisElem(e, 4), GaloisElem(e, 3)});
    CliffordPair p = identity_pair(c4, beta, 5, kQ);
    CHECK(p.ghat()->order() == 20);
    CHECK(p.n.group->order() == 5);
    CHECK(p.theta.degree() == 1);
    CenterAlgebraInfo info = center_algebra(p, kQ);
    CHECK(info.field == e);
    CHECK(info.orbit_size == 1);
  }

  SECTION("conjugation on Q(sqrt2) at root order eight") {
    auto c2 = target_c2();
    FieldSpec e(8, {1, 7});
    auto beta = make_galois_action(c2, e, {GaloisElem(e, 1), GaloisElem(e, 3)});
    CliffordPair p = identity_pair(c2, beta, 8, kQ);
    CHECK(p.ghat()->order() == 32);
    CHECK(p.n.group->order() == 16);
    CHECK(p.theta.degree() == 2);
    CHECK(is_irreducible_character(conj_classes(p.n.group), p.theta));
    CenterAlgebraInfo info = center_algebra(p, kQ);
    CHECK(info.field == e);
    CHECK(info.action.map[1].rep == 3);
  }

  SECTION("bad input") {
    auto c2 = target_c2();
    FieldSpec e5 = FieldSpec::cyclotomic(5);
    // the map must be multiplicative to begin with
    CHECK_THROWS_AS(make_galois_action(c2, e5, {GaloisElem(e5, 1), GaloisElem(e5, 2)}),
                    domain_error);
    // and the field must fit under the chosen root of unity
    auto beta = make_galois_action(c2, e5, {GaloisElem(e5, 1), GaloisElem(e5, 4)});
    CHECK_THROWS_AS(identity_pair(c2, beta, 3, kQ), domain_error);
  }

  SECTION("the module behind the pair has the right commutant") {
    auto c2 = target_c2();
    auto check = [&](GroupPtr g, const GaloisActionMap& beta, long n, long expect) {
      CliffordPair p = identity_pair(g, beta, n, kQ);
      IdentityModule im = identity_module(p, beta, n, kQ);
      CHECK(im.rep.dim == static_cast<int>(euler_phi(n)));
      EndoBasis eb = commutant_basis(im.rep, im.n_in);
      CHECK(eb.dimension_over(kQ) == expect);
    };
    check(c2, inversion_on_zeta3(c2), 3, 2);
    auto c4 = Group::cyclic(4);
    FieldSpec e5 = FieldSpec::cyclotomic(5);
    check(c4,
          make_galois_action(
              c4, e5, {GaloisElem(e5, 1), GaloisElem(e5, 2), GaloisElem(e5, 4), GaloisElem(e5, 3)}),
          5, 4);
    FieldSpec r2(8, {1, 7});
    check(c2, make_galois_action(c2, r2, {GaloisElem(r2, 1), GaloisElem(r2, 3)}), 8, 2);
  }
}

TEST_CASE("restriction") {
  SECTION("along the identity nothing happens") {
    CliffordPair p = quat_pair();
    RestrictedPair r = restrict_pair(p, identity_hom(p.target()), kQ);
    CHECK(is_isomorphic(*r.pair.ghat(), *p.ghat()));
    CHECK(r.info.g_orbit_size == 1);
    CHECK(r.info.h_orbit_sizes == std::vector<long>{1});
    CenterAlgebraInfo a = center_algebra(p, kQ);
    CenterAlgebraInfo b = center_algebra(r.pair, kQ);
    CHECK(a.field == b.field);
    CHECK(a.orbit_size == b.orbit_size);
  }

  SECTION("A4 pair to the one-point group") {
    CliffordPair p = alt4_pair();
    auto t1 = Group::trivial();
    Hom inc = make_hom(t1, p.target(), {0});
    RestrictedPair r = restrict_pair(p, inc, kQ);
    CHECK(r.pair.ghat()->order() == 4);  // the kernel itself
    CHECK(r.info.g_orbit_size == 3);
    CHECK(r.info.h_orbit_sizes == std::vector<long>{1, 1, 1});
    CHECK(r.info.base_orbit == 0);
    CHECK(center_algebra(r.pair, kQ).orbit_size == 1);
  }

  SECTION("quaternion pair to the one-point group") {
    CliffordPair p = quat_pair();
    auto t1 = Group::trivial();
    Hom inc = make_hom(t1, p.target(), {0});
    RestrictedPair r = restrict_pair(p, inc, kQ);
    CHECK(r.pair.ghat()->order() == 4);
    CenterAlgebraInfo info = center_algebra(r.pair, kQ);
    CHECK(info.field == FieldSpec::cyclotomic(4));
    CHECK(info.orbit_size == 1);
    CHECK(info.action.map[0].rep == 1);  // only the identity acts
  }

  SECTION("a two-element orbit splits over the big field") {
    CliffordPair p = sym3_pair();
    auto t1 = Group::trivial();
    Hom inc = make_hom(t1, p.target(), {0});
    RestrictedPair r = restrict_pair(p, inc, FieldSpec::cyclotomic(3));
    CHECK(r.info.g_orbit_size == 2);
    CHECK(r.info.h_orbit_sizes == std::vector<long>{1, 1});
  }
}

TEST_CASE("induction") {
  auto c2 = target_c2();
  auto t1 = Group::trivial();
  Hom point_in_c2 = make_hom(t1, c2, {0});

  SECTION("a C3 kernel walks up to C2") {
    CliffordPair p = point_pair(t1);
    CliffordPair ind = induce_pair(p, point_in_c2, kQ);
    CHECK(ind.ghat()->order() == 18);
    CHECK(ind.n.group->order() == 9);
    CHECK(ind.n.group->is_abelian());
    CHECK(ind.theta.degree() == 1);
    CenterAlgebraInfo info = center_algebra(ind, kQ);
    CHECK(info.field == FieldSpec::cyclotomic(3));
    CHECK(info.orbit_size == 2);
    CHECK(info.stabilizer == std::vector<int>{0});
  }

  SECTION("trivial theta gets a sign stand-in") {
    Hom kappa = identity_hom(t1);
    auto kv = subgroup_group(t1, kernel_of(kappa));
    CliffordPair p = pair_make(kappa, trivial_character(kv.group));
    CliffordPair ind = induce_pair(p, point_in_c2, kQ);
    CHECK(ind.ghat()->order() == 8);
    CHECK(ind.n.group->order() == 4);
    CHECK(is_isomorphic(*ind.ghat(), *d8()));
    CenterAlgebraInfo info = center_algebra(ind, kQ);
    CHECK(info.field == kQ);
    CHECK(info.orbit_size == 2);
  }

  SECTION("inducing along the identity keeps the pair") {
    CliffordPair p = sym3_pair();
    CliffordPair ind = induce_pair(p, identity_hom(c2), kQ);
    CHECK(is_isomorphic(*ind.ghat(), *p.ghat()));
    CHECK(ind.theta.values == p.theta.values);
  }

  SECTION("restricting back recovers the center") {
    CliffordPair p = point_pair(t1);
    CenterAlgebraInfo before = center_algebra(p, kQ);
    CliffordPair ind = induce_pair(p, point_in_c2, kQ);
    RestrictedPair back = restrict_pair(ind, point_in_c2, kQ);
    CenterAlgebraInfo after = center_algebra(back.pair, kQ);
    CHECK(after.field == before.field);
    CHECK(after.orbit_size == before.orbit_size);
    CHECK(after.action.map == before.action.map);
  }

  SECTION("the pair must be semi-invariant first") {
    CliffordPair bad = alt4_pair();
    Hom inc = identity_hom(bad.target());
    CHECK_THROWS_AS(induce_pair(bad, inc, kQ), domain_error);
  }
}

TEST_CASE("corestriction") {
  auto c2 = target_c2();
  auto t1 = Group::trivial();
  Hom point_in_c2 = make_hom(t1, c2, {0});

  SECTION("slot characters follow the action map") {
    CliffordPair p = point_pair(t1);
    FieldSpec e3 = FieldSpec::cyclotomic(3);
    CliffordPair tw = corestrict_pair(p, point_in_c2, inversion_on_zeta3(c2), kQ);
    CliffordPair pl = corestrict_pair(p, point_in_c2, trivial_galois_action(c2, e3), kQ);
    CHECK(tw.ghat()->order() == 18);
    CHECK(tw.n.group->order() == 9);
    CHECK(pl.ghat()->order() == 18);
    CHECK(tw.theta.values != pl.theta.values);
    auto a = semi_invariance(tw, kQ);
    REQUIRE(a.has_value());
    CHECK(a->map[1].rep == 2);
  }

  SECTION("index two inclusion with a C2 kernel") {
    auto c6 = Group::cyclic(6);
    auto c3 = Group::cyclic(3);
    Hom kappa = make_hom(c6, c3, {0, 1, 2, 0, 1, 2});
    auto kv = subgroup_group(c6, kernel_of(kappa));
    CliffordPair p = pair_make(kappa, Character{kv.group, {q(1), q(-1)}});
    auto g = s3();
    Hom inc = make_hom(c3, g, {0, 3, 4});
    CliffordPair cor = corestrict_pair(p, inc, trivial_galois_action(g, kQ), kQ);
    CHECK(cor.ghat()->order() == 24);
    CHECK(cor.n.group->order() == 4);
    CHECK(cor.n.group->is_abelian());
  }

  SECTION("corestricting along the identity keeps theta") {
    CliffordPair p = sym3_pair();
    auto alpha = semi_invariance(p, kQ);
    REQUIRE(alpha.has_value());
    GaloisActionMap beta{c2, alpha->field, alpha->map};
    CliffordPair cor = corestrict_pair(p, identity_hom(c2), beta, kQ);
    CHECK(is_isomorphic(*cor.ghat(), *p.ghat()));
  }

  SECTION("the action map must extend the pair's own") {
    CliffordPair p = sym3_pair();
    FieldSpec e3 = FieldSpec::cyclotomic(3);
    CHECK_THROWS_AS(
        corestrict_pair(p, identity_hom(c2), trivial_galois_action(c2, e3), kQ),
        domain_error);
  }

  SECTION("the field must match") {
    CliffordPair p = point_pair(t1);
    CHECK_THROWS_AS(corestrict_pair(p, point_in_c2, trivial_galois_action(c2, kQ), kQ),
                    domain_error);
  }
}

TEST_CASE("cyclic reduction") {
  SECTION("a kernel C4 x C2 drops to C4") {
    auto c4 = Group::cyclic(4);
    auto c2 = Group::cyclic(2);
    Product pr = direct_product({c4, c2});
    std::vector<int> flip(8), idp(8);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 2; ++b) flip[a * 2 + b] = ((4 - a) % 4) * 2 + b;
    for (int i = 0; i < 8; ++i) idp[i] = i;
    auto u = Group::cyclic(2);
    Semidirect sd = semidirect(u, pr.group, {idp, flip});
    std::vector<int> im(16);
    for (int a = 0; a < 2; ++a)
      for (int x = 0; x < 8; ++x) im[a * 8 + x] = a;
    Hom kappa = make_hom(sd.group, u, im);
    auto kv = subgroup_group(sd.group, kernel_of(kappa));
    std::vector<Cyclotomic> vals;
    for (int x = 0; x < 8; ++x) vals.push_back(zeta(4, x / 2));
    CliffordPair p = pair_make(kappa, Character{kv.group, vals});

    CliffordPair red = cyclic_reduction(p, kQ);
    CHECK(red.ghat()->order() == 8);
    CHECK(red.n.group->order() == 4);
    CHECK(red.n.group->is_cyclic());
    CHECK(is_isomorphic(*red.ghat(), *d8()));
    CHECK(is_faithful_character(conj_classes(red.n.group), red.theta));
    auto before = semi_invariance(p, kQ);
    auto after = semi_invariance(red, kQ);
    REQUIRE(after.has_value());
    CHECK(after->field == before->field);
    CHECK(after->map == before->map);
  }

  SECTION("a faithful theta stays put") {
    CliffordPair p = sym3_pair();
    CliffordPair red = cyclic_reduction(p, kQ);
    CHECK(red.ghat()->order() == 6);
    CHECK(red.n.group->order() == 3);
  }

  SECTION("nonabelian kernels are refused") {
    auto q8 = Group::from_cayley(quaternion_table());
    auto t1 = Group::trivial();
    Hom kappa = make_hom(q8, t1, std::vector<int>(8, 0));
    auto kv = subgroup_group(q8, kernel_of(kappa));
    CharTable t = character_table(kv.group);
    CliffordPair p = pair_make(kappa, t.rows.back());  // the degree two row
    CHECK_THROWS_AS(cyclic_reduction(p, kQ), domain_error);
  }

  SECTION("semi-invariance is required") {
    CHECK_THROWS_AS(cyclic_reduction(alt4_pair(), kQ), domain_error);
  }
}

TEST_CASE("base field comparisons") {
  CliffordPair p = quat_pair();

  SECTION("no change of field") {
    BaseFieldReport r = base_field_check(p, kQ, kQ);
    CHECK(r.fixed_field == kQ);
    CHECK(r.k_in_fixed);
    CHECK(r.theta_field_match);
    CHECK(r.actions_agree);
    CHECK(r.compatible);
  }

  SECTION("Q(i) escapes the fixed field of the action") {
    BaseFieldReport r = base_field_check(p, kQ, FieldSpec::cyclotomic(4));
    CHECK(r.fixed_field == kQ);
    CHECK_FALSE(r.k_in_fixed);
    CHECK(r.theta_field_match);
    CHECK_FALSE(r.actions_agree);
    CHECK_FALSE(r.compatible);
  }

  SECTION("an invariant theta tolerates any subfield of its values") {
    auto c5 = Group::cyclic(5);
    auto c2 = Group::cyclic(2);
    Product pr = direct_product({c5, c2});
    CliffordPair p2 = pair_make(pr.proj[1], Character{c5, {q(1), zeta(5, 1), zeta(5, 2),
                                                           zeta(5, 3), zeta(5, 4)}});
    FieldSpec sqrt5(5, {1, 4});
    BaseFieldReport r = base_field_check(p2, kQ, sqrt5);
    CHECK(r.fixed_field == FieldSpec::cyclotomic(5));
    CHECK(r.k_in_fixed);
    CHECK(r.theta_field_match);
    CHECK(r.actions_agree);
    CHECK(r.compatible);
  }

  SECTION("the base must sit inside the comparison field") {
    CHECK_THROWS_AS(base_field_check(p, FieldSpec::cyclotomic(4), kQ), domain_error);
  }
}

TEST_CASE("pairs with one action compose") {
  auto c2 = target_c2();
  GaloisActionMap beta = inversion_on_zeta3(c2);
  CliffordPair one = identity_pair(c2, beta, 3, kQ);
  CliffordPair p = sym3_pair();

  auto ap = semi_invariance(p, kQ);
  auto ao = semi_invariance(one, kQ);
  REQUIRE(ap.has_value());
  REQUIRE(ao.has_value());
  CHECK(ap->field == ao->field);
  CHECK(ap->map == ao->map);

  CliffordPair prod = product_pair(p, one, kQ);
  CHECK(prod.ghat()->order() == 18);
  auto a = semi_invariance(prod, kQ);
  REQUIRE(a.has_value());
  CHECK(a->map == beta.map);

  CliffordPair conj = conjugate_pair(prod);
  auto ac = semi_invariance(conj, kQ);
  REQUIRE(ac.has_value());
  CHECK(ac->field == beta.field);
}
