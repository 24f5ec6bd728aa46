#pragma once

// Verification suites behind the `verify` subcommand.  Each suite replays a
// block of the library's guarantees end to end on the shipped corpus and
// reports one line per check.  Everything here is deterministic: fixed
// iteration orders, no clocks, no addresses, so two runs of the same suite
// produce identical bytes.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliffpair/cohomology.hpp"
#include "cliffpair/json_io.hpp"

namespace cliffpair {

struct CheckLine {
  std::string label;
  bool ok;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  std::string text() const {
    std::string out = "suite " + suite + "\n";
    for (const auto& c : checks) out += (c.ok ? "  [ ok ] " : "  [FAIL] ") + c.label + "\n";
    out += "suite " + suite + (ok() ? ": PASS" : ": FAIL") + "\n";
    return out;
  }
};

namespace detail {

inline const std::vector<std::string>& corpus_group_names() {
  static const std::vector<std::string> names = {"c2", "c3", "c4",  "c5", "c6", "c7", "c8",
                                                 "v4", "s3", "d8", "q8", "d10", "a4"};
  return names;
}

template <class Fn>
SuiteReport run_suite(const std::string& name, Fn&& body) {
  SuiteReport r{name, {}};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.checks.push_back({std::string("unexpected error: ") + e.what(), false});
  }
  return r;
}

inline int power_of(const Group& g, int x, long k) {
  int acc = 0;
  for (long i = 0; i < k; ++i) acc = g.mul(acc, x);
  return acc;
}

inline int first_of_order(const Group& g, int ord) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == ord) return x;
  throw domain_error("no element of order " + std::to_string(ord));
}

inline CliffordPair corpus_pair(JsonRegistry& reg, const std::filesystem::path& dir,
                                const std::string& hom_name, const std::string& theta_spec) {
  LoadedHom h = hom_file(dir / hom_name, reg);
  auto view = subgroup_group(h.hom.src, kernel_of(h.hom));
  return pair_make(h.hom, theta_select(view.group, theta_spec));
}

// the A4 pair wants a nontrivial linear character of the Klein kernel,
// which no name in theta_select picks out
inline CliffordPair corpus_alt4_pair(JsonRegistry& reg, const std::filesystem::path& dir) {
  LoadedHom h = hom_file(dir / "a4_to_c3.json", reg);
  auto view = subgroup_group(h.hom.src, kernel_of(h.hom));
  CharTable t = character_table(view.group);
  for (const auto& row : t.rows)
    if (row.degree() == 1 && character_kernel(t.cls, row).size() == 2) return pair_make(h.hom, row);
  throw error("no nontrivial linear character on the kernel");
}

// brute-force cocycle and coboundary counts for small instances; the
// normalized convention (vanishing on identity slots) matches the bar
// resolution used by h2_cyclic
inline std::pair<long, long> cocycle_counts(const Group& g, long m) {
  const int n = g.order();
  const int w = n - 1;
  const int cells = w * w;
  long total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= m;
    if (total > (1L << 21)) throw domain_error("enumeration instance too large");
  }
  auto idx = [&](int x, int y) { return (x - 1) * w + (y - 1); };
  auto value = [&](const std::vector<long>& f, int x, int y) {
    return (x == 0 || y == 0) ? 0L : f[idx(x, y)];
  };

  long cocycles = 0;
  std::vector<long> f(cells, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < cells; ++i) {
      f[i] = c % m;
      c /= m;
    }
    bool good = true;
    for (int x = 1; good && x < n; ++x)
      for (int y = 1; good && y < n; ++y)
        for (int z = 1; good && z < n; ++z) {
          long lhs = value(f, x, y) + value(f, g.mul(x, y), z);
          long rhs = value(f, y, z) + value(f, x, g.mul(y, z));
          if ((lhs - rhs) % m != 0) good = false;
        }
    if (good) ++cocycles;
  }

  std::set<std::vector<long>> cob;
  long u_total = 1;
  for (int i = 0; i < w; ++i) u_total *= m;
  std::vector<long> u(w, 0);
  for (long code = 0; code < u_total; ++code) {
    long c = code;
    for (int i = 0; i < w; ++i) {
      u[i] = c % m;
      c /= m;
    }
    std::vector<long> df(cells, 0);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int xy = g.mul(x, y);
        long v = u[x - 1] + u[y - 1] - (xy == 0 ? 0 : u[xy - 1]);
        df[idx(x, y)] = ((v % m) + m) % m;
      }
    cob.insert(std::move(df));
  }
  return {cocycles, static_cast<long>(cob.size())};
}

inline std::string factors_str(const std::vector<long>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i)
    out += (i ? "," : "") + std::to_string(fs[i]);
  return out + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// character tables over the whole corpus

inline SuiteReport verify_chartab(const std::filesystem::path& corpus) {
  return detail::run_suite("chartab", [&](SuiteReport& r) {
    JsonRegistry reg;
    const Cyclotomic one{Rational(1)}, zero;
    for (const std::string& name : detail::corpus_group_names()) {
      auto g = reg.group_file(corpus / (name + ".json"));
      CharTable t = character_table(g);
      bool ok = static_cast<int>(t.rows.size()) == t.cls.size();
      for (std::size_t i = 0; ok && i < t.rows.size(); ++i)
        for (std::size_t j = i; ok && j < t.rows.size(); ++j)
          ok = inner_product(t.cls, t.rows[i], t.rows[j]) == (i == j ? one : zero);
      for (int a = 0; ok && a < t.cls.size(); ++a)
        for (int b = a; ok && b < t.cls.size(); ++b) {
          Cyclotomic acc;
          for (const auto& row : t.rows)
            acc = acc + row.at_class(a) * row.at_class(b).conjugate();
          Cyclotomic want = a == b ? Cyclotomic(Rational(g->order(), t.cls.classes[a].size())) : zero;
          ok = acc == want;
        }
      Integer degsum = 0;
      for (const auto& row : t.rows) degsum += row.degree() * row.degree();
      ok = ok && degsum == g->order();
      r.checks.push_back({name + ": rows orthonormal, columns orthogonal, degree sum " +
                              std::to_string(g->order()),
                          ok});
    }

    auto degrees_csv = [&](const std::string& name) {
      CharTable t = character_table(reg.group_file(corpus / (name + ".json")));
      std::string out;
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        out += (i ? "," : "") + to_string(t.rows[i].degree());
      return out;
    };
    r.checks.push_back({"s3 degrees are 1,1,2", degrees_csv("s3") == "1,1,2"});
    r.checks.push_back({"q8 degrees are 1,1,1,1,2", degrees_csv("q8") == "1,1,1,1,2"});

    auto c3 = reg.group_file(corpus / "c3.json");
    CharTable t3 = character_table(c3);
    int gen = detail::first_of_order(*c3, 3);
    std::vector<long> dlog(t3.cls.size(), -1);
    for (int j = 0; j < t3.cls.size(); ++j)
      for (long k = 0; k < 3; ++k)
        if (detail::power_of(*c3, gen, k) == t3.cls.rep(j)) dlog[j] = k;
    bool grid = t3.rows.size() == 3;
    for (long k = 0; k < 3; ++k) {
      std::vector<Cyclotomic> row;
      for (int j = 0; j < t3.cls.size(); ++j)
        row.push_back(Cyclotomic::root_of_unity(3, k * dlog[j] % 3));
      int hits = 0;
      for (const auto& have : t3.rows)
        if (have.values == row) ++hits;
      grid = grid && hits == 1;
    }
    r.checks.push_back({"c3 table is the zeta3 power grid", grid});
  });
}

// ---------------------------------------------------------------------------
// central idempotents: completeness, orthogonality, equivariance

inline SuiteReport verify_idempotents(const std::filesystem::path& corpus) {
  return detail::run_suite("idempotents", [&](SuiteReport& r) {
    JsonRegistry reg;
    const FieldSpec kQ = FieldSpec::rationals();
    for (const std::string& name : detail::corpus_group_names()) {
      auto g = reg.group_file(corpus / (name + ".json"));
      CharTable t = character_table(g);
      std::vector<AlgElem> es;
      for (const auto& row : t.rows) es.push_back(idempotent_e(row));

      AlgElem sum = alg_zero(g);
      for (const auto& e : es) sum = alg_add(sum, e);
      bool ok = sum == alg_one(g);
      for (std::size_t i = 0; ok && i < es.size(); ++i)
        for (std::size_t j = 0; ok && j < es.size(); ++j)
          ok = alg_mul(es[i], es[j]) == (i == j ? es[i] : alg_zero(g));

      for (std::size_t i = 0; ok && i < t.rows.size(); ++i) {
        long cond = character_field(t.rows[i], kQ).conductor();
        for (long s : kQ.lift_stabilizer(cond))
          if (ok) ok = galois_alg(es[i], s) == idempotent_e(galois_twist(t.rows[i], s));
      }

      for (const auto& row : t.rows) {
        if (!ok) break;
        AlgElem ef = idempotent_eF(row, kQ);
        ok = alg_mul(ef, ef) == ef;
        for (const auto& c : ef.coeffs)
          if (ok) ok = field_of_values({c}, kQ).conductor() == 1;
      }
      r.checks.push_back({name + ": idempotents resolve one and follow the Galois twists", ok});
    }

    {
      auto c5 = reg.group_file(corpus / "c5.json");
      CharTable t = character_table(c5);
      FieldSpec sqrt5(5, {1, 4});
      bool ok = true;
      for (const auto& row : t.rows) {
        AlgElem ef = idempotent_eF(row, sqrt5);
        if (alg_mul(ef, ef) != ef) ok = false;
        for (const auto& c : ef.coeffs)
          if (!sqrt5.contains_field(field_of_values({c}, FieldSpec::rationals()))) ok = false;
      }
      r.checks.push_back({"c5 orbit idempotents land coefficient-wise in Q(sqrt5)", ok});
    }

    for (const std::string& hom_name : {"q8_to_c2", "s3_to_c2", "a4_to_c3"}) {
      LoadedHom h = hom_file(corpus / (hom_name + ".json"), reg);
      auto kv = subgroup_group(h.hom.src, kernel_of(h.hom));
      CharTable t = character_table(kv.group);
      bool ok = true;
      for (int x = 0; ok && x < h.hom.src->order(); ++x)
        for (const auto& row : t.rows) {
          if (!ok) break;
          ok = conj_alg(idempotent_e(row), x, kv.incl) ==
               idempotent_e(conj_character(kv, row, x));
        }
      r.checks.push_back({hom_name + ": conjugation permutes the kernel idempotents", ok});
    }
  });
}

// ---------------------------------------------------------------------------
// semi-invariance witnesses

inline SuiteReport verify_semiinvariance(const std::filesystem::path& corpus) {
  return detail::run_suite("semiinvariance", [&](SuiteReport& r) {
    JsonRegistry reg;
    const FieldSpec kQ = FieldSpec::rationals();

    auto multiplicative = [](const GaloisActionMap& a) {
      for (int x = 0; x < a.group->order(); ++x)
        for (int y = 0; y < a.group->order(); ++y)
          if (galois_compose(a.map[x], a.map[y]) != a.map[a.group->mul(x, y)]) return false;
      return true;
    };

    CliffordPair quat = detail::corpus_pair(reg, corpus, "q8_to_c2.json", "faithful");
    auto aq = semi_invariance(quat, kQ);
    r.checks.push_back({"quaternion pair: nontrivial coset acts by complex conjugation",
                        aq.has_value() && aq->field == FieldSpec::cyclotomic(4) &&
                            aq->map[0].rep == 1 && aq->map[1].rep == 3});
    r.checks.push_back(
        {"quaternion pair: the witness map is multiplicative on the whole target",
         aq.has_value() && multiplicative(*aq)});

    CliffordPair sym = detail::corpus_pair(reg, corpus, "s3_to_c2.json", "faithful");
    auto as = semi_invariance(sym, kQ);
    r.checks.push_back({"sign pair on s3: the reflection coset inverts zeta3",
                        as.has_value() && as->map[1].rep == 2 && multiplicative(*as)});

    CliffordPair alt = detail::corpus_alt4_pair(reg, corpus);
    r.checks.push_back(
        {"a4 pair over its Klein kernel: not semi-invariant over Q",
         !semi_invariance(alt, kQ).has_value()});
  });
}

// ---------------------------------------------------------------------------
// identity pairs and their concrete modules

inline SuiteReport verify_identity(const std::filesystem::path&) {
  return detail::run_suite("identity", [&](SuiteReport& r) {
    const FieldSpec kQ = FieldSpec::rationals();
    struct Instance {
      std::string label;
      GroupPtr g;
      FieldSpec e;
      std::vector<long> reps;
      long root_order;
      long expect_dim;
    };
    FieldSpec e3 = FieldSpec::cyclotomic(3), e5 = FieldSpec::cyclotomic(5), r2(8, {1, 7});
    std::vector<Instance> instances = {
        {"zeta3 inversion over C2", Group::cyclic(2), e3, {1, 2}, 3, 2},
        {"the full Galois cycle on Q(zeta5) over C4", Group::cyclic(4), e5, {1, 2, 4, 3}, 5, 4},
        {"conjugation on Q(sqrt2) inside Q(zeta8)", Group::cyclic(2), r2, {1, 3}, 8, 2},
    };
    for (const auto& inst : instances) {
      std::vector<GaloisElem> map;
      for (long k : inst.reps) map.emplace_back(inst.e, k);
      GaloisActionMap beta = make_galois_action(inst.g, inst.e, std::move(map));
      CliffordPair p = identity_pair(inst.g, beta, inst.root_order, kQ);

      ConjClasses cls = conj_classes(p.n.group);
      r.checks.push_back({inst.label + ": theta has unit norm",
                          inner_product(cls, p.theta, p.theta) == Cyclotomic(Rational(1))});

      CenterAlgebraInfo info = center_algebra(p, kQ);
      bool center_ok = info.field == inst.e && info.orbit_size == 1 &&
                       static_cast<int>(info.stabilizer.size()) == inst.g->order();
      for (int b = 0; center_ok && b < inst.g->order(); ++b)
        center_ok = info.action.map[b] == beta.map[b];
      r.checks.push_back({inst.label + ": center is the field itself with the given action",
                          center_ok});

      IdentityModule im = identity_module(p, beta, inst.root_order, kQ);
      EndoBasis eb = commutant_basis(im.rep, im.n_in);
      r.checks.push_back(
          {inst.label + ": kernel commutant on F(eps) has dimension " +
               std::to_string(inst.expect_dim),
           eb.dimension_over(kQ) == inst.expect_dim &&
               inst.expect_dim * kQ.degree() == inst.e.degree()});
    }
  });
}

// ---------------------------------------------------------------------------
// closure under conjugates and products

inline SuiteReport verify_closure(const std::filesystem::path& corpus) {
  return detail::run_suite("closure", [&](SuiteReport& r) {
    JsonRegistry reg;
    const FieldSpec kQ = FieldSpec::rationals();
    CliffordPair p = detail::corpus_pair(reg, corpus, "q8_to_c2.json", "faithful");
    CenterAlgebraInfo base = center_algebra(p, kQ);

    CliffordPair c = conjugate_pair(p);
    CenterAlgebraInfo cc = center_algebra(c, kQ);
    r.checks.push_back({"conjugating the quaternion pair keeps its center data",
                        cc.field == base.field && cc.orbit_size == base.orbit_size &&
                            cc.stabilizer == base.stabilizer && cc.action.map == base.action.map});

    auto check_product = [&](const std::string& label, const CliffordPair& q) {
      CliffordPair pr = product_pair(p, q, kQ);
      bool sizes = pr.ghat()->order() == 32 && pr.n.group->order() == 16;
      CenterAlgebraInfo info = center_algebra(pr, kQ);
      bool center = info.field == FieldSpec::cyclotomic(4) && info.orbit_size == 1 &&
                    info.stabilizer == std::vector<int>{0, 1} &&
                    info.action.map == base.action.map;
      r.checks.push_back({label + ": kernel 16 inside order 32", sizes});
      r.checks.push_back({label + ": center stays (Q(zeta4), r=1) with the same action", center});
    };
    check_product("product with itself", p);
    check_product("product with the conjugate", c);
  });
}

// ---------------------------------------------------------------------------
// induction and restriction along a point inclusion

inline SuiteReport verify_induction(const std::filesystem::path& corpus) {
  return detail::run_suite("induction", [&](SuiteReport& r) {
    JsonRegistry reg;
    const FieldSpec kQ = FieldSpec::rationals();
    auto c3 = reg.group_file(corpus / "c3.json");
    auto c2 = reg.group_file(corpus / "c2.json");
    auto t1 = Group::trivial();

    Hom kappa = make_hom(c3, t1, std::vector<int>(3, 0));
    auto kv = subgroup_group(c3, kernel_of(kappa));
    CliffordPair p = pair_make(kappa, theta_select(kv.group, "faithful"));
    Hom point_in_c2 = make_hom(t1, c2, {0});

    CliffordPair ind = induce_pair(p, point_in_c2, kQ);
    CenterAlgebraInfo info = center_algebra(ind, kQ);
    r.checks.push_back({"faithful C3 pair induced to C2: center (Q(zeta3), r=2, point stabilizer)",
                        info.field == FieldSpec::cyclotomic(3) && info.orbit_size == 2 &&
                            info.stabilizer == std::vector<int>{0}});
    r.checks.push_back({"induced size law: 3^2 * 2 = 18",
                        ind.ghat()->order() == 18 && ind.n.group->order() == 9 &&
                            ind.ghat()->order() ==
                                p.n.group->order() * p.n.group->order() * c2->order()});

    CenterAlgebraInfo before = center_algebra(p, kQ);
    RestrictedPair back = restrict_pair(ind, point_in_c2, kQ);
    CenterAlgebraInfo after = center_algebra(back.pair, kQ);
    r.checks.push_back({"restricting back recovers (Q(zeta3), r=1) and the original action",
                        after.field == before.field && after.orbit_size == 1 &&
                            after.action.map == before.action.map});

    CliffordPair sym = detail::corpus_pair(reg, corpus, "s3_to_c2.json", "faithful");
    CliffordPair same = induce_pair(sym, identity_hom(sym.target()), kQ);
    r.checks.push_back({"inducing along the identity: 3^1 * 2 = 6 and theta survives",
                        same.ghat()->order() == 6 && same.theta.values == sym.theta.values});

    Hom one = identity_hom(t1);
    auto kv1 = subgroup_group(t1, kernel_of(one));
    CliffordPair triv = pair_make(one, trivial_character(kv1.group));
    CliffordPair stand = induce_pair(triv, point_in_c2, kQ);
    CenterAlgebraInfo sinfo = center_algebra(stand, kQ);
    r.checks.push_back({"trivial theta induces through the sign stand-in: 2^2 * 2 = 8",
                        stand.ghat()->order() == 8 && stand.n.group->order() == 4 &&
                            sinfo.field == kQ && sinfo.orbit_size == 2});
  });
}

// ---------------------------------------------------------------------------
// corestriction: twisted slots, power kernels, degenerate cases

inline SuiteReport verify_corestriction(const std::filesystem::path& corpus) {
  return detail::run_suite("corestriction", [&](SuiteReport& r) {
    JsonRegistry reg;
    const FieldSpec kQ = FieldSpec::rationals();
    FieldSpec e3 = FieldSpec::cyclotomic(3);
    auto c3 = reg.group_file(corpus / "c3.json");
    auto c2 = reg.group_file(corpus / "c2.json");
    auto t1 = Group::trivial();

    Hom kappa = make_hom(c3, t1, std::vector<int>(3, 0));
    auto kv = subgroup_group(c3, kernel_of(kappa));
    CliffordPair p = pair_make(kappa, theta_select(kv.group, "faithful"));
    Hom point_in_c2 = make_hom(t1, c2, {0});

    GaloisActionMap twist =
        make_galois_action(c2, e3, {GaloisElem(e3, 1), GaloisElem(e3, 2)});
    CliffordPair tw = corestrict_pair(p, point_in_c2, twist, kQ);
    CliffordPair pl = corestrict_pair(p, point_in_c2, trivial_galois_action(c2, e3), kQ);

    auto c3sq = direct_product({c3, c3}).group;
    r.checks.push_back({"both corestrictions carry the kernel C3 x C3 in order 18",
                        tw.ghat()->order() == 18 && pl.ghat()->order() == 18 &&
                            is_isomorphic(*tw.n.group, *c3sq) &&
                            is_isomorphic(*pl.n.group, *c3sq)});

    // a slot decomposition visible from outside: two complementary order 3
    // subgroups with theta faithful on each, so every slot character stays
    // in the Galois orbit of the faithful theta
    auto slots_faithful = [&](const CliffordPair& cp) {
      ConjClasses cls = conj_classes(cp.n.group);
      std::vector<int> gens;
      for (int x = 1; x < cp.n.group->order(); ++x)
        if (cp.n.group->element_order(x) == 3) gens.push_back(x);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          std::set<int> si{0, gens[i], cp.n.group->mul(gens[i], gens[i])};
          std::set<int> sj{0, gens[j], cp.n.group->mul(gens[j], gens[j])};
          std::vector<int> inter;
          std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                std::back_inserter(inter));
          if (inter.size() == 1 && cp.theta.at_elem(cls, gens[i]) != Cyclotomic(Rational(1)) &&
              cp.theta.at_elem(cls, gens[j]) != Cyclotomic(Rational(1)))
            return true;
        }
      return false;
    };
    r.checks.push_back({"slot characters come from the faithful orbit in both cases",
                        slots_faithful(tw) && slots_faithful(pl)});

    auto atw = semi_invariance(tw, kQ);
    auto apl = semi_invariance(pl, kQ);
    r.checks.push_back({"the twisting action survives corestriction",
                        tw.theta.values != pl.theta.values && atw.has_value() &&
                            atw->map[1].rep == 2 && apl.has_value() && apl->map[1].rep == 1});

    CliffordPair sym = detail::corpus_pair(reg, corpus, "s3_to_c2.json", "faithful");
    auto asym = semi_invariance(sym, kQ);
    GaloisActionMap own{sym.target(), asym->field, asym->map};
    CliffordPair deg = corestrict_pair(sym, identity_hom(sym.target()), own, kQ);
    r.checks.push_back({"corestricting along the identity: kernel C3, theta still faithful",
                        is_isomorphic(*deg.ghat(), *sym.ghat()) && deg.n.group->order() == 3 &&
                            is_faithful_character(conj_classes(deg.n.group), deg.theta)});

    auto c6 = reg.group_file(corpus / "c6.json");
    auto s3 = reg.group_file(corpus / "s3.json");
    int g6 = detail::first_of_order(*c6, 6);
    int g3 = detail::first_of_order(*c3, 3);
    int t3 = detail::first_of_order(*s3, 3);
    std::vector<int> down(6), inc_im(3);
    for (long k = 0; k < 6; ++k)
      down[detail::power_of(*c6, g6, k)] = detail::power_of(*c3, g3, k % 3);
    for (long k = 0; k < 3; ++k)
      inc_im[detail::power_of(*c3, g3, k)] = detail::power_of(*s3, t3, k);
    Hom six_to_three = make_hom(c6, c3, down);
    auto kv6 = subgroup_group(c6, kernel_of(six_to_three));
    CliffordPair half = pair_make(six_to_three, theta_select(kv6.group, "faithful"));
    Hom inc = make_hom(c3, s3, inc_im);
    CliffordPair cor = corestrict_pair(half, inc, trivial_galois_action(s3, kQ), kQ);
    auto c2sq = direct_product({c2, c2}).group;
    r.checks.push_back({"index two inclusion: kernel becomes C2 x C2 in order 24",
                        cor.ghat()->order() == 24 && is_isomorphic(*cor.n.group, *c2sq)});
  });
}

// ---------------------------------------------------------------------------
// second cohomology against brute enumeration, and multipliers

inline SuiteReport verify_cohomology(const std::filesystem::path& corpus) {
  return detail::run_suite("cohomology", [&](SuiteReport& r) {
    JsonRegistry reg;

    struct Enumerated {
      std::string name;
      long m;
      std::vector<long> want;
    };
    for (const auto& inst : {Enumerated{"c2", 2, {2}}, Enumerated{"c3", 2, {}},
                             Enumerated{"v4", 2, {2, 2, 2}}}) {
      auto g = reg.group_file(corpus / (inst.name + ".json"));
      H2Result h = h2_cyclic(g, inst.m);
      auto [cocycles, coboundaries] = detail::cocycle_counts(*g, inst.m);
      long size = 1;
      for (long f : h.invariant_factors) size *= f;
      bool ok = h.invariant_factors == inst.want && cocycles % coboundaries == 0 &&
                cocycles / coboundaries == size;
      r.checks.push_back({"H2(" + inst.name + ", Z/" + std::to_string(inst.m) +
                              ") = " + detail::factors_str(inst.want) +
                              ", matching the cocycle census",
                          ok});
    }

    struct Mult {
      std::string name;
      std::vector<long> want;
    };
    for (const auto& inst :
         {Mult{"s3", {}}, Mult{"v4", {2}}, Mult{"q8", {}}, Mult{"a4", {2}}}) {
      auto g = reg.group_file(corpus / (inst.name + ".json"));
      H2Result h = schur_multiplier(g);
      r.checks.push_back({"multiplier of " + inst.name + " is " + detail::factors_str(inst.want),
                          h.invariant_factors == inst.want &&
                              h.coefficient_modulus == g->order()});
    }

    bool ok = true;
    for (const auto& [name, m] :
         std::vector<std::pair<std::string, long>>{{"c2", 2}, {"c4", 2}, {"c4", 4}, {"c6", 4},
                                                   {"s3", 6}, {"d8", 2}, {"q8", 8}, {"d10", 2},
                                                   {"a4", 6}}) {
      auto g = reg.group_file(corpus / (name + ".json"));
      H2Result h = h2_cyclic(g, m);
      long prev = 1;
      for (long f : h.invariant_factors) {
        if (std::gcd(static_cast<long>(g->order()), m) % f != 0) ok = false;
        if (f % prev != 0) ok = false;
        prev = f;
      }
    }
    r.checks.push_back({"every invariant factor divides gcd(|G|, m), in a divisor chain", ok});
  });
}

// ---------------------------------------------------------------------------
// dispatch

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "chartab",  "idempotents",   "semiinvariance", "identity",
      "closure",  "induction",     "corestriction",  "cohomology"};
  return names;
}

inline SuiteReport verify_suite(const std::string& name, const std::filesystem::path& corpus) {
  if (name == "chartab") return verify_chartab(corpus);
  if (name == "idempotents") return verify_idempotents(corpus);
  if (name == "semiinvariance") return verify_semiinvariance(corpus);
  if (name == "identity") return verify_identity(corpus);
  if (name == "closure") return verify_closure(corpus);
  if (name == "induction") return verify_induction(corpus);
  if (name == "corestriction") return verify_corestriction(corpus);
  if (name == "cohomology") return verify_cohomology(corpus);
  std::string all;
  for (const auto& n : verify_suite_names()) all += (all.empty() ? "" : ", ") + n;
  throw domain_error("unknown suite: " + name + " (choose from " + all + ", or all)");
}

inline std::vector<SuiteReport> verify_run(const std::string& which,
                                           const std::filesystem::path& corpus) {
  std::vector<SuiteReport> out;
  if (which == "all") {
    for (const auto& n : verify_suite_names()) out.push_back(verify_suite(n, corpus));
  } else {
    out.push_back(verify_suite(which, corpus));
  }
  return out;
}

inline std::string reports_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  int failed = 0;
  for (const auto& r : reports) {
    out += r.text();
    if (!r.ok()) ++failed;
  }
  if (reports.size() > 1)
    out += failed == 0 ? "all suites passed\n" : std::to_string(failed) + " suite(s) failed\n";
  return out;
}

}  // namespace cliffpair
