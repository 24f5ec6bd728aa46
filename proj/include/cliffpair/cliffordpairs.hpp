#pragma once

// Pairs (theta, kappa): a surjection kappa onto a fixed target group
// together with an irreducible character theta of its kernel.  The
// operations here move such pairs around (conjugate, multiply, restrict,
// induce, corestrict, reduce) while tracking how the target group acts on
// the character's field of values.  Every construction that promises a
// particular center is re-checked against the computed one.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cliffpair/charkit.hpp"
#include "cliffpair/cyclofield.hpp"
#include "cliffpair/groupkit.hpp"
#include "cliffpair/grpalg.hpp"
#include "cliffpair/rational.hpp"

namespace cliffpair {

// ---------------------------------------------------------------------------
// action maps and pairs

// g |-> automorphism of `field`, multiplicative in g.
struct GaloisActionMap {
  GroupPtr group;
  FieldSpec field;
  std::vector<GaloisElem> map;  // one entry per group element
};

inline GaloisActionMap make_galois_action(GroupPtr g, const FieldSpec& field,
                                          std::vector<GaloisElem> map) {
  if (static_cast<int>(map.size()) != g->order())
    throw domain_error("one automorphism per group element required");
  for (const auto& s : map)
    if (s.domain != field) throw domain_error("automorphism domain mismatch");
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      if (map[g->mul(a, b)] != galois_compose(map[a], map[b]))
        throw domain_error("action map is not multiplicative");
  return GaloisActionMap{g, field, std::move(map)};
}

inline GaloisActionMap trivial_galois_action(GroupPtr g, const FieldSpec& field) {
  return GaloisActionMap{g, field, std::vector<GaloisElem>(g->order(), GaloisElem(field, 1))};
}

struct CliffordPair {
  Hom kappa;        // Ghat -> G, onto
  SubgroupView n;   // ker kappa materialized
  Character theta;  // irreducible, over n.group

  GroupPtr ghat() const { return kappa.src; }
  GroupPtr target() const { return kappa.dst; }
};

namespace detail {

// moves a character onto another presentation of the same table
inline Character rebind_character(const Character& chi, GroupPtr g) {
  if (chi.group == g) return chi;
  if (chi.group->table() != g->table())
    throw domain_error("character does not live on the kernel");
  return Character{g, chi.values};
}

}  // namespace detail

inline CliffordPair pair_make(const Hom& kappa, const Character& theta) {
  if (!is_surjective(kappa)) throw domain_error("kappa must be onto");
  auto view = subgroup_group(kappa.src, kernel_of(kappa));
  Character bound = detail::rebind_character(theta, view.group);
  if (!is_irreducible_character(conj_classes(view.group), bound))
    throw domain_error("theta must be irreducible");
  return CliffordPair{kappa, std::move(view), std::move(bound)};
}

// ---------------------------------------------------------------------------
// semi-invariance

// The unique alpha_g with theta^{g alpha_g} = theta, when one exists for
// every g; the assignment is then a homomorphism into Gal(F(theta)/F),
// and its lift through kappa has kernel exactly the stabilizer of theta.
inline std::optional<GaloisActionMap> semi_invariance(const CliffordPair& p, const FieldSpec& F) {
  FieldSpec E = field_of_values(p.theta.values, F);
  auto gal = galois_group(E, F);
  const Group& g = *p.target();

  std::vector<int> lift(g.order(), -1);
  for (int x = 0; x < p.ghat()->order(); ++x)
    if (lift[p.kappa(x)] == -1) lift[p.kappa(x)] = x;

  std::vector<GaloisElem> map;
  for (int b = 0; b < g.order(); ++b) {
    Character moved = conj_character(p.n, p.theta, lift[b]);
    const GaloisElem* found = nullptr;
    for (const auto& s : gal) {
      bool hit = true;
      for (std::size_t j = 0; j < moved.values.size(); ++j)
        if (galois_apply(s, moved.values[j]) != p.theta.values[j]) {
          hit = false;
          break;
        }
      if (hit) {
        if (found) throw error("semi-invariance witness is not unique");
        found = &s;
      }
    }
    if (!found) return std::nullopt;
    map.push_back(*found);
  }
  auto out = make_galois_action(p.kappa.dst, E, std::move(map));

  // the lifted kernel must be the full stabilizer of theta
  for (int x = 0; x < p.ghat()->order(); ++x) {
    bool fixes = conj_character(p.n, p.theta, x).values == p.theta.values;
    if (fixes != (out.map[p.kappa(x)].rep == 1))
      throw error("semi-invariance kernel mismatch");
  }
  return out;
}

// ---------------------------------------------------------------------------
// restriction along a homomorphism into the target

// How the orbit of e_{theta,F} under the full target group breaks up under
// the subgroup coming in through eps.
struct SummandInfo {
  long g_orbit_size;
  std::vector<long> h_orbit_sizes;  // in first-touch order along the big orbit
  long base_orbit;                  // part containing e_{theta,F} itself
};

struct RestrictedPair {
  CliffordPair pair;
  SummandInfo info;
};

inline RestrictedPair restrict_pair(const CliffordPair& p, const Hom& eps, const FieldSpec& F) {
  if (eps.dst != p.kappa.dst) throw domain_error("restriction leg must end at the pair's target");
  const Group& g = *p.target();

  std::vector<int> lift(g.order(), -1);
  for (int x = 0; x < p.ghat()->order(); ++x)
    if (lift[p.kappa(x)] == -1) lift[p.kappa(x)] = x;

  AlgElem e = idempotent_eF(p.theta, F);
  std::vector<AlgElem> orbit;
  for (int b = 0; b < g.order(); ++b) {
    AlgElem moved = conj_alg(e, lift[b], p.n.incl);
    if (std::find(orbit.begin(), orbit.end(), moved) == orbit.end())
      orbit.push_back(std::move(moved));
  }

  std::vector<int> part(orbit.size(), -1);
  std::vector<long> sizes;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (part[i] != -1) continue;
    int id = static_cast<int>(sizes.size());
    std::vector<std::size_t> frontier{i};
    part[i] = id;
    long count = 1;
    while (!frontier.empty()) {
      std::size_t cur = frontier.back();
      frontier.pop_back();
      for (int h = 0; h < eps.src->order(); ++h) {
        AlgElem moved = conj_alg(orbit[cur], lift[eps(h)], p.n.incl);
        auto it = std::find(orbit.begin(), orbit.end(), moved);
        std::size_t j = static_cast<std::size_t>(it - orbit.begin());
        if (part[j] == -1) {
          part[j] = id;
          ++count;
          frontier.push_back(j);
        }
      }
    }
    sizes.push_back(count);
  }

  Pullback pb = pullback(p.kappa, eps);
  CliffordPair out = pair_make(pb.proj2, p.theta);
  return RestrictedPair{std::move(out),
                        SummandInfo{static_cast<long>(orbit.size()), std::move(sizes), part[0]}};
}

// ---------------------------------------------------------------------------
// the center of the F-algebra generated by the orbit of e_{theta,F}

// field E = F(theta), the orbit size r of e_{theta,F}, its stabilizer, and
// the stabilizer's action on E.  r * |stabilizer| = |G|, and r = 1 exactly
// when the pair is semi-invariant over F.
struct CenterAlgebraInfo {
  FieldSpec field;
  long orbit_size;
  std::vector<int> stabilizer;  // sorted inside the target group
  GaloisActionMap action;       // over the materialized stabilizer; map[i] goes with stabilizer[i]
};

inline CenterAlgebraInfo center_algebra(const CliffordPair& p, const FieldSpec& F) {
  FieldSpec E = field_of_values(p.theta.values, F);
  OrbitIdempotent orb = orbit_idempotent(p.theta, F, p.kappa, p.n);
  if ((orb.orbit_size == 1) != semi_invariance(p, F).has_value())
    throw error("orbit size and semi-invariance disagree");

  auto stab = subgroup_group(p.kappa.dst, orb.stabilizer);
  RestrictedPair rp = restrict_pair(p, stab.incl, F);
  auto act = semi_invariance(rp.pair, F);
  if (!act) throw error("stabilizer fails to act on the field of values");
  if (act->field != E) throw error("stabilizer action field mismatch");
  return CenterAlgebraInfo{std::move(E), orb.orbit_size, std::move(orb.stabilizer),
                           std::move(*act)};
}

// ---------------------------------------------------------------------------
// conjugates and products

inline CliffordPair conjugate_pair(const CliffordPair& p) {
  std::vector<Cyclotomic> values;
  for (const auto& v : p.theta.values) values.push_back(v.conjugate());
  return pair_make(p.kappa, Character{p.theta.group, std::move(values)});
}

// fiber product over the shared target; needs both pairs semi-invariant
// with the same field and the same action
inline CliffordPair product_pair(const CliffordPair& p1, const CliffordPair& p2,
                                 const FieldSpec& F) {
  if (p1.kappa.dst != p2.kappa.dst) throw domain_error("pairs must share a target group object");
  auto a1 = semi_invariance(p1, F);
  auto a2 = semi_invariance(p2, F);
  if (!a1 || !a2) throw domain_error("both factors must be semi-invariant");
  if (a1->field != a2->field) throw domain_error("fields of values differ");
  if (a1->map != a2->map) throw domain_error("action maps differ");

  Pullback pb = pullback(p1.kappa, p2.kappa);
  auto kv = subgroup_group(pb.group, kernel_of(pb.to_base));
  ConjClasses cls = conj_classes(kv.group);
  ConjClasses cls1 = conj_classes(p1.n.group);
  ConjClasses cls2 = conj_classes(p2.n.group);
  std::vector<int> to1(p1.ghat()->order(), -1), to2(p2.ghat()->order(), -1);
  for (int i = 0; i < p1.n.group->order(); ++i) to1[p1.n.incl(i)] = i;
  for (int i = 0; i < p2.n.group->order(); ++i) to2[p2.n.incl(i)] = i;
  std::vector<Cyclotomic> values(cls.size());
  for (int j = 0; j < cls.size(); ++j) {
    int x = kv.incl(cls.rep(j));
    values[j] = p1.theta.at_elem(cls1, to1[pb.proj1(x)]) *
                p2.theta.at_elem(cls2, to2[pb.proj2(x)]);
  }
  CliffordPair out = pair_make(pb.to_base, Character{kv.group, std::move(values)});

  long expect = static_cast<long>(p1.ghat()->order()) * p2.ghat()->order() /
                p1.kappa.dst->order();
  if (out.ghat()->order() != expect) throw error("product group has the wrong order");
  auto s = semi_invariance(out, F);
  if (!s || s->field != a1->field || s->map != a1->map)
    throw error("product center certification failed");
  return out;
}

// ---------------------------------------------------------------------------
// the pair attached to an action (E, beta): the unit of the construction

// Ghat = U x| C with C cyclic of order eps_order, U the pairs (g, k) in
// G x Gal(Q(zeta)/F) that agree on E, acting on C by c |-> k c; theta is
// induced from a faithful linear character of C.  The center comes out as
// (E, beta) again, and this is checked.
inline CliffordPair identity_pair(GroupPtr g, const GaloisActionMap& beta, long eps_order,
                                  const FieldSpec& F) {
  if (beta.group != g) throw domain_error("action map must live on the given group");
  const FieldSpec& E = beta.field;
  if (eps_order < 1) throw domain_error("root order must be positive");
  if (!FieldSpec::cyclotomic(eps_order).contains_field(E))
    throw domain_error("field does not embed at the chosen root order");
  if (!E.contains_field(F)) throw domain_error("base field must sit inside the action field");
  const long n = eps_order;

  std::vector<std::pair<int, long>> pairs;
  for (int b = 0; b < g->order(); ++b)
    for (long k : F.lift_stabilizer(n))
      if (GaloisElem(E, E.conductor() == 1 ? 1 : unit_reduce(k, E.conductor())) == beta.map[b])
        pairs.emplace_back(b, k);
  std::map<std::pair<int, long>, int> idx;
  for (std::size_t i = 0; i < pairs.size(); ++i) idx[pairs[i]] = static_cast<int>(i);

  const int u = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> utable(u, std::vector<int>(u));
  std::vector<std::string> ulabels(u);
  for (int a = 0; a < u; ++a) {
    ulabels[a] = "(" + g->labels()[pairs[a].first] + ";" + std::to_string(pairs[a].second) + ")";
    for (int b = 0; b < u; ++b) {
      auto key = std::make_pair(g->mul(pairs[a].first, pairs[b].first),
                                unit_mul(pairs[a].second, pairs[b].second, n));
      auto it = idx.find(key);
      if (it == idx.end()) throw error("agreement pairs are not closed under the product");
      utable[a][b] = it->second;
    }
  }
  auto ugroup = Group::from_cayley(utable, ulabels);
  auto c = Group::cyclic(static_cast<int>(n));

  std::vector<std::vector<int>> action(u, std::vector<int>(n));
  for (int a = 0; a < u; ++a)
    for (long x = 0; x < n; ++x) action[a][x] = static_cast<int>((pairs[a].second * x) % n);
  Semidirect sd = semidirect(ugroup, c, action);

  std::vector<int> images(sd.group->order());
  for (int a = 0; a < u; ++a)
    for (long x = 0; x < n; ++x)
      images[a * n + x] = pairs[a].first;
  Hom kappa = make_hom(sd.group, g, images);

  auto kv = subgroup_group(sd.group, kernel_of(kappa));
  std::vector<int> to_kv(sd.group->order(), -1);
  for (int i = 0; i < kv.group->order(); ++i) to_kv[kv.incl(i)] = i;
  std::vector<int> c_elems;
  for (long x = 0; x < n; ++x) c_elems.push_back(to_kv[sd.in_normal(static_cast<int>(x))]);
  std::sort(c_elems.begin(), c_elems.end());
  auto cview = subgroup_group(kv.group, c_elems);
  ConjClasses ccls = conj_classes(cview.group);
  std::vector<Cyclotomic> lam(ccls.size());
  for (int j = 0; j < ccls.size(); ++j) {
    int root = -1;
    for (long x = 0; x < n; ++x)
      if (to_kv[sd.in_normal(static_cast<int>(x))] == cview.incl(ccls.rep(j))) root = static_cast<int>(x);
    lam[j] = Cyclotomic::root_of_unity(n, root);
  }
  Character theta = induce_character(conj_classes(kv.group), cview, Character{cview.group, lam});

  CliffordPair out = pair_make(kappa, theta);
  CenterAlgebraInfo info = center_algebra(out, F);
  bool ok = info.field == E && info.orbit_size == 1 &&
            static_cast<int>(info.stabilizer.size()) == g->order();
  for (int b = 0; ok && b < g->order(); ++b) ok = info.action.map[b] == beta.map[b];
  if (!ok) throw error("identity pair center certification failed");
  return out;
}

// The concrete module behind identity_pair: Ghat acts on V = F(zeta_n),
// written on the power basis over Q, by (g,k ; x): v |-> sigma_k^{-1}(zeta^x v).
// The matrices are certified against the multiplication table, so the element
// encoding cannot drift away from the construction above.  The commutant of
// the kernel part recovers E acting on itself, of F-dimension [E:F].
struct IdentityModule {
  ModuleRep rep;
  Hom n_in;  // kernel inclusion, ready for commutant_basis
};

inline IdentityModule identity_module(const CliffordPair& p, const GaloisActionMap& beta,
                                      long eps_order, const FieldSpec& F) {
  const FieldSpec& E = beta.field;
  const long n = eps_order;
  if (n < 1) throw domain_error("root order must be positive");
  std::vector<std::pair<int, long>> pairs;
  for (int b = 0; b < beta.group->order(); ++b)
    for (long k : F.lift_stabilizer(n))
      if (GaloisElem(E, E.conductor() == 1 ? 1 : unit_reduce(k, E.conductor())) == beta.map[b])
        pairs.emplace_back(b, k);
  if (static_cast<long>(pairs.size()) * n != p.ghat()->order())
    throw domain_error("pair was not built from this action");

  const int d = static_cast<int>(euler_phi(n));
  auto coords = [&](long e) {
    std::vector<Rational> poly(n, Rational(0));
    poly[e % n] = Rational(1);
    return detail::reduce_mod_cyclo(poly, n);
  };
  std::vector<CycMatrix> mats(p.ghat()->order());
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    long kinv = 1;
    while (n > 1 && pairs[a].second * kinv % n != 1) ++kinv;
    for (long x = 0; x < n; ++x) {
      CycMatrix m(static_cast<std::size_t>(d) * d);
      for (int j = 0; j < d; ++j) {
        auto col = coords(((x + j) % n) * kinv % n);
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + j] = Cyclotomic(col[i]);
      }
      mats[a * n + x] = std::move(m);
    }
  }
  ModuleRep rep = make_module_rep(p.ghat(), d, std::move(mats));
  auto kv = subgroup_group(p.ghat(), kernel_of(p.kappa));
  return IdentityModule{std::move(rep), kv.incl};
}

// ---------------------------------------------------------------------------
// reduction to a faithful character of a cyclic kernel

// Quotients out ker theta (normal in Ghat by semi-invariance) for a pair
// with abelian kernel; field of values and action map survive unchanged.
inline CliffordPair cyclic_reduction(const CliffordPair& p, const FieldSpec& F) {
  if (!p.n.group->is_abelian()) throw domain_error("kernel is not abelian");
  auto alpha = semi_invariance(p, F);
  if (!alpha) throw domain_error("pair is not semi-invariant over the base field");

  ConjClasses cls_n = conj_classes(p.n.group);
  std::vector<int> k_up;
  for (int x : character_kernel(cls_n, p.theta)) k_up.push_back(p.n.incl(x));
  std::sort(k_up.begin(), k_up.end());
  if (!is_normal(*p.ghat(), k_up)) throw error("character kernel is not normal upstairs");

  Quotient qu = quotient(p.ghat(), k_up);
  std::vector<int> images(qu.group->order(), -1);
  for (int x = 0; x < p.ghat()->order(); ++x)
    if (images[qu.proj(x)] == -1) images[qu.proj(x)] = p.kappa(x);
  Hom kappa1 = make_hom(qu.group, p.kappa.dst, images);

  auto kv = subgroup_group(qu.group, kernel_of(kappa1));
  std::vector<int> to_n(p.ghat()->order(), -1);
  for (int i = 0; i < p.n.group->order(); ++i) to_n[p.n.incl(i)] = i;
  ConjClasses cls1 = conj_classes(kv.group);
  std::vector<Cyclotomic> values(cls1.size());
  for (int j = 0; j < cls1.size(); ++j) {
    int target = kv.incl(cls1.rep(j));
    int pre = -1;
    for (int x = 0; x < p.ghat()->order() && pre == -1; ++x)
      if (qu.proj(x) == target) pre = x;
    values[j] = p.theta.at_elem(cls_n, to_n[pre]);
  }
  CliffordPair out = pair_make(kappa1, Character{kv.group, std::move(values)});

  if (!out.n.group->is_cyclic()) throw error("reduced kernel is not cyclic");
  if (!is_faithful_character(conj_classes(out.n.group), out.theta))
    throw error("reduced character is not faithful");
  auto a1 = semi_invariance(out, F);
  if (!a1 || a1->field != alpha->field || a1->map != alpha->map)
    throw error("reduction changed the field or the action");
  return out;
}

// ---------------------------------------------------------------------------
// induction and corestriction along an inclusion into a bigger target

namespace detail {

// shared wreath-style scaffolding: compose kappa with the inclusion,
// extend over a right transversal of the image
struct TensorFrame {
  Transversal tr;
  ExtensionTensor ext;
  Character theta_m;  // theta moved onto the materialized small kernel
  ConjClasses cls_kv;
  SubgroupView kv;
  std::vector<int> to_m;  // Hhat element -> index in m_group
};

inline TensorFrame tensor_frame(const CliffordPair& p, const Hom& incl) {
  if (incl.src != p.kappa.dst) throw domain_error("inclusion must start at the pair's target");
  if (!is_injective(incl)) throw domain_error("inclusion must be one-to-one");
  Transversal tr = coset_transversal(incl.dst, image_of(incl));
  ExtensionTensor ext = extension_tensor(compose_hom(p.kappa, incl), tr);
  Character theta_m = rebind_character(p.theta, ext.m_group);
  auto kv = subgroup_group(ext.ghat, kernel_of(ext.kappa_g));
  ConjClasses cls_kv = conj_classes(kv.group);
  std::vector<int> to_m(p.ghat()->order(), -1);
  for (int i = 0; i < ext.m_group->order(); ++i) to_m[ext.m_in_hhat(i)] = i;
  return TensorFrame{std::move(tr), std::move(ext), std::move(theta_m),
                     std::move(cls_kv), std::move(kv), std::move(to_m)};
}

}  // namespace detail

// Induces a semi-invariant pair over H up to G: the kernel becomes the
// |G:H|-fold power of the old one, carrying theta in the slot of the
// trivial coset and 1 elsewhere.  A trivial theta is first replaced by the
// sign character on a C2 stand-in, which represents the same class.  The
// center of the result is certified: field unchanged, orbit size |G:H|,
// stabilizer the image of H, action the one we started from.
inline CliffordPair induce_pair(const CliffordPair& p, const Hom& incl, const FieldSpec& F) {
  if (incl.src != p.kappa.dst) throw domain_error("inclusion must start at the pair's target");
  if (!is_injective(incl)) throw domain_error("inclusion must be one-to-one");
  auto alpha = semi_invariance(p, F);
  if (!alpha) throw domain_error("pair is not semi-invariant over the base field");

  CliffordPair work = p;
  bool trivial = true;
  for (const auto& v : p.theta.values)
    if (v != Cyclotomic(Rational(1))) trivial = false;
  if (trivial) {
    auto c2 = Group::cyclic(2);
    Product pr = direct_product({p.kappa.dst, c2});
    auto kv = subgroup_group(pr.group, kernel_of(pr.proj[0]));
    ConjClasses cls = conj_classes(kv.group);
    std::vector<Cyclotomic> vals(cls.size());
    for (int j = 0; j < cls.size(); ++j)
      vals[j] = pr.proj[1](kv.incl(cls.rep(j))) == 0 ? Cyclotomic(Rational(1))
                                                     : Cyclotomic(Rational(-1));
    work = pair_make(pr.proj[0], Character{kv.group, std::move(vals)});
    alpha = semi_invariance(work, F);
    if (!alpha) throw error("stand-in pair lost semi-invariance");
  }

  auto fr = detail::tensor_frame(work, incl);
  ConjClasses cls_m = conj_classes(fr.ext.m_group);
  std::vector<Cyclotomic> values(fr.cls_kv.size());
  for (int j = 0; j < fr.cls_kv.size(); ++j) {
    int x = fr.kv.incl(fr.cls_kv.rep(j));
    values[j] = fr.theta_m.at_elem(cls_m, fr.to_m[fr.ext.comps_of[x][0]]);
  }
  CliffordPair out = pair_make(fr.ext.kappa_g, Character{fr.kv.group, std::move(values)});

  CenterAlgebraInfo info = center_algebra(out, F);
  std::vector<int> h_img = image_of(incl);
  bool ok = info.field == alpha->field &&
            info.orbit_size == static_cast<long>(fr.tr.reps.size()) &&
            info.stabilizer == h_img;
  for (int h = 0; ok && h < incl.src->order(); ++h) {
    auto it = std::lower_bound(h_img.begin(), h_img.end(), incl(h));
    ok = info.action.map[it - h_img.begin()] == alpha->map[h];
  }
  if (!ok) throw error("induced center certification failed");
  return out;
}

// Corestriction along incl for an action map beta on the big group
// extending the pair's own: the kernel again becomes a |G:H|-fold power,
// but slot t now carries theta twisted by beta at the coset
// representative.  Every slot character is certified to stay inside the
// Galois orbit of theta.
inline CliffordPair corestrict_pair(const CliffordPair& p, const Hom& incl,
                                    const GaloisActionMap& beta, const FieldSpec& F) {
  auto alpha = semi_invariance(p, F);
  if (!alpha) throw domain_error("pair is not semi-invariant over the base field");
  if (beta.group != incl.dst) throw domain_error("action map must live on the big group");
  if (beta.field != alpha->field) throw domain_error("action map field must be the field of values");
  for (int h = 0; h < incl.src->order(); ++h)
    if (beta.map[incl(h)] != alpha->map[h])
      throw domain_error("action map does not extend the pair's own");

  auto fr = detail::tensor_frame(p, incl);
  ConjClasses cls_m = conj_classes(fr.ext.m_group);
  const int slots = static_cast<int>(fr.tr.reps.size());

  std::vector<std::vector<Cyclotomic>> orbit;
  for (const auto& s : galois_group(alpha->field, F)) {
    std::vector<Cyclotomic> tw;
    for (const auto& v : fr.theta_m.values) tw.push_back(galois_apply(s, v));
    orbit.push_back(std::move(tw));
  }
  std::vector<std::vector<Cyclotomic>> slot_vals(slots);
  for (int t = 0; t < slots; ++t) {
    const GaloisElem& s = beta.map[fr.tr.reps[t]];
    for (const auto& v : fr.theta_m.values) slot_vals[t].push_back(galois_apply(s, v));
    if (std::find(orbit.begin(), orbit.end(), slot_vals[t]) == orbit.end())
      throw error("slot character left the Galois orbit");
  }

  std::vector<Cyclotomic> values(fr.cls_kv.size());
  for (int j = 0; j < fr.cls_kv.size(); ++j) {
    int x = fr.kv.incl(fr.cls_kv.rep(j));
    Cyclotomic acc{Rational(1)};
    for (int t = 0; t < slots; ++t) {
      int m = fr.to_m[fr.ext.comps_of[x][t]];
      acc = acc * slot_vals[t][cls_m.class_of[m]];
    }
    values[j] = acc;
  }
  CliffordPair out = pair_make(fr.ext.kappa_g, Character{fr.kv.group, std::move(values)});

  long kernel_size = 1;
  for (int t = 0; t < slots; ++t) kernel_size *= p.n.group->order();
  if (out.n.group->order() != kernel_size ||
      out.ghat()->order() != kernel_size * incl.dst->order())
    throw error("corestriction bookkeeping failed");
  return out;
}

// ---------------------------------------------------------------------------
// changing the base field

// Compares the pair over F with the same pair over a bigger K: reports the
// fixed field of the action's image, whether K sits inside it, whether the
// field of values stays put, and whether the two action maps agree where
// both are defined.
struct BaseFieldReport {
  FieldSpec fixed_field;   // elements of F(theta) fixed by the whole action
  bool k_in_fixed;
  bool theta_field_match;  // F(theta) = K(theta)
  bool actions_agree;
  bool compatible;         // all of the above
};

inline BaseFieldReport base_field_check(const CliffordPair& p, const FieldSpec& F,
                                        const FieldSpec& K) {
  if (!K.contains_field(F)) throw domain_error("comparison field must contain the base field");
  auto aF = semi_invariance(p, F);
  if (!aF) throw domain_error("pair is not semi-invariant over the base field");
  const FieldSpec& E = aF->field;

  std::vector<long> gens = E.stabilizer();
  for (const auto& s : aF->map) gens.push_back(s.rep);
  FieldSpec fixed = FieldSpec::fixed_field(E.conductor(), gens);

  bool k_in = fixed.contains_field(K);
  bool match = field_of_values(p.theta.values, K) == E;
  auto aK = semi_invariance(p, K);
  bool agree = aK.has_value();
  if (aK)
    for (int b = 0; agree && b < p.target()->order(); ++b) {
      long r = E.conductor() == 1 ? 1 : unit_reduce(aK->map[b].rep, E.conductor());
      agree = GaloisElem(E, r) == aF->map[b];
    }
  return BaseFieldReport{std::move(fixed), k_in, match, agree, k_in && match && agree};
}

}  // namespace cliffpair
