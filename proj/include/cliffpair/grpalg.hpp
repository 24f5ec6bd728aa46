#pragma once

// Exact group-algebra arithmetic: central idempotents attached to
// irreducible characters, their Galois sums over a chosen base field, the
// conjugation transport n -> g^{-1} n g, and commutants of explicit
// matrix representations.  Everything is dense; the order cap keeps the
// convolutions cheap.

#include <vector>

#include "cliffpair/charkit.hpp"
#include "cliffpair/linalg.hpp"

namespace cliffpair {

struct AlgElem {
  GroupPtr group;
  std::vector<Cyclotomic> coeffs;

  bool operator==(const AlgElem& o) const {
    return group == o.group && coeffs == o.coeffs;
  }
};

inline AlgElem alg_zero(GroupPtr g) {
  return AlgElem{g, std::vector<Cyclotomic>(g->order())};
}

inline AlgElem alg_one(GroupPtr g) {
  AlgElem a = alg_zero(g);
  a.coeffs[0] = Cyclotomic(Rational(1));
  return a;
}

inline AlgElem alg_add(const AlgElem& a, const AlgElem& b) {
  if (a.group != b.group) throw domain_error("group algebra mismatch");
  AlgElem c = a;
  for (int x = 0; x < a.group->order(); ++x) c.coeffs[x] = c.coeffs[x] + b.coeffs[x];
  return c;
}

inline AlgElem alg_scale(const Cyclotomic& s, const AlgElem& a) {
  AlgElem c = a;
  for (auto& v : c.coeffs) v = s * v;
  return c;
}

inline AlgElem alg_mul(const AlgElem& a, const AlgElem& b) {
  if (a.group != b.group) throw domain_error("group algebra mismatch");
  AlgElem c = alg_zero(a.group);
  for (int x = 0; x < a.group->order(); ++x) {
    if (a.coeffs[x].is_zero()) continue;
    for (int y = 0; y < b.group->order(); ++y) {
      if (b.coeffs[y].is_zero()) continue;
      int z = a.group->mul(x, y);
      c.coeffs[z] = c.coeffs[z] + a.coeffs[x] * b.coeffs[y];
    }
  }
  return c;
}

// e_theta = (theta(1)/|N|) sum_n theta(n^{-1}) n
inline AlgElem idempotent_e(const Character& theta) {
  ConjClasses cls = conj_classes(theta.group);
  if (!is_irreducible_character(cls, theta))
    throw domain_error("idempotent requires an irreducible character");
  const Group& n = *theta.group;
  Cyclotomic scale = theta.values[0] / Cyclotomic(Rational(n.order()));
  AlgElem e = alg_zero(theta.group);
  for (int x = 0; x < n.order(); ++x)
    e.coeffs[x] = scale * theta.at_elem(cls, n.inv(x));
  return e;
}

// e_{theta,F} = sum over Gal(F(theta)/F) of the coefficient-wise images
inline AlgElem idempotent_eF(const Character& theta, const FieldSpec& F) {
  AlgElem e = idempotent_e(theta);
  FieldSpec E = character_field(theta, F);
  AlgElem out = alg_zero(theta.group);
  for (const auto& s : galois_group(E, F)) {
    AlgElem img = e;
    for (auto& v : img.coeffs) v = galois_apply(s, v);
    out = alg_add(out, img);
  }
  return out;
}

// coefficient transport along n -> g^{-1} n g, with g taken in the
// ambient group of the inclusion
inline AlgElem conj_alg(const AlgElem& a, int g, const Hom& n_in) {
  if (a.group != n_in.src) throw domain_error("element is not over the included subgroup");
  const Group& big = *n_in.dst;
  std::vector<int> members = n_in.images;
  std::sort(members.begin(), members.end());
  if (!is_normal(big, members)) throw domain_error("subgroup is not normal");
  std::vector<int> to_sub(big.order(), -1);
  for (int i = 0; i < a.group->order(); ++i) to_sub[n_in(i)] = i;
  AlgElem out = alg_zero(a.group);
  for (int x = 0; x < a.group->order(); ++x) {
    int moved = to_sub[big.conj(n_in(x), g)];
    out.coeffs[moved] = a.coeffs[x];
  }
  return out;
}

inline AlgElem galois_alg(const AlgElem& a, long t) {
  AlgElem out = a;
  for (auto& v : out.coeffs)
    if (v.conductor() > 1) v = galois_power(v, t);
  return out;
}

// orbit of e_{theta,F} under the conjugation action of G, pulled back
// through kappa; the stabilizer is reported inside G
struct OrbitIdempotent {
  AlgElem sum;
  long orbit_size;
  std::vector<int> stabilizer;
};

inline OrbitIdempotent orbit_idempotent(const Character& theta, const FieldSpec& F,
                                        const Hom& kappa, const SubgroupView& n_view) {
  if (n_view.incl.dst != kappa.src) throw domain_error("kernel view is not inside the source");
  if (theta.group != n_view.group) throw domain_error("character is not over the kernel view");
  if (n_view.incl.images != kernel_of(kappa))
    throw domain_error("view does not cover the kernel");
  const Group& g = *kappa.dst;
  if (!is_surjective(kappa)) throw domain_error("kappa must be onto");

  AlgElem e = idempotent_eF(theta, F);
  // one lift per base element; the choice is irrelevant since the kernel
  // fixes central elements of its own algebra
  std::vector<int> lift(g.order(), -1);
  for (int x = 0; x < kappa.src->order(); ++x)
    if (lift[kappa(x)] == -1) lift[kappa(x)] = x;

  std::vector<AlgElem> orbit;
  std::vector<int> stab;
  for (int b = 0; b < g.order(); ++b) {
    AlgElem moved = conj_alg(e, lift[b], n_view.incl);
    if (moved == e) stab.push_back(b);
    if (std::find(orbit.begin(), orbit.end(), moved) == orbit.end())
      orbit.push_back(std::move(moved));
  }
  if (orbit.size() * stab.size() != static_cast<std::size_t>(g.order()))
    throw error("orbit and stabilizer sizes are inconsistent");
  AlgElem sum = alg_zero(theta.group);
  for (const auto& o : orbit) sum = alg_add(sum, o);
  return OrbitIdempotent{std::move(sum), static_cast<long>(orbit.size()), std::move(stab)};
}

// ---------------------------------------------------------------------------
// explicit modules and their commutants

using CycMatrix = std::vector<Cyclotomic>;  // row-major square matrix

inline CycMatrix cyc_identity(int d) {
  CycMatrix m(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] = Cyclotomic(Rational(1));
  return m;
}

inline CycMatrix cyc_mat_mul(int d, const CycMatrix& a, const CycMatrix& b) {
  CycMatrix c(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      const Cyclotomic& ail = a[static_cast<std::size_t>(i) * d + l];
      if (ail.is_zero()) continue;
      for (int j = 0; j < d; ++j)
        c[static_cast<std::size_t>(i) * d + j] =
            c[static_cast<std::size_t>(i) * d + j] + ail * b[static_cast<std::size_t>(l) * d + j];
    }
  return c;
}

struct ModuleRep {
  GroupPtr group;
  int dim;
  std::vector<CycMatrix> mats;
};

inline ModuleRep make_module_rep(GroupPtr g, int dim, std::vector<CycMatrix> mats) {
  if (dim < 1) throw domain_error("module dimension must be positive");
  if (static_cast<int>(mats.size()) != g->order()) throw domain_error("one matrix per element required");
  for (const auto& m : mats)
    if (static_cast<int>(m.size()) != dim * dim) throw domain_error("matrix size mismatch");
  if (mats[0] != cyc_identity(dim)) throw domain_error("identity must act as the identity matrix");
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      if (cyc_mat_mul(dim, mats[a], mats[b]) != mats[g->mul(a, b)])
        throw domain_error("matrices do not respect the multiplication table");
  return ModuleRep{g, dim, std::move(mats)};
}

inline ModuleRep module_rep_from_generators(
    GroupPtr g, int dim, const std::vector<std::pair<int, CycMatrix>>& gen_mats) {
  std::vector<CycMatrix> mats(g->order());
  std::vector<bool> known(g->order(), false);
  mats[0] = cyc_identity(dim);
  known[0] = true;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (const auto& [s, m] : gen_mats) {
      int y = g->mul(x, s);
      if (!known[y]) {
        mats[y] = cyc_mat_mul(dim, mats[x], m);
        known[y] = true;
        frontier.push_back(y);
      }
    }
  }
  for (bool k : known)
    if (!k) throw domain_error("the given elements do not generate the group");
  return make_module_rep(g, dim, std::move(mats));
}

inline ModuleRep regular_rep(GroupPtr g) {
  const int n = g->order();
  std::vector<CycMatrix> mats(n);
  for (int a = 0; a < n; ++a) {
    CycMatrix m(static_cast<std::size_t>(n) * n);
    // left translation: basis vector x is sent to ax
    for (int x = 0; x < n; ++x)
      m[static_cast<std::size_t>(g->mul(a, x)) * n + x] = Cyclotomic(Rational(1));
    mats[a] = std::move(m);
  }
  return make_module_rep(g, n, std::move(mats));
}

struct EndoBasis {
  ModuleRep rep;
  Hom n_in;
  std::vector<CycMatrix> basis;
  long rational_dimension;

  long dimension_over(const FieldSpec& f) const {
    long deg = f.degree();
    if (rational_dimension % deg != 0)
      throw domain_error("commutant dimension is not divisible by the field degree");
    return rational_dimension / deg;
  }
};

// basis of { X : X mats[n] = mats[n] X for all n in the included subgroup },
// solved over the rationals with entries flattened along the power basis of
// the smallest cyclotomic field containing every matrix entry
inline EndoBasis commutant_basis(const ModuleRep& rep, const Hom& n_in) {
  if (n_in.dst != rep.group) throw domain_error("subgroup is not inside the acting group");
  const int d = rep.dim;
  long cond = 1;
  for (const auto& m : rep.mats)
    for (const auto& v : m) cond = lcm_long(cond, v.conductor());
  const int phi = static_cast<int>(euler_phi(cond));
  auto embed = [&](const Cyclotomic& v) {
    std::vector<Rational> poly(cond, Rational(0));
    long stride = cond / v.conductor();
    for (std::size_t j = 0; j < v.coeffs().size(); ++j)
      poly[static_cast<std::size_t>(j) * stride] = v.coeffs()[j];
    return detail::reduce_mod_cyclo(poly, cond);
  };

  const int unknowns = d * d * phi;
  std::vector<std::vector<Rational>> eq_rows;
  for (int idx = 0; idx < n_in.src->order(); ++idx) {
    const CycMatrix& a = rep.mats[n_in(idx)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // (X A - A X)_{ij} = 0, expanded into phi rational equations
        std::vector<std::vector<Rational>> rows(phi, std::vector<Rational>(unknowns, Rational(0)));
        for (int l = 0; l < d; ++l)
          for (int c = 0; c < phi; ++c) {
            Cyclotomic zc = Cyclotomic::root_of_unity(cond, c);
            if (cond == 1) zc = Cyclotomic(Rational(1));
            auto plus = embed(zc * a[static_cast<std::size_t>(l) * d + j]);
            auto minus = embed(zc * a[static_cast<std::size_t>(i) * d + l]);
            for (int r = 0; r < phi; ++r) {
              rows[r][(static_cast<std::size_t>(i) * d + l) * phi + c] += plus[r];
              rows[r][(static_cast<std::size_t>(l) * d + j) * phi + c] -= minus[r];
            }
          }
        for (auto& r : rows) eq_rows.push_back(std::move(r));
      }
  }
  QMatrix sys(eq_rows.size(), static_cast<std::size_t>(unknowns));
  for (std::size_t i = 0; i < eq_rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) sys.at(i, j) = eq_rows[i][j];
  auto null_vecs = nullspace(sys);

  std::vector<CycMatrix> basis;
  for (const auto& v : null_vecs) {
    CycMatrix x(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Cyclotomic acc;
        for (int c = 0; c < phi; ++c) {
          Rational coef = v[(static_cast<std::size_t>(i) * d + j) * phi + c];
          if (coef != 0) {
            Cyclotomic zc = cond == 1 ? Cyclotomic(Rational(1)) : Cyclotomic::root_of_unity(cond, c);
            acc = acc + Cyclotomic(coef) * zc;
          }
        }
        x[static_cast<std::size_t>(i) * d + j] = acc;
      }
    basis.push_back(std::move(x));
  }
  // certify each basis matrix commutes
  for (const auto& x : basis)
    for (int idx = 0; idx < n_in.src->order(); ++idx) {
      const CycMatrix& a = rep.mats[n_in(idx)];
      if (cyc_mat_mul(d, x, a) != cyc_mat_mul(d, a, x))
        throw error("commutant solve produced a non-commuting matrix");
    }
  long dim = static_cast<long>(basis.size());
  return EndoBasis{rep, n_in, std::move(basis), dim};
}

}  // namespace cliffpair
