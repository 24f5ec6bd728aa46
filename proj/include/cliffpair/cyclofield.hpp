#pragma once

// Exact arithmetic in cyclotomic fields and their subfields.
//
// A value lives in Q(zeta_n) and is stored on the power basis
// 1, zeta_n, ..., zeta_n^{phi(n)-1} reduced modulo the n-th cyclotomic
// polynomial.  The conductor n is kept minimal and never congruent to
// 2 mod 4, so equality is plain coefficient comparison.  Subfields are
// named by a conductor together with the subgroup of (Z/n)* fixing them
// pointwise; by Kronecker-Weber that covers every field this library
// needs to talk about.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "cliffpair/linalg.hpp"
#include "cliffpair/rational.hpp"

namespace cliffpair {

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Representatives of (Z/n)* live in [1, n); the degenerate modulus 1 uses
// the single label 1 so "contains 1" stays uniform.
inline long unit_reduce(long k, long n) {
  if (n == 1) return 1;
  long r = k % n;
  if (r < 0) r += n;
  if (r == 0 || std::gcd(r, n) != 1)
    throw domain_error("not a unit mod " + std::to_string(n) + ": " + std::to_string(k));
  return r;
}

inline long unit_mul(long a, long b, long n) { return n == 1 ? 1 : (a * b) % n; }

inline long unit_inv(long a, long n) {
  if (n == 1) return 1;
  long t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw domain_error("not invertible mod " + std::to_string(n));
  return t < 0 ? t + n : t;
}

inline std::vector<long> units_mod(long n) {
  if (n == 1) return {1};
  std::vector<long> out;
  for (long k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

namespace detail {

// Monic integer coefficients of the n-th cyclotomic polynomial, low degree
// first, computed by exact division of x^n - 1 and memoized.
inline const std::vector<Integer>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (long d : divisors_of(n)) {
    if (cache.count(d)) continue;
    std::vector<Integer> num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (long e : divisors_of(d)) {
      if (e == d) continue;
      const auto& den = cache.at(e);
      // synthetic division by a monic divisor; the division is exact
      std::vector<Integer> quot(num.size() - den.size() + 1);
      for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
      }
      for (const auto& rem : num)
        if (rem != 0) throw error("cyclotomic polynomial division left a remainder");
      num = std::move(quot);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

// Reduce a polynomial in zeta_n: fold exponents mod n, then divide by the
// cyclotomic polynomial.  Result has length phi(n).
inline std::vector<Rational> reduce_mod_cyclo(const std::vector<Rational>& p, long n) {
  const auto& phi_poly = cyclotomic_poly(n);
  const std::size_t deg = phi_poly.size() - 1;
  std::vector<Rational> q(static_cast<std::size_t>(n) > deg ? static_cast<std::size_t>(n) : deg + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    q[i % n] += p[i];
  }
  for (long i = static_cast<long>(q.size()) - 1; i >= static_cast<long>(deg); --i) {
    if (q[i] == 0) continue;
    Rational c = q[i];
    for (std::size_t j = 0; j < phi_poly.size(); ++j)
      q[i - deg + j] -= c * Rational(phi_poly[j]);
  }
  q.resize(deg);
  return q;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : cond_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : cond_(1), coeffs_{r} {}
  Cyclotomic(long v) : cond_(1), coeffs_{Rational(v)} {}

  // Arbitrary conductor and phi(n) coefficients; renormalized on entry, so
  // non-minimal or 2 mod 4 conductors are accepted and rewritten.
  Cyclotomic(long n, const std::vector<Rational>& coeffs) {
    if (n < 1) throw domain_error("conductor must be positive");
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(n)))
      throw domain_error("coefficient count does not match phi(conductor)");
    if (n % 4 == 2) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        acc = acc + Cyclotomic(coeffs[i]) * root_of_unity(n, static_cast<long>(i));
      *this = acc;
      return;
    }
    cond_ = n;
    coeffs_ = coeffs;
    normalize();
  }

  // zeta_n^k, expressed at its exact conductor.
  static Cyclotomic root_of_unity(long n, long k) {
    if (n < 1) throw domain_error("root order must be positive");
    long kk = ((k % n) + n) % n;
    long g = std::gcd(kk, n);
    if (kk == 0) g = n;
    long d = n / g, j = (g == n) ? 0 : kk / g;
    if (d == 1) return Cyclotomic(Rational(1));
    if (d % 4 == 2) {
      long m = d / 2;  // odd; zeta_d = -zeta_m^{(m+1)/2}
      long e = (j % m) * ((m + 1) / 2) % m;
      Cyclotomic z = raw_monomial(m, e);
      for (auto& c : z.coeffs_) c = -c;
      return z;
    }
    return raw_monomial(d, j);
  }

  long conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const { return cond_ == 1; }
  Rational rational_value() const {
    if (cond_ != 1) throw domain_error("value is irrational");
    return coeffs_[0];
  }

  Cyclotomic conjugate() const {
    return cond_ == 1 ? *this : galois_power(*this, cond_ - 1);
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long l = lcm_long(a.cond_, b.cond_);
    std::vector<Rational> pa = a.raised_coeffs(l), pb = b.raised_coeffs(l);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] += pb[i];
    Cyclotomic out;
    out.cond_ = l;
    out.coeffs_ = std::move(pa);
    out.normalize();
    return out;
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long l = lcm_long(a.cond_, b.cond_);
    std::vector<Rational> pa = a.raised_coeffs(l), pb = b.raised_coeffs(l);
    std::vector<Rational> prod(pa.size() + pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (pa[i] == 0) continue;
      for (std::size_t j = 0; j < pb.size(); ++j)
        if (pb[j] != 0) prod[i + j] += pa[i] * pb[j];
    }
    Cyclotomic out;
    out.cond_ = l;
    out.coeffs_ = detail::reduce_mod_cyclo(prod, l);
    out.normalize();
    return out;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    long l = lcm_long(a.cond_, b.cond_);
    std::vector<Rational> pa = a.raised_coeffs(l), pb = b.raised_coeffs(l);
    // columns of M are b * zeta^j; solve M q = a
    std::size_t dim = pa.size();
    QMatrix M(dim, dim);
    std::vector<Rational> col = pb;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) M.at(i, j) = col[i];
      if (j + 1 < dim) {
        col.insert(col.begin(), Rational(0));
        col = detail::reduce_mod_cyclo(col, l);
      }
    }
    auto sol = solve(M, pa);
    if (!sol) throw error("division failed in a field");
    Cyclotomic out;
    out.cond_ = l;
    out.coeffs_ = std::move(*sol);
    out.normalize();
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.cond_ == b.cond_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // zeta -> zeta^k for k a unit mod the conductor; conductor is preserved.
  friend Cyclotomic galois_power(const Cyclotomic& x, long k) {
    if (x.cond_ == 1) return x;
    long kk = unit_reduce(k, x.cond_);
    std::vector<Rational> p(x.cond_);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      p[(i * kk) % x.cond_] += x.coeffs_[i];
    }
    Cyclotomic out;
    out.cond_ = x.cond_;
    out.coeffs_ = detail::reduce_mod_cyclo(p, x.cond_);
    return out;
  }

 private:
  long cond_;
  std::vector<Rational> coeffs_;

  static Cyclotomic raw_monomial(long n, long e) {
    Cyclotomic out;
    out.cond_ = n;
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1);
    p[e] = 1;
    out.coeffs_ = detail::reduce_mod_cyclo(p, n);
    return out;
  }

  // Coefficients of this value rewritten in Q(zeta_l), cond_ | l.
  std::vector<Rational> raised_coeffs(long l) const {
    if (l == cond_) return coeffs_;
    long stride = l / cond_;
    std::vector<Rational> p(static_cast<std::size_t>(coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * stride] = coeffs_[i];
    return detail::reduce_mod_cyclo(p, l);
  }

  // Maximal proper divisors of n inside the allowed conductor set.
  static std::vector<long> descent_candidates(long n) {
    std::set<long> out;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      long d = n / p;
      if (d % 4 == 2) d /= 2;
      out.insert(d);
      while (m % p == 0) m /= p;
    }
    if (m > 1) {
      long d = n / m;
      if (d % 4 == 2) d /= 2;
      out.insert(d);
    }
    return {out.begin(), out.end()};
  }

  // Try to rewrite at conductor d | cond_: solve for coordinates along the
  // embedded power basis of Q(zeta_d).
  std::optional<std::vector<Rational>> written_at(long d) const {
    long stride = cond_ / d;
    std::size_t sub_dim = static_cast<std::size_t>(euler_phi(d));
    QMatrix A(coeffs_.size(), sub_dim);
    for (std::size_t j = 0; j < sub_dim; ++j) {
      std::vector<Rational> mono(j * stride + 1);
      mono[j * stride] = 1;
      auto col = detail::reduce_mod_cyclo(mono, cond_);
      for (std::size_t i = 0; i < col.size(); ++i) A.at(i, j) = col[i];
    }
    return solve(A, coeffs_);
  }

  void normalize() {
    bool descended = true;
    while (descended && cond_ > 1) {
      descended = false;
      for (long d : descent_candidates(cond_)) {
        if (auto sub = written_at(d)) {
          cond_ = d;
          coeffs_ = std::move(*sub);
          descended = true;
          break;
        }
      }
    }
  }
};

// Deterministic total order used wherever cyclotomic values are sorted.
inline bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.coeffs() < b.coeffs();
}

// A subfield of Q(zeta_n): the fixed field of `stabilizer` <= (Z/n)*.
// Canonical form uses the smallest conductor that still contains the field.
class FieldSpec {
 public:
  FieldSpec() : cond_(1), stab_{1} {}

  FieldSpec(long n, std::vector<long> stabilizer) {
    if (n < 1) throw domain_error("conductor must be positive");
    if (n % 4 == 2) {
      // Q(zeta_n) = Q(zeta_{n/2}) for odd n/2; relabel the units
      long m = n / 2;
      std::vector<long> relabeled;
      for (long k : stabilizer) relabeled.push_back(unit_reduce(unit_reduce(k, n), m));
      *this = FieldSpec(m, relabeled);
      return;
    }
    std::set<long> s;
    for (long k : stabilizer) s.insert(unit_reduce(k, n));
    if (!s.count(1)) throw domain_error("stabilizer must contain 1");
    for (long a : s)
      for (long b : s)
        if (!s.count(unit_mul(a, b, n))) throw domain_error("stabilizer is not closed");
    cond_ = n;
    stab_.assign(s.begin(), s.end());
    canonicalize();
  }

  static FieldSpec rationals() { return FieldSpec(); }

  static FieldSpec cyclotomic(long n) { return FieldSpec(n, {1}); }

  static FieldSpec fixed_field(long n, const std::vector<long>& gens) {
    std::set<long> s{1};
    std::vector<long> frontier{1};
    while (!frontier.empty()) {
      long x = frontier.back();
      frontier.pop_back();
      for (long g : gens) {
        long y = unit_mul(x, unit_reduce(g, n == 1 ? 1 : n), n);
        if (s.insert(y).second) frontier.push_back(y);
      }
    }
    return FieldSpec(n, {s.begin(), s.end()});
  }

  long conductor() const { return cond_; }
  const std::vector<long>& stabilizer() const { return stab_; }

  long degree() const { return euler_phi(cond_) / static_cast<long>(stab_.size()); }

  // Stabilizer viewed inside (Z/m)*, cond_ | m.
  std::vector<long> lift_stabilizer(long m) const {
    if (m % cond_ != 0) throw domain_error("lift target is not a multiple of the conductor");
    std::vector<long> out;
    for (long k : units_mod(m)) {
      long r = cond_ == 1 ? 1 : unit_reduce(k, cond_);
      if (std::binary_search(stab_.begin(), stab_.end(), r)) out.push_back(k);
    }
    return out;
  }

  bool contains_field(const FieldSpec& sub) const {
    long m = lcm_long(cond_, sub.cond_);
    auto mine = lift_stabilizer(m), theirs = sub.lift_stabilizer(m);
    return std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end());
  }

  bool contains(const Cyclotomic& x) const {
    if (cond_ % x.conductor() != 0) return false;
    for (long k : stab_) {
      long r = x.conductor() == 1 ? 1 : unit_reduce(k, x.conductor());
      if (galois_power(x, r) != x) return false;
    }
    return true;
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  long cond_;
  std::vector<long> stab_;

  void canonicalize() {
    auto units = units_mod(cond_);
    for (long m : divisors_of(cond_)) {
      if (m % 4 == 2) continue;
      bool fixes = true;
      for (long k : units) {
        bool in_kernel = (m == 1) || (k % m == 1);
        if (in_kernel && !std::binary_search(stab_.begin(), stab_.end(), k)) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      std::set<long> reduced;
      for (long k : stab_) reduced.insert(m == 1 ? 1 : unit_reduce(k, m));
      cond_ = m;
      stab_.assign(reduced.begin(), reduced.end());
      return;
    }
  }
};

// One automorphism of `domain`, represented by a unit mod its conductor;
// units in the same stabilizer coset act identically, so the stored
// representative is the least element of its coset.
struct GaloisElem {
  FieldSpec domain;
  long rep;

  GaloisElem() : domain(), rep(1) {}
  GaloisElem(const FieldSpec& d, long k) : domain(d) {
    long n = d.conductor();
    long kk = unit_reduce(k, n);
    rep = kk;
    for (long s : d.stabilizer()) rep = std::min(rep, unit_mul(kk, s, n));
  }

  bool is_identity() const { return rep == domain.stabilizer().front(); }
  bool operator==(const GaloisElem&) const = default;
};

inline GaloisElem galois_compose(const GaloisElem& a, const GaloisElem& b) {
  if (!(a.domain == b.domain)) throw domain_error("automorphisms of different fields");
  return GaloisElem(a.domain, unit_mul(a.rep, b.rep, a.domain.conductor()));
}

inline GaloisElem galois_inverse(const GaloisElem& a) {
  return GaloisElem(a.domain, unit_inv(a.rep, a.domain.conductor()));
}

inline Cyclotomic galois_apply(const GaloisElem& s, const Cyclotomic& x) {
  long m = x.conductor();
  if (s.domain.conductor() % m != 0)
    throw domain_error("value lies outside the automorphism's field");
  return m == 1 ? x : galois_power(x, unit_reduce(s.rep, m));
}

// Gal(E/F) for F <= E, identity first, then ascending representatives.
inline std::vector<GaloisElem> galois_group(const FieldSpec& E, const FieldSpec& F) {
  if (!E.contains_field(F)) throw domain_error("base field is not contained in the extension");
  long n = E.conductor();
  std::set<long> reps;
  for (long k : F.lift_stabilizer(n)) reps.insert(GaloisElem(E, k).rep);
  std::vector<GaloisElem> out;
  for (long k : reps) out.emplace_back(E, k);
  if (static_cast<long>(out.size()) != E.degree() / F.degree())
    throw error("Galois group size mismatch");
  return out;
}

inline Cyclotomic trace_map(const FieldSpec& E, const FieldSpec& F, const Cyclotomic& x) {
  if (!E.contains(x)) throw domain_error("trace argument lies outside the extension");
  Cyclotomic acc;
  for (const auto& s : galois_group(E, F)) acc = acc + galois_apply(s, x);
  return acc;
}

// Smallest field containing `base` and every listed value.
inline FieldSpec field_of_values(const std::vector<Cyclotomic>& values, const FieldSpec& base) {
  long n = base.conductor();
  for (const auto& v : values) n = lcm_long(n, v.conductor());
  std::vector<long> keep;
  for (long k : base.lift_stabilizer(n)) {
    bool fixes = true;
    for (const auto& v : values) {
      long r = v.conductor() == 1 ? 1 : unit_reduce(k, v.conductor());
      if (galois_power(v, r) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) keep.push_back(k);
  }
  return FieldSpec(n, keep);
}

}  // namespace cliffpair
