#pragma once

// Ordinary character theory, exact.  Tables are computed by splitting the
// class-sum matrices into common eigenspaces over a prime field F_p chosen
// large enough that degrees and root-of-unity multiplicities are recovered
// uniquely, then lifted to cyclotomic values.  Every finished table is
// certified by exact row orthogonality before it leaves the factory.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cliffpair/cyclofield.hpp"
#include "cliffpair/groupkit.hpp"

namespace cliffpair {

struct ConjClasses {
  GroupPtr group;
  std::vector<std::vector<int>> classes;  // sorted members; identity class first
  std::vector<int> class_of;
  std::vector<int> inverse_class;

  int size() const { return static_cast<int>(classes.size()); }
  int rep(int j) const { return classes[j][0]; }
};

inline ConjClasses conj_classes(GroupPtr g) {
  ConjClasses c;
  c.group = g;
  c.class_of.assign(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) {
    if (c.class_of[x] != -1) continue;
    int j = static_cast<int>(c.classes.size());
    std::set<int> members;
    for (int a = 0; a < g->order(); ++a) members.insert(g->conj(x, a));
    for (int m : members) c.class_of[m] = j;
    c.classes.emplace_back(members.begin(), members.end());
  }
  for (int j = 0; j < c.size(); ++j) c.inverse_class.push_back(c.class_of[g->inv(c.rep(j))]);
  return c;
}

// A class function with one cyclotomic value per conjugacy class, in the
// class order produced by conj_classes on its own group.
struct Character {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int j) const { return values[j]; }
  const Cyclotomic& at_elem(const ConjClasses& cls, int x) const {
    return values[cls.class_of[x]];
  }
  Integer degree() const {
    Rational d = values[0].rational_value();
    if (denominator(d) != 1) throw error("character degree is not an integer");
    return numerator(d);
  }
};

inline Character trivial_character(GroupPtr g) {
  ConjClasses cls = conj_classes(g);
  return Character{g, std::vector<Cyclotomic>(cls.size(), Cyclotomic(Rational(1)))};
}

inline Cyclotomic inner_product(const ConjClasses& cls, const Character& a, const Character& b) {
  Cyclotomic acc;
  for (int j = 0; j < cls.size(); ++j)
    acc = acc + Cyclotomic(Rational(cls.classes[j].size())) * a.values[j] *
                    b.values[cls.inverse_class[j]];
  return acc / Cyclotomic(Rational(cls.group->order()));
}

inline bool is_irreducible_character(const ConjClasses& cls, const Character& chi) {
  return inner_product(cls, chi, chi) == Cyclotomic(Rational(1));
}

inline std::vector<int> character_kernel(const ConjClasses& cls, const Character& chi) {
  std::vector<int> out;
  for (int x = 0; x < cls.group->order(); ++x)
    if (chi.at_elem(cls, x) == chi.values[0]) out.push_back(x);
  return out;
}

inline bool is_faithful_character(const ConjClasses& cls, const Character& chi) {
  return character_kernel(cls, chi).size() == 1;
}

inline FieldSpec character_field(const Character& chi, const FieldSpec& base) {
  return field_of_values(chi.values, base);
}

// ---------------------------------------------------------------------------
// the table itself

struct CharTable {
  GroupPtr group;
  ConjClasses cls;
  std::vector<Character> rows;  // sorted by degree, then value order
};

namespace detail {

inline long long powm(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long long invm(long long a, long long p) { return powm(((a % p) + p) % p, p - 2, p); }

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// nullspace over F_p of a rows x cols matrix, as a list of column vectors
inline std::vector<std::vector<long long>> nullspace_mod(std::vector<std::vector<long long>> m,
                                                         int rows, int cols, long long p) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    long long iv = invm(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      long long f = m[i][c] % p;
      for (int j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long long>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long long> v(cols, 0);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = (p - m[i][c] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

inline CharTable character_table(GroupPtr g) {
  const int n = g->order();
  ConjClasses cls = conj_classes(g);
  const int k = cls.size();
  const long long e = g->exponent();

  // smallest prime p = 1 mod e with p*p > 4n, so degrees and multiplicities
  // (all at most sqrt(n) resp. n) have unique representatives
  long long p = e + 1;
  while (!(detail::is_prime_ll(p) && p * p > 4LL * n)) p += e;

  // class multiplication constants, packed
  std::vector<int> cnt(static_cast<std::size_t>(k) * k * k, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = cls.class_of[x], j = cls.class_of[y], l = cls.class_of[g->mul(x, y)];
      ++cnt[(static_cast<std::size_t>(i) * k + j) * k + l];
    }
  auto structure_matrix = [&](int i) {
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        m[j][l] = cnt[(static_cast<std::size_t>(i) * k + j) * k + l] /
                  static_cast<long long>(cls.classes[l].size());
    return m;
  };

  // split F_p^k into the common eigenspaces of all structure matrices
  struct Subspace {
    std::vector<std::vector<long long>> basis;  // columns
    int next_matrix;
  };
  std::deque<Subspace> work;
  std::vector<std::vector<long long>> eigvecs;
  {
    std::vector<std::vector<long long>> full;
    for (int j = 0; j < k; ++j) {
      std::vector<long long> v(k, 0);
      v[j] = 1;
      full.push_back(std::move(v));
    }
    work.push_back(Subspace{std::move(full), 1});
  }
  while (!work.empty()) {
    Subspace s = std::move(work.front());
    work.pop_front();
    int d = static_cast<int>(s.basis.size());
    if (d == 1) {
      eigvecs.push_back(std::move(s.basis[0]));
      continue;
    }
    if (s.next_matrix >= k) throw error("class matrices failed to separate a subspace");
    auto m = structure_matrix(s.next_matrix);
    // columns of M*B
    std::vector<std::vector<long long>> mb(d, std::vector<long long>(k, 0));
    for (int c = 0; c < d; ++c)
      for (int row = 0; row < k; ++row) {
        long long acc = 0;
        for (int l = 0; l < k; ++l) acc = (acc + m[row][l] * s.basis[c][l]) % p;
        mb[c][row] = acc;
      }
    std::vector<Subspace> pieces;
    int found = 0;
    for (long long lam = 0; lam < p && found < d; ++lam) {
      std::vector<std::vector<long long>> sys(k, std::vector<long long>(d));
      for (int row = 0; row < k; ++row)
        for (int c = 0; c < d; ++c)
          sys[row][c] = ((mb[c][row] - lam * s.basis[c][row]) % p + p) % p;
      auto coeffs = detail::nullspace_mod(std::move(sys), k, d, p);
      if (coeffs.empty()) continue;
      Subspace piece;
      piece.next_matrix = s.next_matrix + 1;
      for (const auto& co : coeffs) {
        std::vector<long long> v(k, 0);
        for (int c = 0; c < d; ++c)
          for (int row = 0; row < k; ++row) v[row] = (v[row] + co[c] * s.basis[c][row]) % p;
        piece.basis.push_back(std::move(v));
      }
      found += static_cast<int>(piece.basis.size());
      pieces.push_back(std::move(piece));
    }
    if (found != d) throw error("a class matrix was not diagonalizable");
    if (pieces.size() == 1) {
      pieces[0].basis = std::move(s.basis);  // no split; keep the old basis
      pieces[0].next_matrix = s.next_matrix + 1;
    }
    for (auto& piece : pieces) work.push_back(std::move(piece));
  }
  if (static_cast<int>(eigvecs.size()) != k) throw error("wrong number of central characters");

  // deterministic root of unity of exact order e in F_p: candidates have
  // order dividing e, and exactness means no prime quotient kills them
  long long z = 1;
  if (e > 1) {
    z = 0;
    for (long long x = 2; x < p && z == 0; ++x) {
      long long cand = detail::powm(x, (p - 1) / e, p);
      bool exact = true;
      long long rest = e;
      for (long long q = 2; q * q <= rest && exact; ++q)
        if (rest % q == 0) {
          if (detail::powm(cand, e / q, p) == 1) exact = false;
          while (rest % q == 0) rest /= q;
        }
      if (exact && rest > 1 && detail::powm(cand, e / rest, p) == 1) exact = false;
      if (exact) z = cand;
    }
    if (z == 0) throw error("no root of unity of the right order mod p");
  }

  std::vector<Character> rows;
  for (auto& v : eigvecs) {
    if (v[0] % p == 0) throw error("central character vanishes at the identity class");
    long long norm = detail::invm(v[0], p);
    std::vector<long long> w(k);
    for (int j = 0; j < k; ++j) w[j] = v[j] * norm % p;
    // degree from the norm relation, unique below sqrt(n)
    long long s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + w[j] * w[cls.inverse_class[j]] % p *
                   detail::invm(cls.classes[j].size(), p)) %
          p;
    long long dsq = n % p * detail::invm(s, p) % p;
    long long deg = 0;
    for (long long d = 1; d * d <= n; ++d)
      if (d * d % p == dsq) {
        deg = d;
        break;
      }
    if (deg == 0) throw error("no admissible character degree");
    std::vector<long long> valp(k);
    for (int j = 0; j < k; ++j)
      valp[j] = deg % p * w[j] % p * detail::invm(cls.classes[j].size(), p) % p;

    std::vector<Cyclotomic> values(k);
    for (int j = 0; j < k; ++j) {
      int rep = cls.rep(j);
      long long m = g->element_order(rep);
      long long zm = detail::powm(z, e / m, p);
      Cyclotomic acc;
      long long minv = detail::invm(m, p);
      for (long long s2 = 0; s2 < m; ++s2) {
        long long mult = 0;
        int pw = 0;  // rep^l
        for (long long l = 0; l < m; ++l) {
          long long term = valp[cls.class_of[pw]] * detail::powm(zm, (m - s2 % m) * l % m, p) % p;
          mult = (mult + term) % p;
          pw = g->mul(pw, rep);
        }
        mult = mult * minv % p;
        if (mult >= p || mult < 0) throw error("multiplicity out of range");
        if (mult != 0)
          acc = acc + Cyclotomic(Rational(mult)) * Cyclotomic::root_of_unity(m, s2);
      }
      values[j] = acc;
    }
    rows.push_back(Character{g, std::move(values)});
  }

  // certify: exact orthogonality and the degree sum
  Integer degsum = 0;
  for (const auto& r : rows) degsum += r.degree() * r.degree();
  if (degsum != n) throw error("degrees do not account for the group order");
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      Cyclotomic ip = inner_product(cls, rows[a], rows[b]);
      if (ip != Cyclotomic(Rational(a == b ? 1 : 0))) throw error("orthogonality check failed");
    }

  std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    if (a.values[0] != b.values[0])
      return a.values[0].rational_value() < b.values[0].rational_value();
    for (std::size_t j = 0; j < a.values.size(); ++j)
      if (a.values[j] != b.values[j]) return canonical_less(a.values[j], b.values[j]);
    return false;
  });
  return CharTable{g, std::move(cls), std::move(rows)};
}

// ---------------------------------------------------------------------------
// moving characters around

inline Character restrict_character(const ConjClasses& big, const Character& chi,
                                    const SubgroupView& sub) {
  if (chi.group != big.group || sub.incl.dst != big.group)
    throw domain_error("restriction data does not line up");
  ConjClasses small = conj_classes(sub.group);
  std::vector<Cyclotomic> values(small.size());
  for (int j = 0; j < small.size(); ++j)
    values[j] = chi.at_elem(big, sub.incl(small.rep(j)));
  return Character{sub.group, std::move(values)};
}

inline Character induce_character(const ConjClasses& big, const SubgroupView& sub,
                                  const Character& theta) {
  if (theta.group != sub.group || sub.incl.dst != big.group)
    throw domain_error("induction data does not line up");
  const Group& g = *big.group;
  ConjClasses small = conj_classes(sub.group);
  std::vector<int> to_sub(g.order(), -1);
  for (int i = 0; i < sub.group->order(); ++i) to_sub[sub.incl(i)] = i;
  std::vector<Cyclotomic> values(big.size());
  for (int j = 0; j < big.size(); ++j) {
    int y = big.rep(j);
    Cyclotomic acc;
    for (int x = 0; x < g.order(); ++x) {
      int z = g.mul(g.mul(x, y), g.inv(x));  // x y x^{-1}
      if (to_sub[z] >= 0) acc = acc + theta.at_elem(small, to_sub[z]);
    }
    values[j] = acc / Cyclotomic(Rational(sub.group->order()));
  }
  return Character{big.group, std::move(values)};
}

// theta^t(x) = theta(t x t^{-1}); t must normalize the subgroup
inline Character conj_character(const SubgroupView& sub, const Character& theta, int t) {
  if (theta.group != sub.group) throw domain_error("conjugation data does not line up");
  const Group& g = *sub.incl.dst;
  std::vector<int> to_sub(g.order(), -1);
  for (int i = 0; i < sub.group->order(); ++i) to_sub[sub.incl(i)] = i;
  ConjClasses small = conj_classes(sub.group);
  std::vector<Cyclotomic> values(small.size());
  for (int j = 0; j < small.size(); ++j) {
    int y = sub.incl(small.rep(j));
    int z = g.mul(g.mul(t, y), g.inv(t));
    if (to_sub[z] < 0) throw domain_error("conjugating element does not normalize the subgroup");
    values[j] = theta.at_elem(small, to_sub[z]);
  }
  return Character{sub.group, std::move(values)};
}

inline Character galois_twist(const Character& chi, long t) {
  long cond = 1;
  for (const auto& v : chi.values) cond = std::lcm(cond, v.conductor());
  unit_reduce(t, cond);  // validates
  std::vector<Cyclotomic> values;
  for (const auto& v : chi.values) values.push_back(galois_power(v, t));
  return Character{chi.group, std::move(values)};
}

// outer tensor product along the projections of a direct product
inline Character product_character(const Product& p, const std::vector<Character>& factors) {
  if (factors.size() != p.proj.size()) throw domain_error("one character per factor required");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].group != p.proj[i].dst) throw domain_error("character group mismatch");
  ConjClasses big = conj_classes(p.group);
  std::vector<ConjClasses> fcls;
  for (const auto& h : p.proj) fcls.push_back(conj_classes(h.dst));
  std::vector<Cyclotomic> values(big.size());
  for (int j = 0; j < big.size(); ++j) {
    Cyclotomic acc{Rational(1)};
    for (std::size_t i = 0; i < factors.size(); ++i)
      acc = acc * factors[i].at_elem(fcls[i], p.proj[i](big.rep(j)));
    values[j] = acc;
  }
  return Character{p.group, std::move(values)};
}

}  // namespace cliffpair
