#pragma once

// Second cohomology with trivial action.  Cochains are normalized (they
// vanish whenever an argument is the identity) and boundaries are integer
// matrices.  H^2(G, Z/m) is the mod-m kernel of d3 modulo the d2 image:
// the kernel is diagonalized by unimodular column operations, which stay
// bounded because every constraint row and every quotient generator only
// matters mod m.  The multiplier H^2(G, C*) is the m = |G| case divided
// by the Bockstein image of Hom(G, Z/m).

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cliffpair/groupkit.hpp"
#include "cliffpair/rational.hpp"

namespace cliffpair {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct H2Result {
  long coefficient_modulus = 1;
  std::vector<long> invariant_factors;  // each dividing the next
  std::vector<std::vector<long>> generators;  // unused; kept for callers that want witnesses
};

namespace detail {

inline IntMatrix int_mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw domain_error("matrix shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

// the mod-m solution set only sees the distinct nonzero rows
inline std::vector<std::vector<long>> unique_rows(const IntMatrix& a, long m) {
  std::set<std::vector<long>> seen;
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::vector<long> row(a.cols);
    bool zero = true;
    for (std::size_t j = 0; j < a.cols; ++j) {
      row[j] = ((a.at(i, j).convert_to<long>() % m) + m) % m;
      if (row[j] != 0) zero = false;
    }
    if (!zero) seen.insert(std::move(row));
  }
  return {seen.begin(), seen.end()};
}

// Diagonalizes the constraint system a.x = 0 (mod m) by row operations
// (free: rows are relations mod m) and tracked unimodular column
// operations x = V y.  Afterwards the system reads d[t] * y[t] = 0.
// V and its inverse are kept mod m^2, which is all later stages need.
struct KernelDiag {
  std::vector<long> d;
  std::vector<std::vector<long>> v, vinv;  // entries mod m^2
};

inline KernelDiag kernel_diagonal(std::vector<std::vector<long>> a, std::size_t dim,
                                  long m) {
  const long mm = m * m;
  KernelDiag out;
  out.d.assign(dim, 0);
  out.v.assign(dim, std::vector<long>(dim, 0));
  out.vinv.assign(dim, std::vector<long>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) out.v[i][i] = out.vinv[i][i] = 1 % mm;
  const std::size_t rows = a.size();

  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : out.v) std::swap(row[i], row[j]);
    std::swap(out.vinv[i], out.vinv[j]);
  };
  auto col_addmul = [&](std::size_t j, long q, std::size_t i) {
    // C_j += q * C_i
    for (auto& row : a) row[j] = ((row[j] + q * row[i]) % m + m) % m;
    for (auto& row : out.v) row[j] = ((row[j] + q * row[i]) % mm + mm) % mm;
    for (std::size_t c = 0; c < dim; ++c)
      out.vinv[i][c] = ((out.vinv[i][c] - q * out.vinv[j][c]) % mm + mm) % mm;
  };

  const std::size_t steps = std::min(rows, dim);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = rows, pc = dim;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < dim; ++j)
        if (a[i][j] != 0 && (pr == rows || a[i][j] < a[pr][pc])) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    if (pr != t) std::swap(a[pr], a[t]);
    if (pc != t) col_swap(pc, t);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i)
        while (a[i][t] != 0) {
          long q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < dim; ++j)
            a[i][j] = ((a[i][j] - q * a[t][j]) % m + m) % m;
          if (a[i][t] != 0) std::swap(a[i], a[t]);  // remainder becomes the pivot
        }
      for (std::size_t j = t + 1; j < dim; ++j)
        while (a[t][j] != 0) {
          long q = a[t][j] / a[t][t];
          col_addmul(j, -q, t);
          if (a[t][j] != 0) col_swap(j, t);
        }
      bool col_clear = true;
      for (std::size_t i = t + 1; i < rows && col_clear; ++i)
        if (a[i][t] != 0) col_clear = false;
      if (col_clear) break;  // column swaps above can refill column t
    }
    out.d[t] = a[t][t];
  }
  return out;
}

// Invariant factors of Z^dim / (column span of gens + m Z^dim).  The
// implicit m Z^dim keeps every entry reducible mod m; the chain condition
// is restored afterwards prime by prime.
inline std::vector<long> cyclic_quotient_factors(std::vector<std::vector<long>> gens,
                                                 std::size_t dim, long m) {
  // rows of `work` are the quotient coordinates
  std::vector<std::vector<long>> work(dim, std::vector<long>(gens.size(), 0));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) work[i][j] = ((gens[j][i] % m) + m) % m;

  std::vector<long> d(dim, 0);
  const std::size_t cols = gens.size();
  const std::size_t steps = std::min(dim, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = dim, pc = cols;
    for (std::size_t i = t; i < dim; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (work[i][j] != 0 && (pr == dim || work[i][j] < work[pr][pc])) {
          pr = i;
          pc = j;
        }
    if (pr == dim) break;
    if (pr != t) std::swap(work[pr], work[t]);
    if (pc != t)
      for (auto& row : work) std::swap(row[pc], row[t]);

    for (;;) {
      for (std::size_t i = t + 1; i < dim; ++i)
        while (work[i][t] != 0) {
          long q = work[i][t] / work[t][t];
          for (std::size_t j = t; j < cols; ++j)
            work[i][j] = ((work[i][j] - q * work[t][j]) % m + m) % m;
          if (work[i][t] != 0) std::swap(work[i], work[t]);
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        while (work[t][j] != 0) {
          long q = work[t][j] / work[t][t];
          for (std::size_t i = t; i < dim; ++i)
            work[i][j] = ((work[i][j] - q * work[i][t]) % m + m) % m;
          if (work[t][j] != 0)
            for (auto& row : work) std::swap(row[j], row[t]);
        }
      bool col_clear = true;
      for (std::size_t i = t + 1; i < dim && col_clear; ++i)
        if (work[i][t] != 0) col_clear = false;
      if (col_clear) break;
    }
    d[t] = work[t][t];
  }

  std::map<long, std::vector<int>> primes;  // prime -> exponents of each cyclic piece
  std::size_t pieces = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    long f = std::gcd(d[i], m);
    if (f == 1) continue;
    ++pieces;
    for (long p = 2; p <= f; ++p)
      if (f % p == 0) {
        int e = 0;
        while (f % p == 0) {
          f /= p;
          ++e;
        }
        primes[p].push_back(e);
      }
  }
  for (auto& [p, es] : primes) std::sort(es.begin(), es.end(), std::greater<>());
  std::vector<long> chain;
  for (std::size_t k = 0; k < pieces; ++k) {
    long f = 1;
    for (const auto& [p, es] : primes)
      if (k < es.size())
        for (int e = 0; e < es[k]; ++e) f *= p;
    if (f > 1) chain.push_back(f);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// mod-m cocycle lattice of d3 in diagonal coordinates
struct CocycleFrame {
  std::size_t dim;
  long m;
  KernelDiag kd;
  std::vector<long> e;  // lattice index per coordinate, e[i] | m
};

inline CocycleFrame cocycle_frame(const IntMatrix& d3, long m) {
  const std::size_t dim = d3.cols;
  CocycleFrame fr{dim, m, kernel_diagonal(unique_rows(d3, m), dim, m), {}};
  fr.e.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) fr.e[i] = m / std::gcd(fr.kd.d[i], m);
  return fr;
}

// invariant factors of (cocycle lattice)/(span of the given columns + mZ)
inline std::vector<long> quotient_factors(const CocycleFrame& fr,
                                          const std::vector<std::vector<long>>& cols) {
  const long m = fr.m, mm = m * m;
  std::vector<std::vector<long>> gens;
  for (const auto& col : cols) {
    std::vector<long> y(fr.dim);
    for (std::size_t i = 0; i < fr.dim; ++i) {
      long acc = 0;
      for (std::size_t k = 0; k < fr.dim; ++k)
        acc = (acc + fr.kd.vinv[i][k] * col[k]) % mm;
      // acc is V^{-1} col mod m^2; e[i] | m makes the division well defined mod m
      if (acc % fr.e[i] != 0) throw error("relation column left the cocycle lattice");
      y[i] = (acc / fr.e[i]) % m;
    }
    gens.push_back(std::move(y));
  }
  // image of m Z^dim under the same change of coordinates
  for (std::size_t i = 0; i < fr.dim; ++i) {
    long v = m / fr.e[i];
    if (v % m == 0) continue;
    std::vector<long> y(fr.dim, 0);
    y[i] = v;
    gens.push_back(std::move(y));
  }
  return cyclic_quotient_factors(std::move(gens), fr.dim, m);
}

}  // namespace detail

constexpr int kCohomologyCap = 24;

// Coboundary matrices on normalized cochains, entries reduced into [0, m).
// Nontrivial elements index the degree-1 basis; pairs and triples of them
// the higher ones.
inline std::pair<IntMatrix, IntMatrix> boundary_matrices(GroupPtr g, long m) {
  const int n = g->order();
  if (n > kCohomologyCap) throw domain_error("group too large for the bar resolution");
  if (m < 1) throw domain_error("modulus must be positive");
  const std::size_t w = static_cast<std::size_t>(n - 1);
  auto red = [&](long x) { return ((x % m) + m) % m; };

  IntMatrix d2(w * w, w);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      std::vector<long> row(w, 0);
      row[y - 1] += 1;
      row[x - 1] += 1;
      int xy = g->mul(x, y);
      if (xy != 0) row[xy - 1] -= 1;
      for (std::size_t c = 0; c < w; ++c)
        d2.at((x - 1) * w + (y - 1), c) = red(row[c]);
    }

  IntMatrix d3(w * w * w, w * w);
  auto pair_idx = [&](int x, int y) { return static_cast<std::size_t>(x - 1) * w + (y - 1); };
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        std::vector<long> row(w * w, 0);
        row[pair_idx(y, z)] += 1;
        int xy = g->mul(x, y);
        if (xy != 0) row[pair_idx(xy, z)] -= 1;
        int yz = g->mul(y, z);
        if (yz != 0) row[pair_idx(x, yz)] += 1;
        row[pair_idx(x, y)] -= 1;
        std::size_t r = (pair_idx(x, y)) * w + (z - 1);
        for (std::size_t c = 0; c < w * w; ++c) d3.at(r, c) = red(row[c]);
      }
  return {std::move(d2), std::move(d3)};
}

inline H2Result h2_cyclic(GroupPtr g, long m) {
  auto [d2, d3] = boundary_matrices(g, m);
  auto fr = detail::cocycle_frame(d3, m);
  std::vector<std::vector<long>> cols(d2.cols, std::vector<long>(d2.rows));
  for (std::size_t j = 0; j < d2.cols; ++j)
    for (std::size_t i = 0; i < d2.rows; ++i)
      cols[j][i] = d2.at(i, j).convert_to<long>();
  return H2Result{m, detail::quotient_factors(fr, cols), {}};
}

// H^2(G, C*): the coefficient sequence 1 -> mu_m -> C* -> C* -> 1 with
// m = |G| identifies it with H^2(G, Z/m) modulo the connecting images of
// Hom(G, Z/m); each hom phi contributes the carry cocycle
// (phi(x) + phi(y) - phi(xy)) / m.
inline H2Result schur_multiplier(GroupPtr g) {
  const int n = g->order();
  const long m = n;
  if (n == 1) return H2Result{1, {}, {}};
  auto [d2, d3] = boundary_matrices(g, m);
  auto fr = detail::cocycle_frame(d3, m);
  const std::size_t w = static_cast<std::size_t>(n - 1);

  // Hom(G, Z/m) as the mod-m kernel of the multiplication relations
  IntMatrix rel(static_cast<std::size_t>(n - 1) * (n - 1), w);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      std::vector<long> row(w, 0);
      row[x - 1] += 1;
      row[y - 1] += 1;
      int xy = g->mul(x, y);
      if (xy != 0) row[xy - 1] -= 1;
      for (std::size_t c = 0; c < w; ++c)
        rel.at(static_cast<std::size_t>(x - 1) * (n - 1) + (y - 1), c) =
            ((row[c] % m) + m) % m;
    }
  auto hkd = detail::kernel_diagonal(detail::unique_rows(rel, m), w, m);

  std::vector<std::vector<long>> homs;
  for (std::size_t j = 0; j < w; ++j) {
    long ej = m / std::gcd(hkd.d[j], m);
    if (ej == m) continue;  // the zero hom
    std::vector<long> phi(w);
    for (std::size_t i = 0; i < w; ++i) phi[i] = hkd.v[i][j] * ej % m;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        long px = x == 0 ? 0 : phi[x - 1];
        long py = y == 0 ? 0 : phi[y - 1];
        int xy = g->mul(x, y);
        long pxy = xy == 0 ? 0 : phi[xy - 1];
        if ((px + py - pxy) % m != 0) throw error("hom basis vector is not a hom");
      }
    homs.push_back(std::move(phi));
  }

  std::vector<std::vector<long>> cols(d2.cols, std::vector<long>(w * w));
  for (std::size_t j = 0; j < d2.cols; ++j)
    for (std::size_t i = 0; i < d2.rows; ++i)
      cols[j][i] = d2.at(i, j).convert_to<long>();
  for (const auto& phi : homs) {
    std::vector<long> b(w * w);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int xy = g->mul(x, y);
        long carry = (phi[x - 1] + phi[y - 1] - (xy == 0 ? 0 : phi[xy - 1])) / m;
        b[static_cast<std::size_t>(x - 1) * w + (y - 1)] = ((carry % m) + m) % m;
      }
    cols.push_back(std::move(b));
  }
  return H2Result{m, detail::quotient_factors(fr, cols), {}};
}

}  // namespace cliffpair
