#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "cliffpair/cohomology.hpp"
#include "cliffpair/groupkit.hpp"

using namespace cliffpair;

namespace {

GroupPtr s3() { return Group::from_permutations(3, {"(1 2)", "(1 2 3)"}); }
GroupPtr a4() { return Group::from_permutations(4, {"(1 2 3)", "(1 2)(3 4)"}); }
GroupPtr d8() { return Group::from_permutations(4, {"(1 2 3 4)", "(1 3)"}); }
GroupPtr d10() { return Group::from_permutations(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}); }
GroupPtr v4() { return direct_product({Group::cyclic(2), Group::cyclic(2)}).group; }

GroupPtr q8() {
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
  return Group::from_cayley(t);
}

long factor_product(const H2Result& h) {
  long p = 1;
  for (long f : h.invariant_factors) p *= f;
  return p;
}

long factor_exponent(const H2Result& h) {
  return h.invariant_factors.empty() ? 1 : h.invariant_factors.back();
}

// Counts normalized 2-cocycles and 2-coboundaries the slow way: every
// candidate table is tested against f(x,y) + f(xy,z) = f(y,z) + f(x,yz)
// directly.  Only workable when m^((n-1)^2) stays small.
struct BruteCount {
  long cocycles = 0;
  long coboundaries = 0;
};

BruteCount brute_count(GroupPtr g, long m) {
  const int n = g->order();
  const int w = n - 1;
  const int cells = w * w;
  unsigned long long total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= static_cast<unsigned long long>(m);
    REQUIRE(total <= 2000000ULL);
  }
  std::vector<long> f(cells);
  auto look = [&](int x, int y) -> long {
    return (x == 0 || y == 0) ? 0 : f[(x - 1) * w + (y - 1)];
  };
  auto is_cocycle = [&]() {
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y)
        for (int z = 1; z < n; ++z) {
          int xy = g->mul(x, y), yz = g->mul(y, z);
          long lhs = look(x, y) + look(xy, z);
          long rhs = look(y, z) + look(x, yz);
          if ((lhs - rhs) % m != 0) return false;
        }
    return true;
  };

  BruteCount out;
  for (unsigned long long code = 0; code < total; ++code) {
    unsigned long long c = code;
    for (int i = 0; i < cells; ++i) {
      f[i] = static_cast<long>(c % m);
      c /= m;
    }
    if (is_cocycle()) ++out.cocycles;
  }

  std::set<std::vector<long>> images;
  unsigned long long utotal = 1;
  for (int i = 0; i < w; ++i) utotal *= static_cast<unsigned long long>(m);
  for (unsigned long long code = 0; code < utotal; ++code) {
    unsigned long long c = code;
    std::vector<long> u(w);
    for (int i = 0; i < w; ++i) {
      u[i] = static_cast<long>(c % m);
      c /= m;
    }
    std::vector<long> img(cells);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int xy = g->mul(x, y);
        long v = u[x - 1] + u[y - 1] - (xy == 0 ? 0 : u[xy - 1]);
        img[(x - 1) * w + (y - 1)] = ((v % m) + m) % m;
      }
    images.insert(img);
  }
  for (const auto& img : images) {
    f = img;
    REQUIRE(is_cocycle());
  }
  out.coboundaries = static_cast<long>(images.size());
  return out;
}

// Independent mod-p count: |H^2| = p^(dim ker d3 - rank d2), with both
// matrices rebuilt from the raw formulas and ranks from plain Gaussian
// elimination.
long rank_mod_p(std::vector<std::vector<long>> mat, long p) {
  if (mat.empty()) return 0;
  const std::size_t rows = mat.size(), cols = mat[0].size();
  for (auto& r : mat)
    for (auto& x : r) x = ((x % p) + p) % p;
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && mat[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(mat[piv], mat[row]);
    long inv = 1;
    for (long k = 1; k < p; ++k)
      if (k * mat[row][col] % p == 1) inv = k;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || mat[i][col] == 0) continue;
      long q = mat[i][col] * inv % p;
      for (std::size_t j = 0; j < cols; ++j)
        mat[i][j] = ((mat[i][j] - q * mat[row][j]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

long fp_h2_log(GroupPtr g, long p) {
  const int n = g->order();
  const int w = n - 1;
  std::vector<std::vector<long>> d2(w * w, std::vector<long>(w, 0));
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      auto& row = d2[(x - 1) * w + (y - 1)];
      row[x - 1] += 1;
      row[y - 1] += 1;
      int xy = g->mul(x, y);
      if (xy != 0) row[xy - 1] -= 1;
    }
  std::vector<std::vector<long>> d3(w * w * w, std::vector<long>(w * w, 0));
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        auto& row = d3[((x - 1) * w + (y - 1)) * w + (z - 1)];
        int xy = g->mul(x, y), yz = g->mul(y, z);
        row[(y - 1) * w + (z - 1)] += 1;
        if (xy != 0) row[(xy - 1) * w + (z - 1)] -= 1;
        if (yz != 0) row[(x - 1) * w + (yz - 1)] += 1;
        row[(x - 1) * w + (y - 1)] -= 1;
      }
  return (w * w - rank_mod_p(d3, p)) - rank_mod_p(d2, p);
}

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("boundary matrices compose to zero") {
  struct Row {
    GroupPtr g;
    long m;
  };
  std::vector<Row> rows = {{Group::cyclic(2), 2}, {Group::cyclic(4), 2}, {v4(), 2},
                           {s3(), 6},             {q8(), 8},             {Group::cyclic(6), 3}};
  for (const auto& r : rows) {
    const std::size_t w = static_cast<std::size_t>(r.g->order() - 1);
    auto [d2, d3] = boundary_matrices(r.g, r.m);
    CHECK(d2.rows == w * w);
    CHECK(d2.cols == w);
    CHECK(d3.rows == w * w * w);
    CHECK(d3.cols == w * w);
    for (const auto& e : d2.a) CHECK((e >= 0 && e < r.m));
    IntMatrix prod = detail::int_mat_mul(d3, d2);
    for (const auto& e : prod.a) CHECK(e % r.m == 0);
  }
}

TEST_CASE("cyclic groups have cyclic second cohomology") {
  struct Row {
    int n;
    long m;
    std::vector<long> want;
  };
  std::vector<Row> rows = {{2, 2, {2}}, {3, 2, {}},  {4, 2, {2}}, {5, 5, {5}},
                           {6, 2, {2}}, {6, 3, {3}}, {6, 4, {2}}, {4, 4, {4}},
                           {6, 6, {6}}, {8, 6, {2}}, {5, 2, {}},  {7, 1, {}}};
  for (const auto& r : rows) {
    H2Result h = h2_cyclic(Group::cyclic(r.n), r.m);
    INFO("n=" << r.n << " m=" << r.m);
    CHECK(h.coefficient_modulus == r.m);
    CHECK(h.invariant_factors == r.want);
  }
}

TEST_CASE("Klein four group cohomology mod two") {
  H2Result h = h2_cyclic(v4(), 2);
  CHECK(h.invariant_factors == std::vector<long>{2, 2, 2});
  CHECK(h2_cyclic(v4(), 3).invariant_factors.empty());
}

TEST_CASE("enumeration agrees with the Smith reduction") {
  struct Row {
    GroupPtr g;
    long m;
  };
  std::vector<Row> rows = {{Group::cyclic(2), 2}, {Group::cyclic(2), 3}, {Group::cyclic(3), 2},
                           {Group::cyclic(3), 3}, {Group::cyclic(4), 2}, {Group::cyclic(4), 3},
                           {Group::cyclic(4), 4}, {v4(), 2},             {v4(), 3},
                           {v4(), 4}};
  for (const auto& r : rows) {
    BruteCount bc = brute_count(r.g, r.m);
    INFO("order " << r.g->order() << " mod " << r.m);
    REQUIRE(bc.cocycles % bc.coboundaries == 0);
    CHECK(bc.cocycles / bc.coboundaries == factor_product(h2_cyclic(r.g, r.m)));
  }
}

TEST_CASE("mod-p ranks agree with the Smith reduction") {
  std::vector<GroupPtr> gs = {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
                              v4(),             Group::cyclic(5), Group::cyclic(6),
                              s3()};
  for (const auto& g : gs)
    for (long p : {2L, 3L}) {
      H2Result h = h2_cyclic(g, p);
      INFO("order " << g->order() << " mod " << p);
      CHECK(factor_product(h) == ipow(p, fp_h2_log(g, p)));
      for (long f : h.invariant_factors) CHECK(f == p);
    }
}

TEST_CASE("cohomology exponent divides both orders") {
  struct Row {
    GroupPtr g;
    long m;
  };
  std::vector<Row> rows = {{Group::cyclic(6), 4}, {v4(), 2},  {v4(), 4}, {s3(), 2},
                           {s3(), 3},             {s3(), 6},  {q8(), 2}, {q8(), 4},
                           {d8(), 2},             {d10(), 5}, {a4(), 2}, {a4(), 3}};
  for (const auto& r : rows) {
    H2Result h = h2_cyclic(r.g, r.m);
    long e = factor_exponent(h);
    INFO("order " << r.g->order() << " mod " << r.m);
    CHECK(std::gcd(static_cast<long>(r.g->order()), r.m) % e == 0);
    long prev = 1;
    for (long f : h.invariant_factors) {
      CHECK(f % prev == 0);
      prev = f;
    }
  }
}

TEST_CASE("symmetric group cohomology mod two and three") {
  CHECK(h2_cyclic(s3(), 2).invariant_factors == std::vector<long>{2});
  CHECK(h2_cyclic(s3(), 3).invariant_factors.empty());
}

TEST_CASE("multipliers of the familiar small groups") {
  CHECK(schur_multiplier(s3()).invariant_factors.empty());
  CHECK(schur_multiplier(v4()).invariant_factors == std::vector<long>{2});
  CHECK(schur_multiplier(q8()).invariant_factors.empty());
  CHECK(schur_multiplier(d8()).invariant_factors == std::vector<long>{2});
  CHECK(schur_multiplier(d10()).invariant_factors.empty());
  CHECK(schur_multiplier(Group::cyclic(4)).invariant_factors.empty());
  CHECK(schur_multiplier(Group::cyclic(6)).invariant_factors.empty());
  CHECK(schur_multiplier(Group::trivial()).invariant_factors.empty());
  H2Result v = schur_multiplier(v4());
  CHECK(v.coefficient_modulus == 4);
}

TEST_CASE("alternating group multiplier") {
  H2Result h = schur_multiplier(a4());
  CHECK(h.coefficient_modulus == 12);
  CHECK(h.invariant_factors == std::vector<long>{2});
}

TEST_CASE("cohomology size limits") {
  CHECK_THROWS_AS(boundary_matrices(Group::cyclic(25), 2), domain_error);
  CHECK_THROWS_AS(h2_cyclic(Group::cyclic(30), 2), domain_error);
  CHECK_THROWS_AS(h2_cyclic(Group::cyclic(4), 0), domain_error);
  CHECK_THROWS_AS(h2_cyclic(Group::cyclic(4), -3), domain_error);
  CHECK(h2_cyclic(Group::cyclic(24), 1).invariant_factors.empty());
}
