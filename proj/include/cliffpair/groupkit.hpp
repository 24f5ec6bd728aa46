#pragma once

// Finite groups at desk scale.  Every group is a validated Cayley table with
// the identity at index 0; groups are immutable and identified by object
// identity, so homomorphisms can insist that "same codomain" means the same
// object.  The order cap keeps full-table validation (associativity
// included) affordable.
//
// Wreath-product elements are never materialized as a full group: only the
// subgroups actually reached (an embedded image, or a pullback fiber) are
// turned into Cayley tables.

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cliffpair/rational.hpp"

namespace cliffpair {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  static constexpr int kOrderCap = 200;

  static GroupPtr from_cayley(const std::vector<std::vector<int>>& table,
                              std::vector<std::string> labels = {});
  static GroupPtr from_permutations(int degree, const std::vector<std::string>& generators);
  static GroupPtr cyclic(int n);
  static GroupPtr trivial() { return cyclic(1); }

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int id() const { return 0; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // x^g
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  long exponent() const {
    long e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm<long>(e, element_order(a));
    return e;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_cyclic() const {
    for (int a = 0; a < order(); ++a)
      if (element_order(a) == order()) return true;
    return false;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;

  Group() = default;
};

// ---------------------------------------------------------------------------
// permutation plumbing

namespace detail {

inline std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle string: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point in cycle string: " + text);
      int p = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        p = p * 10 + (text[i++] - '0');
      if (p < 1 || p > degree) throw parse_error("point out of range in cycle string: " + text);
      cycle.push_back(p - 1);
      skip_ws();
    }
    if (i == text.size()) throw parse_error("unterminated cycle in: " + text);
    ++i;  // ')'
    std::set<int> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) throw parse_error("repeated point in cycle: " + text);
    if (cycle.size() > 1) {
      std::vector<int> c(degree);
      std::iota(c.begin(), c.end(), 0);
      for (std::size_t k = 0; k < cycle.size(); ++k)
        c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      for (auto& v : perm) v = c[v];  // apply previously parsed cycles first
    }
    skip_ws();
  }
  return perm;
}

inline std::string cycles_string(const std::vector<int>& perm) {
  std::ostringstream os;
  std::vector<bool> done(perm.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    do {
      done[x] = true;
      os << (first ? "" : " ") << x + 1;
      first = false;
      x = perm[x];
    } while (x != start);
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace detail

inline GroupPtr Group::from_cayley(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw domain_error("empty multiplication table");
  if (n > kOrderCap) throw domain_error("group order exceeds the cap of 200");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw domain_error("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw domain_error("table entry out of range");
  }
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[cand][x] == x && table[x][cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw domain_error("multiplication table has no identity");

  std::vector<std::vector<int>> t = table;
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw domain_error("label count does not match order");
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (e != 0) {
    // relabel by the transposition (0 e) so the identity sits at index 0
    auto tr = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t2[tr(a)][tr(b)] = tr(t[a][b]);
    t = std::move(t2);
    std::swap(labels[0], labels[e]);
  }

  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[t[a][b]] || col[t[b][a]]) throw domain_error("multiplication table is not a Latin square");
      row[t[a][b]] = col[t[b][a]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw domain_error("multiplication table is not associative");

  auto g = std::shared_ptr<Group>(new Group());
  g->table_ = std::move(t);
  g->labels_ = std::move(labels);
  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->table_[a][b] == 0) g->inv_[a] = b;
  return g;
}

inline GroupPtr Group::from_permutations(int degree, const std::vector<std::string>& generators) {
  if (degree < 1) throw domain_error("degree must be positive");
  std::vector<std::vector<int>> gens;
  for (const auto& s : generators) gens.push_back(detail::parse_cycles(s, degree));
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::deque<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    auto x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      std::vector<int> y(degree);
      for (int p = 0; p < degree; ++p) y[p] = g[x[p]];
      if (elems.insert(y).second) {
        if (static_cast<int>(elems.size()) > kOrderCap)
          throw domain_error("generated permutation group exceeds the cap of 200");
        frontier.push_back(y);
      }
    }
  }
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    index[sorted[i]] = static_cast<int>(i);
    labels.push_back(detail::cycles_string(sorted[i]));
  }
  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> y(degree);
      for (int p = 0; p < degree; ++p) y[p] = sorted[b][sorted[a][p]];
      table[a][b] = index.at(y);
    }
  return from_cayley(table, std::move(labels));
}

inline GroupPtr Group::cyclic(int n) {
  if (n < 1) throw domain_error("order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return from_cayley(table);
}

// ---------------------------------------------------------------------------
// homomorphisms

struct Hom {
  GroupPtr src, dst;
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
};

inline Hom make_hom(GroupPtr src, GroupPtr dst, std::vector<int> images) {
  if (static_cast<int>(images.size()) != src->order())
    throw domain_error("image list does not match the source order");
  for (int v : images)
    if (v < 0 || v >= dst->order()) throw domain_error("image out of range");
  for (int a = 0; a < src->order(); ++a)
    for (int b = 0; b < src->order(); ++b)
      if (images[src->mul(a, b)] != dst->mul(images[a], images[b]))
        throw domain_error("images are not multiplicative");
  return Hom{std::move(src), std::move(dst), std::move(images)};
}

inline Hom identity_hom(GroupPtr g) {
  std::vector<int> im(g->order());
  std::iota(im.begin(), im.end(), 0);
  return Hom{g, g, std::move(im)};
}

// apply f, then g
inline Hom compose_hom(const Hom& f, const Hom& g) {
  if (f.dst != g.src) throw domain_error("homomorphisms do not compose");
  std::vector<int> im(f.src->order());
  for (int x = 0; x < f.src->order(); ++x) im[x] = g(f(x));
  return Hom{f.src, g.dst, std::move(im)};
}

inline std::vector<int> kernel_of(const Hom& f) {
  std::vector<int> out;
  for (int x = 0; x < f.src->order(); ++x)
    if (f(x) == 0) out.push_back(x);
  return out;
}

inline std::vector<int> image_of(const Hom& f) {
  std::set<int> s(f.images.begin(), f.images.end());
  return {s.begin(), s.end()};
}

inline bool is_surjective(const Hom& f) {
  return static_cast<int>(image_of(f).size()) == f.dst->order();
}

inline bool is_injective(const Hom& f) {
  return static_cast<int>(image_of(f).size()) == f.src->order();
}

// ---------------------------------------------------------------------------
// subgroups

inline std::vector<int> closure(const Group& g, std::vector<int> seed) {
  std::set<int> s{0};
  std::deque<int> frontier{0};
  seed.push_back(0);
  for (int x : seed)
    if (s.insert(x).second) frontier.push_back(x);
  // right-multiplying by the seed reaches every word in it, and finite
  // order makes inverses words too
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (int y : seed) {
      int z = g.mul(x, y);
      if (s.insert(z).second) frontier.push_back(z);
    }
  }
  return {s.begin(), s.end()};
}

inline bool is_subgroup(const Group& g, const std::vector<int>& h) {
  if (h.empty() || h[0] != 0) return false;
  for (int a : h)
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  return true;
}

inline bool is_normal(const Group& g, const std::vector<int>& h) {
  for (int x : h)
    for (int a = 0; a < g.order(); ++a)
      if (!std::binary_search(h.begin(), h.end(), g.conj(x, a))) return false;
  return true;
}

inline std::vector<int> center_of(const Group& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

inline std::vector<int> conjugate_subgroup(const Group& g, const std::vector<int>& h, int x) {
  std::set<int> s;
  for (int a : h) s.insert(g.conj(a, x));
  return {s.begin(), s.end()};
}

inline std::vector<int> core_of(const Group& g, const std::vector<int>& h) {
  std::set<int> s(h.begin(), h.end());
  for (int x = 0; x < g.order(); ++x) {
    auto c = conjugate_subgroup(g, h, x);
    std::set<int> keep;
    for (int a : c)
      if (s.count(a)) keep.insert(a);
    s = std::move(keep);
  }
  return {s.begin(), s.end()};
}

// Materialize a subgroup as its own group, with the inclusion map.
struct SubgroupView {
  GroupPtr group;
  Hom incl;
};

inline SubgroupView subgroup_group(GroupPtr g, const std::vector<int>& h) {
  if (!is_subgroup(*g, h)) throw domain_error("element list is not a subgroup");
  std::map<int, int> idx;
  for (std::size_t i = 0; i < h.size(); ++i) idx[h[i]] = static_cast<int>(i);
  const int n = static_cast<int>(h.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = g->labels()[h[a]];
    for (int b = 0; b < n; ++b) table[a][b] = idx.at(g->mul(h[a], h[b]));
  }
  auto sub = Group::from_cayley(table, labels);
  return SubgroupView{sub, Hom{sub, g, h}};
}

// ---------------------------------------------------------------------------
// quotients, pullbacks, products, semidirect products

struct Quotient {
  GroupPtr group;
  Hom proj;
};

inline Quotient quotient(GroupPtr g, const std::vector<int>& n) {
  if (!is_subgroup(*g, n)) throw domain_error("kernel candidate is not a subgroup");
  if (!is_normal(*g, n)) throw domain_error("kernel candidate is not normal");
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n) coset_of[g->mul(h, x)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = g->labels()[reps[a]] + "N";
    for (int b = 0; b < k; ++b) table[a][b] = coset_of[g->mul(reps[a], reps[b])];
  }
  auto q = Group::from_cayley(table, labels);
  return Quotient{q, make_hom(g, q, coset_of)};
}

struct Pullback {
  GroupPtr group;
  Hom proj1, proj2;  // onto the two legs
  Hom to_base;       // composite with either leg
};

inline Pullback pullback(const Hom& k1, const Hom& k2) {
  if (k1.dst != k2.dst) throw domain_error("pullback legs must share a codomain object");
  std::vector<std::pair<int, int>> elems;
  for (int a = 0; a < k1.src->order(); ++a)
    for (int b = 0; b < k2.src->order(); ++b)
      if (k1(a) == k2(b)) elems.emplace_back(a, b);
  if (static_cast<int>(elems.size()) > Group::kOrderCap)
    throw domain_error("pullback exceeds the order cap of 200");
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  std::vector<int> im1(n), im2(n);
  for (int i = 0; i < n; ++i) {
    auto [a, b] = elems[i];
    im1[i] = a;
    im2[i] = b;
    labels[i] = "(" + k1.src->labels()[a] + "," + k2.src->labels()[b] + ")";
    for (int j = 0; j < n; ++j) {
      auto [c, d] = elems[j];
      table[i][j] = idx.at({k1.src->mul(a, c), k2.src->mul(b, d)});
    }
  }
  auto g = Group::from_cayley(table, labels);
  Hom p1 = make_hom(g, k1.src, im1);
  Hom p2 = make_hom(g, k2.src, im2);
  return Pullback{g, p1, p2, compose_hom(p1, k1)};
}

struct Product {
  GroupPtr group;
  std::vector<Hom> embed;  // factor -> product
  std::vector<Hom> proj;   // product -> factor
};

inline Product direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw domain_error("empty product");
  long total = 1;
  for (const auto& f : factors) {
    total *= f->order();
    if (total > Group::kOrderCap) throw domain_error("direct product exceeds the order cap of 200");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());
  auto decode = [&](int x) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = x % factors[i]->order();
      x /= factors[i]->order();
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int x = 0;
    for (int i = 0; i < k; ++i) x = x * factors[i]->order() + t[i];
    return x;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    auto ta = decode(a);
    for (int b = 0; b < n; ++b) {
      auto tb = decode(b);
      std::vector<int> tc(k);
      for (int i = 0; i < k; ++i) tc[i] = factors[i]->mul(ta[i], tb[i]);
      table[a][b] = encode(tc);
    }
  }
  auto g = Group::from_cayley(table);
  Product out{g, {}, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<int> em(factors[i]->order()), pr(n);
    for (int x = 0; x < factors[i]->order(); ++x) {
      std::vector<int> t(k, 0);
      t[i] = x;
      em[x] = encode(t);
    }
    for (int x = 0; x < n; ++x) pr[x] = decode(x)[i];
    out.embed.push_back(make_hom(factors[i], g, em));
    out.proj.push_back(make_hom(g, factors[i], pr));
  }
  return out;
}

struct Semidirect {
  GroupPtr group;
  Hom in_acting;  // U -> U x| C
  Hom in_normal;  // C -> U x| C
};

// U acting on C on the right: elements (u, c), product
// (u1, c1)(u2, c2) = (u1 u2, c1^{u2} c2) with c^{u} = action[u][c].
inline Semidirect semidirect(GroupPtr u, GroupPtr c,
                             const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != u->order())
    throw domain_error("one action permutation required per acting element");
  for (int a = 0; a < u->order(); ++a) {
    const auto& p = action[a];
    if (static_cast<int>(p.size()) != c->order()) throw domain_error("action permutation size mismatch");
    std::vector<bool> hit(c->order(), false);
    for (int x : p) {
      if (x < 0 || x >= c->order() || hit[x]) throw domain_error("action entry is not a permutation");
      hit[x] = true;
    }
    for (int x = 0; x < c->order(); ++x)
      for (int y = 0; y < c->order(); ++y)
        if (p[c->mul(x, y)] != c->mul(p[x], p[y]))
          throw domain_error("action entry is not an automorphism");
  }
  for (int a = 0; a < u->order(); ++a)
    for (int b = 0; b < u->order(); ++b)
      for (int x = 0; x < c->order(); ++x)
        if (action[u->mul(a, b)][x] != action[b][action[a][x]])
          throw domain_error("action is not a homomorphism into the automorphisms");
  long total = static_cast<long>(u->order()) * c->order();
  if (total > Group::kOrderCap) throw domain_error("semidirect product exceeds the order cap of 200");
  const int n = static_cast<int>(total);
  auto encode = [&](int a, int x) { return a * c->order() + x; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < u->order(); ++a)
    for (int x = 0; x < c->order(); ++x) {
      labels[encode(a, x)] = "(" + u->labels()[a] + ";" + c->labels()[x] + ")";
      for (int b = 0; b < u->order(); ++b)
        for (int y = 0; y < c->order(); ++y)
          table[encode(a, x)][encode(b, y)] =
              encode(u->mul(a, b), c->mul(action[b][x], y));
    }
  auto g = Group::from_cayley(table, labels);
  std::vector<int> em_u(u->order()), em_c(c->order());
  for (int a = 0; a < u->order(); ++a) em_u[a] = encode(a, 0);
  for (int x = 0; x < c->order(); ++x) em_c[x] = encode(0, x);
  return Semidirect{g, make_hom(u, g, em_u), make_hom(c, g, em_c)};
}

// ---------------------------------------------------------------------------
// transversals and wreath images

// Right-coset transversal of H in G.  reps[0] is the identity; the action
// t |-> t*g permutes rep indices, and reps[t]*g = cof[t][g] * reps[act[t][g]]
// with every cofactor inside H.
struct Transversal {
  GroupPtr group;
  std::vector<int> subgroup;
  std::vector<int> reps;
  std::vector<std::vector<int>> act;
  std::vector<std::vector<int>> cof;
};

inline Transversal coset_transversal(GroupPtr g, const std::vector<int>& h) {
  if (!is_subgroup(*g, h)) throw domain_error("transversal base is not a subgroup");
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : h) coset_of[g->mul(a, x)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> act(k, std::vector<int>(g->order()));
  std::vector<std::vector<int>> cof(k, std::vector<int>(g->order()));
  for (int t = 0; t < k; ++t)
    for (int x = 0; x < g->order(); ++x) {
      int tg = g->mul(reps[t], x);
      act[t][x] = coset_of[tg];
      cof[t][x] = g->mul(tg, g->inv(reps[act[t][x]]));
      if (!std::binary_search(h.begin(), h.end(), cof[t][x]))
        throw error("transversal cofactor escaped the subgroup");
    }
  return Transversal{g, h, reps, act, cof};
}

// An element of (component group) wr Sym(T), with the permutation acting on
// slot indices and composition read left to right.
struct WreathElem {
  std::vector<int> perm;
  std::vector<int> comps;

  auto operator<=>(const WreathElem&) const = default;
};

inline WreathElem wreath_identity(int slots) {
  WreathElem w;
  w.perm.resize(slots);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.comps.assign(slots, 0);
  return w;
}

inline WreathElem wreath_mul(const Group& comp, const WreathElem& a, const WreathElem& b) {
  const int k = static_cast<int>(a.perm.size());
  std::vector<int> binv(k);
  for (int t = 0; t < k; ++t) binv[b.perm[t]] = t;
  WreathElem c;
  c.perm.resize(k);
  c.comps.resize(k);
  for (int t = 0; t < k; ++t) {
    c.perm[t] = b.perm[a.perm[t]];
    c.comps[t] = comp.mul(a.comps[binv[t]], b.comps[t]);
  }
  return c;
}

// Image of g under the embedding into H wr Sym(T): the slot permutation is
// t |-> t*g and slot t carries the cofactor of (t*g^{-1}, g).
inline WreathElem wreath_image(const Transversal& tr, int g) {
  const int k = static_cast<int>(tr.reps.size());
  WreathElem w;
  w.perm.resize(k);
  w.comps.resize(k);
  int ginv = tr.group->inv(g);
  for (int t = 0; t < k; ++t) {
    w.perm[t] = tr.act[t][g];
    w.comps[t] = tr.cof[tr.act[t][ginv]][g];
  }
  return w;
}

struct WreathEmbedding {
  GroupPtr image;                  // subgroup generated by the embedded elements
  Hom phi;                         // G -> image
  std::vector<WreathElem> elems;   // wreath form of each image element
};

inline WreathEmbedding wreath_embedding(const Transversal& tr) {
  const Group& g = *tr.group;
  std::set<WreathElem> seen;
  std::deque<WreathElem> frontier;
  std::vector<WreathElem> gens;
  for (int x = 0; x < g.order(); ++x) gens.push_back(wreath_image(tr, x));
  for (const auto& w : gens)
    if (seen.insert(w).second) frontier.push_back(w);
  while (!frontier.empty()) {
    auto w = frontier.front();
    frontier.pop_front();
    for (const auto& h : gens) {
      auto p = wreath_mul(g, w, h);
      if (seen.insert(p).second) frontier.push_back(p);
    }
  }
  std::vector<WreathElem> elems(seen.begin(), seen.end());
  std::map<WreathElem, int> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = idx.at(wreath_mul(g, elems[a], elems[b]));
  auto w = Group::from_cayley(table);
  std::vector<int> im(g.order());
  for (int x = 0; x < g.order(); ++x) im[x] = idx.at(wreath_image(tr, x));
  return WreathEmbedding{w, make_hom(tr.group, w, im), elems};
}

// ---------------------------------------------------------------------------
// the twisted-diagonal extension used to push a surjection up along H <= G

// Fiber product of G -> H wr Sym(T) (the transversal embedding) with the
// slotwise application of kappa.  Elements are pairs (w, g) with w over the
// extension and g in G; the kernel is the |T|-th direct power of ker kappa.
struct ExtensionTensor {
  GroupPtr ghat;
  Hom kappa_g;                       // ghat -> G
  GroupPtr m_group;                  // ker kappa materialized inside Hhat
  Hom m_in_hhat;                     // m_group -> Hhat
  GroupPtr m_power;                  // m_group^{|T|}
  std::vector<Hom> m_power_proj;     // m_power -> m_group per slot
  Hom kernel_embed;                  // m_power -> ghat, onto ker kappa_g
  std::vector<int> base_of;          // ghat element -> g
  std::vector<std::vector<int>> comps_of;  // ghat element -> Hhat components
};

inline ExtensionTensor extension_tensor(const Hom& kappa, const Transversal& tr) {
  GroupPtr g = tr.group;
  GroupPtr hhat = kappa.src;
  if (image_of(kappa) != tr.subgroup)
    throw domain_error("surjection image does not match the transversal subgroup");
  const int k = static_cast<int>(tr.reps.size());

  // fibers of kappa over each subgroup element, sorted
  std::map<int, std::vector<int>> fiber;
  for (int x = 0; x < hhat->order(); ++x) fiber[kappa(x)].push_back(x);
  const int m = static_cast<int>(fiber.begin()->second.size());

  long total = g->order();
  for (int t = 0; t < k; ++t) {
    total *= m;
    if (total > Group::kOrderCap)
      throw domain_error("extension exceeds the order cap of 200");
  }

  std::vector<int> base_of;
  std::vector<std::vector<int>> comps_of;
  std::map<std::pair<int, std::vector<int>>, int> idx;
  for (int x = 0; x < g->order(); ++x) {
    WreathElem w = wreath_image(tr, x);
    std::vector<int> digits(k, 0);
    while (true) {
      std::vector<int> comps(k);
      for (int t = 0; t < k; ++t) comps[t] = fiber.at(w.comps[t])[digits[t]];
      idx[{x, comps}] = static_cast<int>(base_of.size());
      base_of.push_back(x);
      comps_of.push_back(std::move(comps));
      int t = k - 1;
      while (t >= 0 && ++digits[t] == m) digits[t--] = 0;
      if (t < 0) break;
    }
  }

  const int n = static_cast<int>(base_of.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    WreathElem wa{wreath_image(tr, base_of[a]).perm, comps_of[a]};
    for (int b = 0; b < n; ++b) {
      WreathElem wb{wreath_image(tr, base_of[b]).perm, comps_of[b]};
      WreathElem wc = wreath_mul(*hhat, wa, wb);
      table[a][b] = idx.at({g->mul(base_of[a], base_of[b]), wc.comps});
    }
  }
  auto ghat = Group::from_cayley(table);
  Hom kappa_g = make_hom(ghat, g, base_of);

  auto mview = subgroup_group(hhat, kernel_of(kappa));
  auto mpow = direct_product(std::vector<GroupPtr>(k, mview.group));
  std::vector<int> em(mpow.group->order());
  for (int x = 0; x < mpow.group->order(); ++x) {
    std::vector<int> comps(k);
    for (int t = 0; t < k; ++t) comps[t] = mview.incl(mpow.proj[t](x));
    em[x] = idx.at({0, comps});
  }
  Hom kernel_embed = make_hom(mpow.group, ghat, em);
  return ExtensionTensor{ghat,       kappa_g, mview.group, mview.incl,
                         mpow.group, mpow.proj, kernel_embed, base_of, comps_of};
}

// ---------------------------------------------------------------------------
// isomorphism testing: exact backtracking on generator images

namespace detail {

inline bool extend_iso(const Group& a, const Group& b, const std::vector<int>& gens,
                       std::vector<int>& gen_images, std::size_t next) {
  if (next == gens.size()) {
    // close the partial assignment over all of A
    std::vector<int> map(a.order(), -1);
    map[0] = 0;
    std::deque<int> frontier{0};
    std::vector<std::pair<int, int>> assigned;
    for (std::size_t i = 0; i < gens.size(); ++i) assigned.emplace_back(gens[i], gen_images[i]);
    for (auto [x, y] : assigned) {
      if (map[x] != -1 && map[x] != y) return false;
      if (map[x] == -1) {
        map[x] = y;
        frontier.push_back(x);
      }
    }
    std::size_t covered = 0;
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop_front();
      ++covered;
      for (auto [s, t] : assigned) {
        int xs = a.mul(x, s), ys = b.mul(map[x], t);
        if (map[xs] == -1) {
          map[xs] = ys;
          frontier.push_back(xs);
        } else if (map[xs] != ys) {
          return false;
        }
      }
    }
    if (covered != static_cast<std::size_t>(a.order())) return false;
    std::vector<bool> hit(b.order(), false);
    for (int y : map) {
      if (y < 0 || hit[y]) return false;
      hit[y] = true;
    }
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
  }
  int want = a.element_order(gens[next]);
  for (int cand = 0; cand < b.order(); ++cand) {
    if (b.element_order(cand) != want) continue;
    gen_images[next] = cand;
    if (extend_iso(a, b, gens, gen_images, next + 1)) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> gens;
  std::vector<int> have{0};
  while (static_cast<int>(have.size()) < a.order()) {
    int pick = -1;
    for (int x = 0; x < a.order(); ++x)
      if (!std::binary_search(have.begin(), have.end(), x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    have = closure(a, gens);
  }
  std::vector<int> gen_images(gens.size());
  return detail::extend_iso(a, b, gens, gen_images, 0);
}

}  // namespace cliffpair
