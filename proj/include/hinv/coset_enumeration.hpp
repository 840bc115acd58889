#pragma once

#include <numeric>
#include <vector>

#include "hinv/over_g.hpp"

namespace hinv {

// Closed coset table of Ker(gamma) in pi. Column 2i is generator i, column
// 2i+1 its inverse. Cosets are numbered in breadth-first order from the
// subgroup coset 0, so transversal words are shortest and prefix-closed.
struct CosetTable {
  int num_generators = 0;
  std::vector<std::vector<int>> table;
  std::vector<FreeWord> transversal;
  std::vector<int> element_of_coset; // G index of gamma(transversal[c])
  std::vector<int> coset_of_element;

  int size() const { return static_cast<int>(table.size()); }

  static int column(const Letter &l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }

  // Coset reached from c by reading w.
  int act(int c, const FreeWord &w) const {
    for (const Letter &l : w.letters()) {
      int col = column(l);
      for (long long k = 0; k < std::llabs(l.exp); ++k)
        c = table[c][col];
    }
    return c;
  }
};

struct ToddCoxeterOptions {
  std::size_t coset_cap = 0; // 0 means 10 * |G|
};

namespace detail {

class CosetEnumerator {
public:
  CosetEnumerator(int ngens, std::size_t cap) : ncols_(2 * ngens), cap_(cap) { new_coset(); }

  void scan_and_fill(int c, const std::vector<int> &w) {
    if (w.empty())
      return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && t_[f][w[i]] >= 0)
        f = t_[f][w[i++]];
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && t_[b][w[j] ^ 1] >= 0)
        b = t_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        t_[f][w[i]] = b;
        t_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(int c) {
    for (int x = 0; x < ncols_ && alive(c); ++x)
      if (t_[c][x] < 0)
        define(c, x);
  }

  bool alive(int c) const { return p_[c] == c; }
  int defined() const { return static_cast<int>(t_.size()); }
  const std::vector<std::vector<int>> &raw() const { return t_; }

private:
  int new_coset() {
    if (t_.size() >= cap_)
      throw InternalError("coset enumeration exceeded its cap of " + std::to_string(cap_) +
                          " cosets");
    t_.emplace_back(ncols_, -1);
    p_.push_back(static_cast<int>(p_.size()));
    return static_cast<int>(t_.size()) - 1;
  }

  void define(int c, int x) {
    int d = new_coset();
    t_[c][x] = d;
    t_[d][x ^ 1] = c;
  }

  int rep(int c) {
    int r = c;
    while (p_[r] != r)
      r = p_[r];
    while (p_[c] != r) {
      int n = p_[c];
      p_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int> &q) {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    if (k > l)
      std::swap(k, l);
    p_[l] = k;
    q.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> q;
    merge(a, b, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      int e = q[i];
      for (int x = 0; x < ncols_; ++x) {
        int f = t_[e][x];
        if (f < 0)
          continue;
        if (t_[f][x ^ 1] == e)
          t_[f][x ^ 1] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (t_[e1][x] >= 0)
          merge(f1, t_[e1][x], q);
        else if (t_[f1][x ^ 1] >= 0)
          merge(e1, t_[f1][x ^ 1], q);
        else {
          t_[e1][x] = f1;
          t_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  int ncols_;
  std::size_t cap_;
  std::vector<std::vector<int>> t_;
  std::vector<int> p_;
};

inline std::vector<int> columns_of(const FreeWord &w) {
  std::vector<int> cols;
  for (const Letter &l : expand(w))
    cols.push_back(CosetTable::column(l));
  return cols;
}

} // namespace detail

// Schreier generators r_t x r_{t gamma(x)}^-1 of Ker(F -> G) for a
// breadth-first transversal of the Cayley graph of G on the gamma images.
inline std::vector<FreeWord> kernel_generators_in_free_group(const OverGStructure &g) {
  const FiniteGroup &G = g.G().finite();
  const int n = g.pi().rank();
  std::vector<int> gimg(n);
  for (int i = 0; i < n; ++i)
    gimg[i] = g.G().index(g.gamma().image(i));
  std::vector<FreeWord> rep(G.order());
  std::vector<bool> seen(G.order(), false);
  std::vector<int> order{G.identity()};
  seen[G.identity()] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int t = order[k];
    for (int i = 0; i < n; ++i)
      for (int s : {1, -1}) {
        int u = G.multiply(t, s > 0 ? gimg[i] : G.inverse(gimg[i]));
        if (!seen[u]) {
          seen[u] = true;
          rep[u] = rep[t] * FreeWord::generator(i, s);
          order.push_back(u);
        }
      }
  }
  std::vector<FreeWord> gens;
  for (int t : order)
    for (int i = 0; i < n; ++i) {
      FreeWord s = rep[t] * FreeWord::generator(i) * rep[G.multiply(t, gimg[i])].inverse();
      if (!s.empty())
        gens.push_back(std::move(s));
    }
  return gens;
}

inline CosetTable todd_coxeter(const OverGStructure &g, ToddCoxeterOptions opts = {}) {
  if (!g.G().is_finite())
    throw UnsupportedError("coset enumeration needs a finite G");
  const FiniteGroup &G = g.G().finite();
  const int n = g.pi().rank();
  std::size_t cap = opts.coset_cap ? opts.coset_cap : 10 * static_cast<std::size_t>(G.order());
  detail::CosetEnumerator en(n, cap);

  std::vector<FreeWord> subgens = kernel_generators_in_free_group(g);
  for (const FreeWord &w : subgens)
    en.scan_and_fill(0, detail::columns_of(w));
  std::vector<std::vector<int>> rels;
  for (const FreeWord &r : g.pi().relators())
    rels.push_back(detail::columns_of(r));
  for (int c = 0; c < en.defined(); ++c) {
    for (const auto &r : rels) {
      if (!en.alive(c))
        break;
      en.scan_and_fill(c, r);
    }
    if (en.alive(c))
      en.fill_row(c);
  }

  // Standardize: breadth-first renumbering over live cosets.
  const auto &raw = en.raw();
  std::vector<int> newnum(raw.size(), -1);
  std::vector<int> order{0};
  newnum[0] = 0;
  CosetTable ct;
  ct.num_generators = n;
  ct.transversal.push_back({});
  for (std::size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (int x = 0; x < 2 * n; ++x) {
      int d = raw[c][x];
      check_internal(d >= 0 && en.alive(d), "coset table not closed after enumeration");
      if (newnum[d] < 0) {
        newnum[d] = static_cast<int>(order.size());
        order.push_back(d);
        ct.transversal.push_back(ct.transversal[k] * FreeWord::generator(x / 2, x % 2 ? -1 : 1));
      }
    }
  }
  ct.table.assign(order.size(), std::vector<int>(2 * n));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int x = 0; x < 2 * n; ++x)
      ct.table[k][x] = newnum[raw[order[k]][x]];

  // Postconditions: closed, compatible, index |G|, transversal bijective onto G.
  check_internal(ct.size() == G.order(), "coset count " + std::to_string(ct.size()) +
                                             " differs from |G| = " + std::to_string(G.order()));
  for (int c = 0; c < ct.size(); ++c)
    for (const FreeWord &r : g.pi().relators())
      check_internal(ct.act(c, r) == c, "relator does not close at every coset");
  for (const FreeWord &w : subgens)
    check_internal(ct.act(0, w) == 0, "subgroup generator does not fix coset 0");
  ct.element_of_coset.resize(ct.size());
  ct.coset_of_element.assign(G.order(), -1);
  for (int c = 0; c < ct.size(); ++c) {
    int e = g.G().index(g.gamma_of(ct.transversal[c]));
    check_internal(ct.coset_of_element[e] < 0, "transversal is not injective on G");
    ct.element_of_coset[c] = e;
    ct.coset_of_element[e] = c;
  }
  return ct;
}

} // namespace hinv
