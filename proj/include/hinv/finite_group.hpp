#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hinv/error.hpp"

namespace hinv {

// Finite group given by its multiplication table. Elements are 0..order-1.
class FiniteGroup {
public:
  using Element = int;

  FiniteGroup() : table_{{0}}, inverse_{0}, labels_{"1"} {}

  // Validates a Cayley table: closure, identity, inverses, associativity.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0)
      throw InputError("group table is empty");
    for (const auto &row : table_) {
      if (static_cast<int>(row.size()) != n)
        throw InputError("group table is not square");
      for (int x : row)
        if (x < 0 || x >= n)
          throw InputError("group table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = table_[e][x] == x && table_[x][e] == x;
      if (ok)
        identity_ = e;
    }
    if (identity_ < 0)
      throw InputError("group table has no identity");
    inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (table_[x][y] == identity_ && table_[y][x] == identity_)
          inverse_[x] = y;
      if (inverse_[x] < 0)
        throw InputError("group table element " + std::to_string(x) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw InputError("group table is not associative");
    if (labels_.empty())
      for (int x = 0; x < n; ++x)
        labels_.push_back(std::to_string(x));
  }

  static FiniteGroup cyclic(int n) {
    if (n < 1)
      throw InputError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
  }

  // Closure of permutation generators on {0..degree-1}; the product p*q
  // applies p first. Elements are numbered in breadth-first order from the
  // identity, following generators in the given order.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>> &gens,
                                       std::vector<std::vector<int>> *elements_out = nullptr) {
    std::size_t degree = 0;
    for (const auto &g : gens)
      degree = std::max(degree, g.size());
    auto pad = [&](std::vector<int> p) {
      for (std::size_t i = p.size(); i < degree; ++i)
        p.push_back(static_cast<int>(i));
      return p;
    };
    auto compose = [](const std::vector<int> &p, const std::vector<int> &q) {
      std::vector<int> r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = q[p[i]];
      return r;
    };
    std::vector<std::vector<int>> g2;
    for (const auto &g : gens) {
      auto p = pad(g);
      std::vector<bool> seen(degree, false);
      for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[x])
          throw InputError("generator is not a permutation");
        seen[x] = true;
      }
      g2.push_back(std::move(p));
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elts{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t k = 0; k < elts.size(); ++k)
      for (const auto &g : g2) {
        auto p = compose(elts[k], g);
        if (!index.count(p)) {
          index.emplace(p, static_cast<int>(elts.size()));
          elts.push_back(std::move(p));
        }
        if (elts.size() > 100000)
          throw InputError("permutation group too large for a multiplication table");
      }
    const int n = static_cast<int>(elts.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t[i][j] = index.at(compose(elts[i], elts[j]));
    std::vector<std::string> labels;
    for (const auto &p : elts)
      labels.push_back(cycle_string(p));
    if (elements_out)
      *elements_out = elts;
    return FiniteGroup(std::move(t), std::move(labels));
  }

  // Cycle notation with points numbered from 1; "()" for the identity.
  static std::string cycle_string(const std::vector<int> &p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == static_cast<int>(i))
        continue;
      s += "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first)
          s += ",";
        s += std::to_string(j + 1);
        first = false;
        j = p[j];
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long long n) const {
    if (n < 0) {
      a = inverse(a);
      n = -n;
    }
    int r = identity_;
    n %= element_order(a);
    for (long long i = 0; i < n; ++i)
      r = multiply(r, a);
    return r;
  }
  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = multiply(x, a))
      ++k;
    return k;
  }
  const std::vector<std::vector<int>> &table() const { return table_; }
  const std::string &label(int a) const { return labels_[a]; }
  const std::vector<std::string> &labels() const { return labels_; }

  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<int> generated_subgroup(const std::vector<int> &gens) const {
    std::vector<bool> in(order(), false);
    std::vector<int> elts{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < elts.size(); ++k)
      for (int g : gens) {
        int p = multiply(elts[k], g);
        if (!in[p]) {
          in[p] = true;
          elts.push_back(p);
        }
      }
    std::sort(elts.begin(), elts.end());
    return elts;
  }

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) {
    return a.table_ == b.table_;
  }

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  int identity_ = 0;
};

} // namespace hinv
