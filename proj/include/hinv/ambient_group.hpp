#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hinv/finite_group.hpp"
#include "hinv/pc_presentation.hpp"
#include "hinv/pc_subgroup.hpp"

namespace hinv {

// The group G that knot groups are considered over. Finite kinds keep a
// Cayley table and use one-entry elements {index}; the polycyclic kind uses
// exponent vectors.
class AmbientGroup {
public:
  enum class Kind { trivial, cyclic, table, permutation, polycyclic };
  using Element = std::vector<Integer>;
  static constexpr bool decides_word_problem = true;

  AmbientGroup() = default;

  static AmbientGroup trivial() { return AmbientGroup(); }

  static AmbientGroup cyclic(int n) {
    AmbientGroup g;
    g.kind_ = Kind::cyclic;
    g.finite_ = FiniteGroup::cyclic(n);
    return g;
  }

  static AmbientGroup from_table(FiniteGroup t) {
    AmbientGroup g;
    g.kind_ = Kind::table;
    g.finite_ = std::move(t);
    return g;
  }

  // Permutations on {0..d-1}; see FiniteGroup::from_permutations.
  static AmbientGroup from_permutations(const std::vector<std::vector<int>> &gens) {
    AmbientGroup g;
    g.kind_ = Kind::permutation;
    std::vector<std::vector<int>> elts;
    g.finite_ = FiniteGroup::from_permutations(gens, &elts);
    for (std::size_t i = 0; i < elts.size(); ++i)
      g.perm_index_.emplace(elts[i], static_cast<int>(i));
    g.perm_generators_ = gens;
    return g;
  }

  static AmbientGroup polycyclic(PcPresentation p) {
    auto failures = p.consistency_failures();
    if (!failures.empty())
      throw InputError("pc presentation of G is inconsistent (test " + failures.front().test + ")");
    AmbientGroup g;
    g.kind_ = Kind::polycyclic;
    g.pc_ = std::move(p);
    return g;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::polycyclic; }
  bool is_trivial() const { return is_finite() && finite_.order() == 1; }

  int order() const {
    if (!is_finite())
      throw UnsupportedError("order of an infinite polycyclic G");
    return finite_.order();
  }
  const FiniteGroup &finite() const {
    if (!is_finite())
      throw UnsupportedError("G is polycyclic, not finite");
    return finite_;
  }
  const PcPresentation &pc() const {
    if (kind_ != Kind::polycyclic)
      throw UnsupportedError("G is not polycyclic");
    return pc_;
  }

  Element identity() const {
    return is_finite() ? Element{finite_.identity()} : pc_.identity();
  }
  Element multiply(const Element &a, const Element &b) const {
    if (is_finite())
      return {finite_.multiply(index(a), index(b))};
    return pc_.multiply(a, b);
  }
  Element inverse(const Element &a) const {
    return is_finite() ? Element{finite_.inverse(index(a))} : pc_.inverse(a);
  }
  Element power(const Element &a, const Integer &n) const {
    if (is_finite()) {
      long long m = finite_.element_order(index(a));
      return {finite_.power(index(a), to_ll(mod_floor(n, m)))};
    }
    return pc_.power(a, n);
  }
  Element power(const Element &a, long long n) const { return power(a, Integer(n)); }
  bool is_identity(const Element &a) const { return a == identity(); }
  bool equal(const Element &a, const Element &b) const { return a == b; }

  Element from_index(int i) const { return {i}; }
  int index(const Element &a) const { return static_cast<int>(a.at(0)); }

  std::optional<int> permutation_index(const std::vector<int> &p) const {
    std::vector<int> q = p;
    std::size_t degree = perm_index_.empty() ? 0 : perm_index_.begin()->first.size();
    if (q.size() > degree)
      return std::nullopt;
    for (std::size_t i = q.size(); i < degree; ++i)
      q.push_back(static_cast<int>(i));
    auto it = perm_index_.find(q);
    if (it == perm_index_.end())
      return std::nullopt;
    return it->second;
  }

  std::string label(const Element &a) const {
    if (is_finite())
      return finite_.label(index(a));
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      if (!s.empty())
        s += "*";
      s += pc_.names()[i];
      if (a[i] != 1)
        s += "^" + a[i].str();
    }
    return s.empty() ? "1" : s;
  }

  // Do the given elements generate G?
  bool generates(const std::vector<Element> &gens) const {
    if (is_finite()) {
      std::vector<int> idx;
      for (const Element &g : gens)
        idx.push_back(index(g));
      return static_cast<int>(finite_.generated_subgroup(idx).size()) == finite_.order();
    }
    PcSubgroup<> h(pc_);
    for (const Element &g : gens)
      h.add_generator(g);
    h.close();
    for (std::size_t i = 0; i < pc_.size(); ++i)
      if (!h.contains(pc_.unit(i)))
        return false;
    return true;
  }

  std::string describe() const {
    switch (kind_) {
    case Kind::trivial:
      return "trivial";
    case Kind::cyclic:
      return "cyclic:" + std::to_string(finite_.order());
    case Kind::table:
      return "table (order " + std::to_string(finite_.order()) + ")";
    case Kind::permutation:
      return "perm (order " + std::to_string(finite_.order()) + ")";
    case Kind::polycyclic:
      return "pc (" + std::to_string(pc_.size()) + " generators)";
    }
    return "";
  }

  friend bool operator==(const AmbientGroup &a, const AmbientGroup &b) {
    if (a.is_finite() != b.is_finite())
      return false;
    if (a.is_finite())
      return a.finite_ == b.finite_;
    return a.pc_ == b.pc_;
  }

private:
  Kind kind_ = Kind::trivial;
  FiniteGroup finite_;
  PcPresentation pc_;
  std::map<std::vector<int>, int> perm_index_;
  std::vector<std::vector<int>> perm_generators_;
};

} // namespace hinv
