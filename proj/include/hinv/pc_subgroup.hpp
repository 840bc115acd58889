#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hinv/pc_presentation.hpp"

namespace hinv {

// Placeholder shadow group for plain membership tests.
struct NoShadow {
  struct Element {
    friend bool operator==(const Element &, const Element &) = default;
  };
  Element identity() const { return {}; }
  Element multiply(const Element &, const Element &) const { return {}; }
  Element inverse(const Element &) const { return {}; }
  Element power(const Element &, const Integer &) const { return {}; }
};

// Induced polycyclic sequence of a subgroup of a pc group. Each table entry
// carries a shadow: an element of another group transported through every
// product and power, so sifting yields a preimage alongside the verdict.
template <class ShadowGroup = NoShadow>
class PcSubgroup {
public:
  using Shadow = typename ShadowGroup::Element;

  struct Entry {
    PcElement elem;
    Shadow shadow;
  };

  struct SiftResult {
    PcElement remainder;   // identity iff the element lies in the subgroup
    Shadow shadow;         // shadow of (element * remainder^-1)
    bool member() const {
      for (const Integer &x : remainder)
        if (x != 0)
          return false;
      return true;
    }
  };

  PcSubgroup(const PcPresentation &pc, ShadowGroup shadow = {})
      : pc_(&pc), sg_(std::move(shadow)) {}

  void add_generator(const PcElement &e, const Shadow &s) {
    pending_.push_back({e, s});
    closed_ = false;
  }
  void add_generator(const PcElement &e) { add_generator(e, sg_.identity()); }

  // Completes the table so that it is an induced sequence of the generated subgroup.
  void close() {
    while (true) {
      drain();
      bool changed = false;
      std::vector<std::size_t> depths;
      for (auto &[d, _] : table_)
        depths.push_back(d);
      for (std::size_t a = 0; a < depths.size(); ++a) {
        const Entry ta = table_.at(depths[a]);
        const Integer &m = pc_->order(depths[a]);
        if (m != 0) {
          Integer r = m / ta.elem[depths[a]];
          changed |= insert({pc_->power(ta.elem, r), sg_.power(ta.shadow, r)});
        }
        for (std::size_t b = a + 1; b < depths.size(); ++b) {
          if (!table_.count(depths[a]) || !table_.count(depths[b]))
            continue;
          const Entry s = table_.at(depths[a]);
          const Entry tb = table_.at(depths[b]);
          Entry sinv{pc_->inverse(s.elem), sg_.inverse(s.shadow)};
          changed |= insert(conj(tb, s, sinv));
          changed |= insert(conj(tb, sinv, s));
        }
      }
      changed |= drain();
      if (!changed)
        break;
    }
    closed_ = true;
  }

  SiftResult sift(const PcElement &e) const {
    check_internal(closed_, "PcSubgroup::sift before close()");
    PcElement x = e;
    Shadow acc = sg_.identity();
    for (std::size_t d = 0; d < x.size(); ++d) {
      if (x[d] == 0)
        continue;
      auto it = table_.find(d);
      if (it == table_.end() || x[d] % it->second.elem[d] != 0)
        return {x, acc};
      Integer k = x[d] / it->second.elem[d];
      x = pc_->multiply(pc_->power(it->second.elem, -k), x);
      acc = sg_.multiply(acc, sg_.power(it->second.shadow, k));
    }
    return {x, acc};
  }

  bool contains(const PcElement &e) const { return sift(e).member(); }

  // Shadow of e, if e lies in the subgroup.
  std::optional<Shadow> preimage(const PcElement &e) const {
    SiftResult r = sift(e);
    if (!r.member())
      return std::nullopt;
    return r.shadow;
  }

  const std::map<std::size_t, Entry> &table() const { return table_; }

  // Index-free description: leading exponents by depth (0 where absent).
  std::vector<Integer> leading_exponents() const {
    std::vector<Integer> v(pc_->size());
    for (auto &[d, t] : table_)
      v[d] = t.elem[d];
    return v;
  }

private:
  Entry conj(const Entry &t, const Entry &by, const Entry &by_inv) const {
    return {pc_->multiply(pc_->multiply(by_inv.elem, t.elem), by.elem),
            sg_.multiply(sg_.multiply(by_inv.shadow, t.shadow), by.shadow)};
  }

  bool drain() {
    bool changed = false;
    while (!pending_.empty()) {
      Entry e = std::move(pending_.back());
      pending_.pop_back();
      changed |= insert(std::move(e));
    }
    return changed;
  }

  // Sifts e against the table and stores what is left; returns whether the
  // table changed.
  bool insert(Entry e) {
    bool changed = false;
    while (true) {
      std::size_t d = 0;
      while (d < e.elem.size() && e.elem[d] == 0)
        ++d;
      if (d == e.elem.size())
        return changed;
      const Integer &m = pc_->order(d);
      if (m != 0) {
        // Replace e by e^s with leading exponent gcd(a, m); e^(m/g) stays queued
        // so that nothing is lost.
        ExtendedGcd eg = extended_gcd(e.elem[d], m);
        if (eg.g != e.elem[d]) {
          pending_.push_back({pc_->power(e.elem, m / eg.g), sg_.power(e.shadow, m / eg.g)});
          e = {pc_->power(e.elem, eg.s), sg_.power(e.shadow, eg.s)};
        }
      } else if (e.elem[d] < 0) {
        e = {pc_->inverse(e.elem), sg_.inverse(e.shadow)};
      }
      auto it = table_.find(d);
      if (it == table_.end()) {
        table_.emplace(d, std::move(e));
        return true;
      }
      Entry &t = it->second;
      const Integer &l = t.elem[d], &a = e.elem[d];
      if (a % l == 0) {
        Integer k = a / l;
        e = {pc_->multiply(pc_->power(t.elem, -k), e.elem),
             sg_.multiply(sg_.power(t.shadow, -k), e.shadow)};
        continue;
      }
      // Merge: new entry t^s e^u with leading gcd; t and e reduced against it.
      ExtendedGcd eg = extended_gcd(l, a);
      Entry merged{pc_->multiply(pc_->power(t.elem, eg.s), pc_->power(e.elem, eg.t)),
                   sg_.multiply(sg_.power(t.shadow, eg.s), sg_.power(e.shadow, eg.t))};
      Integer kt = l / eg.g, ke = a / eg.g;
      Entry rt{pc_->multiply(pc_->power(merged.elem, -kt), t.elem),
               sg_.multiply(sg_.power(merged.shadow, -kt), t.shadow)};
      Entry re{pc_->multiply(pc_->power(merged.elem, -ke), e.elem),
               sg_.multiply(sg_.power(merged.shadow, -ke), e.shadow)};
      t = std::move(merged);
      pending_.push_back(std::move(rt));
      pending_.push_back(std::move(re));
      return true;
    }
  }

  const PcPresentation *pc_;
  ShadowGroup sg_;
  std::map<std::size_t, Entry> table_;
  std::vector<Entry> pending_;
  bool closed_ = true;
};

} // namespace hinv
