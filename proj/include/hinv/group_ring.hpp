#pragma once

#include <map>
#include <string>

#include "hinv/ambient_group.hpp"
#include "hinv/hom.hpp"
#include "hinv/lattice.hpp"

namespace hinv {

// Finite integer combination of group elements, kept sorted by key with no
// zero coefficients.
template <class Key>
class RingElement {
public:
  RingElement() = default;
  static RingElement monomial(Key k, Integer c = 1) {
    RingElement r;
    r.add(std::move(k), c);
    return r;
  }

  const std::map<Key, Integer> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key &k, const Integer &c) {
    if (c == 0)
      return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Integer augmentation() const {
    Integer s = 0;
    for (const auto &[k, c] : terms_)
      s += c;
    return s;
  }

  RingElement &operator+=(const RingElement &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  RingElement &operator-=(const RingElement &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement &b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement &b) { return a -= b; }
  RingElement operator-() const {
    RingElement r;
    for (const auto &[k, c] : terms_)
      r.terms_.emplace(k, -c);
    return r;
  }
  friend bool operator==(const RingElement &, const RingElement &) = default;

  // Product with the group law mul(Key, Key) -> Key.
  template <class Mul>
  RingElement times(const RingElement &o, Mul mul) const {
    RingElement r;
    for (const auto &[a, ca] : terms_)
      for (const auto &[b, cb] : o.terms_)
        r.add(mul(a, b), ca * cb);
    return r;
  }

  template <class Show>
  std::string to_string(Show show) const {
    if (terms_.empty())
      return "0";
    std::string s;
    for (const auto &[k, c] : terms_) {
      if (!s.empty())
        s += c < 0 ? " - " : " + ";
      else if (c < 0)
        s += "-";
      Integer a = abs(c);
      std::string g = show(k);
      if (g == "1")
        s += a.str();
      else
        s += (a == 1 ? "" : a.str() + "*") + g;
    }
    return s;
  }

private:
  std::map<Key, Integer> terms_;
};

// Z[F] on words, and Z[G] on normal forms of G.
using FreeRingElement = RingElement<FreeWord>;
using GroupRingElement = RingElement<AmbientGroup::Element>;

inline FreeRingElement free_multiply(const FreeRingElement &a, const FreeRingElement &b) {
  return a.times(b, [](const FreeWord &u, const FreeWord &v) { return u * v; });
}

inline GroupRingElement group_multiply(const AmbientGroup &G, const GroupRingElement &a,
                                       const GroupRingElement &b) {
  return a.times(b, [&](const auto &u, const auto &v) { return G.multiply(u, v); });
}

inline GroupRingElement push_forward(const FreeRingElement &a, const GroupHom<AmbientGroup> &h) {
  GroupRingElement r;
  for (const auto &[w, c] : a.terms())
    r.add(h.apply(w), c);
  return r;
}

// Right multiplication by a on Z[G] with basis G (finite), acting on row
// vectors: e_g -> sum_h a_h e_{gh}. Products go to products.
inline IntMatrix regular_representation(const AmbientGroup &G, const GroupRingElement &a) {
  const int m = G.order();
  IntMatrix R(m, m);
  for (int g = 0; g < m; ++g)
    for (const auto &[h, c] : a.terms())
      R(g, G.index(G.multiply(G.from_index(g), h))) += c;
  return R;
}

// Left multiplication by s, e_g -> e_{sg}, on the same basis.
inline IntMatrix left_translation(const AmbientGroup &G, int s) {
  const int m = G.order();
  IntMatrix L(m, m);
  for (int g = 0; g < m; ++g)
    L(g, G.finite().multiply(s, g)) = 1;
  return L;
}

} // namespace hinv
