#pragma once

#include <string>
#include <vector>

#include "hinv/lattice.hpp"
#include "hinv/pc_presentation.hpp"
#include "hinv/presentation.hpp"

namespace hinv {

// How a pc generator entered the presentation: as the image of a source
// generator, as the tail of a conjugate relation [g_a, g_b], or as the tail
// of the power relation of g_a.
struct PcDefinition {
  enum class Kind { image, commutator, power };
  Kind kind = Kind::image;
  int a = -1, b = -1;
  friend bool operator==(const PcDefinition &, const PcDefinition &) = default;
};

// Necklace (Witt) number: rank of the degree-w part of the free Lie ring on r
// generators, which bounds the weight-w pc generators of any r-generator group.
inline Integer witt_number(int r, int w) {
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0)
          return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  Integer s = 0;
  for (int d = 1; d <= w; ++d)
    if (w % d == 0) {
      Integer p = 1;
      for (int k = 0; k < w / d; ++k)
        p *= r;
      s += mobius(d) * p;
    }
  return s / w;
}

// Consistent weighted pc presentation of P / gamma_{c+1}(P) together with the
// epimorphism from P and a preimage word for every pc generator.
class NilpotentQuotient {
public:
  NilpotentQuotient() = default;

  const FpPresentation &source() const { return source_; }
  const PcPresentation &pc() const { return pc_; }
  int requested_class() const { return requested_class_; }
  // Largest weight present; smaller than requested when the series stopped.
  int nilpotency_class() const { return pc_.max_weight(); }
  // True when gamma_k = gamma_{k+1} was observed, so every larger class gives the same group.
  bool stabilized() const { return stabilized_; }
  const std::vector<PcElement> &images() const { return images_; }
  const std::vector<FreeWord> &preimages() const { return preimages_; }
  const std::vector<PcDefinition> &definitions() const { return definitions_; }

  PcElement evaluate(const FreeWord &w) const {
    PcElement r = pc_.identity();
    for (const Letter &l : w.letters())
      r = pc_.multiply(r, pc_.power(images_.at(l.gen), Integer(l.exp)));
    return r;
  }

  // A source word mapping to e.
  FreeWord preimage_word(const PcElement &e) const {
    FreeWord w;
    for (std::size_t l = 0; l < e.size(); ++l)
      if (e[l] != 0)
        w *= preimages_[l].pow(to_ll(e[l]));
    return w;
  }

  // Abelian invariants of gamma_w / gamma_{w+1} for w = 1..class.
  std::vector<AbelianInvariants> layers() const {
    std::vector<AbelianInvariants> out;
    for (int w = 1; w <= requested_class_; ++w) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < pc_.size(); ++i)
        if (pc_.weight(i) == w)
          idx.push_back(i);
      IntMatrix rel(0, idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        const Integer &m = pc_.order(idx[a]);
        if (m == 0)
          continue;
        IntVector row(idx.size());
        row[a] = m;
        for (std::size_t b = 0; b < idx.size(); ++b)
          row[b] -= pc_.power_rhs(idx[a])[idx[b]];
        rel.append_row(row);
      }
      out.push_back(cokernel_invariants(rel));
    }
    return out;
  }

  // Quotient by gamma_{c+1}: the weighted presentation truncates.
  NilpotentQuotient truncate(int c) const {
    NilpotentQuotient q;
    q.source_ = source_;
    q.requested_class_ = c;
    q.pc_ = pc_.truncate_to_weight(c);
    q.stabilized_ = stabilized_ && pc_.max_weight() <= c;
    const std::size_t k = q.pc_.size();
    for (const PcElement &e : images_)
      q.images_.push_back(PcPresentation::prefix(e, k));
    q.preimages_.assign(preimages_.begin(), preimages_.begin() + k);
    q.definitions_.assign(definitions_.begin(), definitions_.begin() + k);
    return q;
  }

private:
  friend NilpotentQuotient nilpotent_quotient(const FpPresentation &, int);

  // Extends a class-k quotient to class k+1; returns false if the new layer is trivial.
  bool step(int k);

  FpPresentation source_;
  PcPresentation pc_;
  int requested_class_ = 0;
  bool stabilized_ = false;
  std::vector<PcElement> images_;
  std::vector<FreeWord> preimages_;
  std::vector<PcDefinition> definitions_;
};

inline bool NilpotentQuotient::step(int k) {
  const std::size_t n = pc_.size();
  const int ngens = source_.rank();

  // Which relations already define a generator and so carry no tail.
  std::vector<bool> image_is_def(ngens, false), power_is_def(n, false);
  std::vector<std::vector<bool>> conj_is_def(n, std::vector<bool>(n, false));
  for (const PcDefinition &d : definitions_) {
    if (d.kind == PcDefinition::Kind::image)
      image_is_def[d.a] = true;
    else if (d.kind == PcDefinition::Kind::power)
      power_is_def[d.a] = true;
    else
      conj_is_def[d.a][d.b] = true;
  }

  // Tails, ordered so that conjugates [g_j, g_i] with g_i of weight 1 and g_j
  // of weight k come last and are preferred as new generators.
  std::vector<PcDefinition> tails;
  for (int x = 0; x < ngens; ++x)
    if (!image_is_def[x])
      tails.push_back({PcDefinition::Kind::image, x, -1});
  for (std::size_t i = 0; i < n; ++i)
    if (pc_.order(i) != 0 && !power_is_def[i])
      tails.push_back({PcDefinition::Kind::power, static_cast<int>(i), -1});
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        int wi = pc_.weight(i), wj = pc_.weight(j);
        if (wi + wj > k + 1 || conj_is_def[j][i])
          continue;
        bool preferred = wi == 1 && wj == k;
        if (preferred == (pass == 1))
          tails.push_back({PcDefinition::Kind::commutator, static_cast<int>(j), static_cast<int>(i)});
      }
  const std::size_t T = tails.size();

  // Extension E by free central tails.
  std::vector<std::string> names = pc_.names();
  std::vector<Integer> orders = pc_.orders();
  std::vector<int> weights = pc_.weights();
  for (std::size_t t = 0; t < T; ++t) {
    names.push_back("t" + std::to_string(t + 1));
    orders.push_back(0);
    weights.push_back(k + 1);
  }
  PcPresentation E(names, orders, weights);
  auto pad = [&](const PcElement &e) {
    PcElement v = e;
    v.resize(n + T);
    return v;
  };
  std::vector<int> image_tail(ngens, -1), power_tail(n, -1);
  std::vector<std::vector<int>> conj_tail(n, std::vector<int>(n, -1));
  for (std::size_t t = 0; t < T; ++t) {
    const PcDefinition &d = tails[t];
    if (d.kind == PcDefinition::Kind::image)
      image_tail[d.a] = static_cast<int>(t);
    else if (d.kind == PcDefinition::Kind::power)
      power_tail[d.a] = static_cast<int>(t);
    else
      conj_tail[d.a][d.b] = static_cast<int>(t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pc_.order(i) != 0) {
      PcElement r = pad(pc_.power_rhs(i));
      if (power_tail[i] >= 0)
        r[n + power_tail[i]] = 1;
      E.set_power(i, std::move(r));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      PcElement r = pad(pc_.conjugate_rhs(j, i));
      if (conj_tail[j][i] >= 0)
        r[n + conj_tail[j][i]] = 1;
      E.set_conjugate(j, i, std::move(r));
    }
  }
  E.finalize();

  // Relations among the tails: consistency and the relators of the source.
  IntMatrix rel(0, T);
  auto add_relation = [&](const PcElement &lhs, const PcElement &rhs) {
    for (std::size_t l = 0; l < n; ++l)
      check_internal(lhs[l] == rhs[l], "tails extension disagrees below the new layer");
    IntVector row(T);
    bool nonzero = false;
    for (std::size_t t = 0; t < T; ++t) {
      row[t] = lhs[n + t] - rhs[n + t];
      nonzero |= row[t] != 0;
    }
    if (nonzero)
      rel.append_row(row);
  };
  for (const auto &f : E.consistency_failures(k + 1))
    add_relation(f.lhs, f.rhs);
  std::vector<PcElement> eimages;
  for (int x = 0; x < ngens; ++x) {
    PcElement v = pad(images_[x]);
    if (image_tail[x] >= 0)
      v[n + image_tail[x]] = 1;
    eimages.push_back(std::move(v));
  }
  for (const FreeWord &r : source_.relators()) {
    PcElement v = E.identity();
    for (const Letter &l : r.letters())
      v = E.multiply(v, E.power(eimages[l.gen], Integer(l.exp)));
    add_relation(v, E.identity());
  }

  // New layer = Z^T / relations.
  HermiteForm hf = hermite_form(rel, false);
  std::vector<int> pivot_row(T, -1);
  for (std::size_t r = 0; r < hf.rank(); ++r)
    pivot_row[hf.pivot_cols[r]] = static_cast<int>(r);
  std::vector<int> survivor(T, -1);
  std::vector<Integer> new_orders;
  std::vector<std::size_t> survivor_tail;
  for (std::size_t t = 0; t < T; ++t) {
    int pr = pivot_row[t];
    if (pr >= 0 && hf.H(pr, t) == 1)
      continue;
    survivor[t] = static_cast<int>(survivor_tail.size());
    survivor_tail.push_back(t);
    new_orders.push_back(pr >= 0 ? hf.H(pr, t) : Integer(0));
  }
  const std::size_t S = survivor_tail.size();
  if (S == 0)
    return false;
  if (Integer(S) > witt_number(ngens, k + 1))
    throw InternalError("weight " + std::to_string(k + 1) + " layer exceeds the free bound");

  // Each tail as an integer vector over the survivors (before reduction).
  std::vector<IntVector> expr(T, IntVector(S));
  for (std::size_t t = T; t-- > 0;) {
    if (survivor[t] >= 0) {
      expr[t][survivor[t]] = 1;
      continue;
    }
    int pr = pivot_row[t];
    for (std::size_t q = t + 1; q < T; ++q)
      if (hf.H(pr, q) != 0)
        for (std::size_t s = 0; s < S; ++s)
          expr[t][s] -= hf.H(pr, q) * expr[q][s];
  }
  // Power relations of torsion survivors, then a reducer for layer vectors.
  std::vector<IntVector> layer_power(S, IntVector(S));
  auto reduce_layer = [&](IntVector v, std::size_t from) {
    for (std::size_t s = from; s < S; ++s) {
      if (new_orders[s] == 0 || (v[s] >= 0 && v[s] < new_orders[s]))
        continue;
      Integer c = floor_div(v[s], new_orders[s]);
      v[s] -= c * new_orders[s];
      for (std::size_t u = s + 1; u < S; ++u)
        v[u] += c * layer_power[s][u];
    }
    return v;
  };
  for (std::size_t s = S; s-- > 0;) {
    if (new_orders[s] == 0)
      continue;
    std::size_t t = survivor_tail[s];
    int pr = pivot_row[t];
    IntVector v(S);
    for (std::size_t q = t + 1; q < T; ++q)
      if (hf.H(pr, q) != 0)
        for (std::size_t u = 0; u < S; ++u)
          v[u] -= hf.H(pr, q) * expr[q][u];
    layer_power[s] = reduce_layer(v, s + 1);
  }
  auto layer_element = [&](int t) { return t >= 0 ? reduce_layer(expr[t], 0) : IntVector(S); };

  // Assemble the class k+1 presentation.
  std::vector<std::string> nnames = pc_.names();
  std::vector<Integer> norders = pc_.orders();
  std::vector<int> nweights = pc_.weights();
  for (std::size_t s = 0; s < S; ++s) {
    nnames.push_back("g" + std::to_string(n + s + 1));
    norders.push_back(new_orders[s]);
    nweights.push_back(k + 1);
  }
  PcPresentation Q(nnames, norders, nweights);
  auto extend = [&](const PcElement &old, int tail) {
    PcElement v = old;
    v.resize(n + S);
    IntVector lv = layer_element(tail);
    for (std::size_t s = 0; s < S; ++s)
      v[n + s] = lv[s];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (pc_.order(i) != 0)
      Q.set_power(i, extend(pc_.power_rhs(i), power_tail[i]));
    for (std::size_t j = i + 1; j < n; ++j)
      Q.set_conjugate(j, i, extend(pc_.conjugate_rhs(j, i), conj_tail[j][i]));
  }
  for (std::size_t s = 0; s < S; ++s)
    if (new_orders[s] != 0) {
      PcElement v(n + S);
      for (std::size_t u = 0; u < S; ++u)
        v[n + u] = layer_power[s][u];
      Q.set_power(n + s, std::move(v));
    }
  Q.finalize();

  std::vector<PcElement> nimages;
  for (int x = 0; x < ngens; ++x)
    nimages.push_back(extend(images_[x], image_tail[x]));

  for (std::size_t s = 0; s < S; ++s) {
    const PcDefinition &d = tails[survivor_tail[s]];
    FreeWord pre;
    if (d.kind == PcDefinition::Kind::image) {
      pre = preimage_word(images_[d.a]).inverse() * FreeWord::generator(d.a);
    } else if (d.kind == PcDefinition::Kind::power) {
      pre = preimage_word(pc_.power_rhs(d.a)).inverse() *
            preimages_[d.a].pow(to_ll(pc_.order(d.a)));
    } else {
      const FreeWord &gj = preimages_[d.a], &gi = preimages_[d.b];
      pre = preimage_word(pc_.conjugate_rhs(d.a, d.b)).inverse() * gi.inverse() * gj * gi;
    }
    preimages_.push_back(std::move(pre));
    definitions_.push_back(d);
  }
  pc_ = std::move(Q);
  images_ = std::move(nimages);
  return true;
}

// Lower central quotient P / gamma_{c+1}(P).
inline NilpotentQuotient nilpotent_quotient(const FpPresentation &p, int c) {
  if (c < 0)
    throw InputError("nilpotency class must be non-negative");
  NilpotentQuotient q;
  q.source_ = p;
  q.requested_class_ = c;
  q.images_.assign(p.rank(), PcElement());
  for (int k = 0; k < c; ++k)
    if (!q.step(k)) {
      q.stabilized_ = true;
      break;
    }
  return q;
}

} // namespace hinv
