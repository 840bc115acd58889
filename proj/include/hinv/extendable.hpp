#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hinv/isomorphism.hpp"
#include "hinv/knot.hpp"

namespace hinv {

// Group-level extendability: the meridian goes to mu_J, the peripheral
// subgroup goes onto dagger_n(H_J), and the map is over G. A map with these
// properties is based homotopic to one that also sends the boundary torus
// into T_n, which is the only spatial condition.
struct ExtendabilityReport {
  Verdict mu_condition = Verdict::fail;
  Verdict peripheral_condition = Verdict::fail;
  Verdict over_g_condition = Verdict::fail;
  bool peripheral_commute = true; // dagger_J(m), dagger_J(l) commute in the quotient
  std::vector<std::string> taints;
  std::string detail;

  bool pass() const {
    return mu_condition == Verdict::pass && peripheral_condition == Verdict::pass &&
           over_g_condition == Verdict::pass;
  }
};

inline bool same_subgroup(const RelativeQuotient &Q, const std::vector<RqElement> &a,
                          const std::vector<RqElement> &b) {
  auto gens = [](const std::vector<RqElement> &v) {
    std::vector<QuotientSubgroup<>::Generator> g;
    for (const RqElement &e : v)
      g.push_back({e, {}});
    return g;
  };
  QuotientSubgroup<> A(Q, gens(a)), B(Q, gens(b));
  return std::all_of(b.begin(), b.end(), [&](const RqElement &e) { return A.contains(e); }) &&
         std::all_of(a.begin(), a.end(), [&](const RqElement &e) { return B.contains(e); });
}

inline std::vector<RqElement> project_all(const RelativeQuotient &Q, const std::vector<FreeWord> &ws) {
  std::vector<RqElement> out;
  for (const FreeWord &w : ws)
    out.push_back(Q.project(w));
  return out;
}

inline std::vector<RqElement> apply_all(const QuotientHom &f, const std::vector<FreeWord> &ws) {
  std::vector<RqElement> out;
  for (const FreeWord &w : ws)
    out.push_back(f.apply(w));
  return out;
}

// Normal closure of the meridian in pi_J / Gamma_n; the quotient by it is the
// fundamental group of the n-th knot complex.
inline QuotientSubgroup<> meridian_closure(const RelativeQuotient &Q, const RqElement &mu) {
  std::vector<RqElement> gens{mu}, conj_by;
  for (const RqElement &s : Q.generator_images()) {
    conj_by.push_back(s);
    conj_by.push_back(Q.inverse(s));
  }
  auto build = [&] {
    std::vector<QuotientSubgroup<>::Generator> g;
    for (const RqElement &e : gens)
      g.push_back({e, {}});
    return QuotientSubgroup<>(Q, g);
  };
  QuotientSubgroup<> N = build();
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = gens.size();
    for (std::size_t a = 0; a < count; ++a)
      for (const RqElement &s : conj_by) {
        RqElement c = Q.conjugate(gens[a], s);
        if (!N.contains(c)) {
          gens.push_back(c);
          N = build();
          grew = true;
        }
      }
  }
  return N;
}

// Ker(gamma_K) is the normal closure of mu_K, as for a knot in a manifold
// with fundamental group G; decided in pi_K / Gamma_n.
inline bool meridian_normally_generates_kernel(const KnotData &K, int n) {
  return K.cache().property("meridian-generates-kernel", n, [&] {
    auto Q = K.quotient(n);
    RqElement mu = Q->project(K.mu());
    if (mu.g != Q->identity().g)
      return false;
    QuotientSubgroup<> N = meridian_closure(*Q, mu);
    const PcPresentation &pc = Q->nilpotent_part();
    for (std::size_t d = 0; d < pc.size(); ++d)
      if (!N.contains(Q->from_nil(pc.unit(d))))
        return false;
    return true;
  });
}

inline ExtendabilityReport check_extendable(const KnotData &K, const KnotData &J, int n,
                                            const QuotientHom &tau) {
  require_same_G(K.G(), J.G());
  const RelativeQuotient &Q = tau.codomain();
  if (Q.level() != n)
    throw StructuralError("map lands in level " + std::to_string(Q.level()) + ", not " +
                          std::to_string(n));
  if (!(tau.domain() == K.pi()))
    throw StructuralError("map is not defined on the group of " + K.name());
  ExtendabilityReport rep;
  if (!tau.verified()) {
    rep.taints = tau.taints();
    rep.detail = "map is not a homomorphism";
    return rep;
  }
  rep.mu_condition = verdict(tau.apply(K.mu()) == Q.project(J.mu()));
  auto pJ = project_all(Q, J.peripheral());
  rep.peripheral_condition = verdict(same_subgroup(Q, apply_all(tau, K.peripheral()), pJ));
  rep.peripheral_commute = Q.multiply(pJ[0], pJ[1]) == Q.multiply(pJ[1], pJ[0]);
  if (!rep.peripheral_commute)
    rep.taints.push_back("peripheral images of " + J.name() + " do not commute at level " +
                         std::to_string(n));
  bool over = true;
  for (int i = 0; i < K.pi().rank() && over; ++i)
    if (tau.image(i).g != K.G().index(K.over_g().gamma().image(i))) {
      over = false;
      rep.detail = "generator " + K.pi().names()[i] + " changes its image in G";
    }
  rep.over_g_condition = verdict(over);
  if (!meridian_normally_generates_kernel(K, n))
    rep.taints.push_back("meridian of " + K.name() +
                         " does not normally generate Ker(gamma) at level " + std::to_string(n) +
                         ": not the exterior of a knot, quotient isomorphisms are not implied");
  if (rep.mu_condition == Verdict::fail)
    rep.detail = "meridian of " + K.name() + " does not go to the meridian of " + J.name();
  else if (rep.peripheral_condition == Verdict::fail)
    rep.detail = "peripheral subgroup is not carried onto the peripheral subgroup of " + J.name();
  return rep;
}

struct ExtendableMapCandidate {
  KnotPtr source, target;
  int level = 0;
  std::shared_ptr<const RelativeQuotient> quotient;
  QuotientHom tau;
  ExtendabilityReport report;

  bool pass() const { return report.pass(); }

  std::vector<std::string> image_strings() const {
    std::vector<std::string> s;
    for (const RqElement &e : tau.images())
      s.push_back(quotient->element_string(e));
    return s;
  }
};

inline ExtendableMapCandidate make_candidate(KnotPtr K, KnotPtr J, int n,
                                             std::vector<RqElement> images) {
  auto Q = J->quotient(n);
  QuotientHom tau(K->pi(), Q, std::move(images));
  ExtendabilityReport rep = check_extendable(*K, *J, n, tau);
  return {std::move(K), std::move(J), n, std::move(Q), std::move(tau), std::move(rep)};
}

// tau_n: the quotient map pi_J -> pi_J / Gamma_n.
inline ExtendableMapCandidate canonical_tau(KnotPtr J, int n) {
  auto Q = J->quotient(n);
  return make_candidate(J, J, n, Q->generator_images());
}

inline bool same_map(const ExtendableMapCandidate &a, const ExtendableMapCandidate &b) {
  return a.level == b.level && a.tau.images() == b.tau.images();
}

struct SearchResult {
  std::vector<ExtendableMapCandidate> candidates;
  bool exhaustive = false;
  Verdict verdict = Verdict::undecided;
  std::size_t examined = 0;
  std::string note;
};

namespace detail {

// Values in increasing absolute value: 0, 1, -1, 2, -2, ...
inline std::vector<Integer> signed_range(long long bound) {
  std::vector<Integer> v{0};
  for (long long k = 1; k <= bound; ++k) {
    v.push_back(k);
    v.push_back(-k);
  }
  return v;
}

inline long long max_abs_free(const std::vector<RqElement> &imgs, const PcPresentation &pc) {
  long long m = 0;
  for (const RqElement &e : imgs)
    for (std::size_t d = 0; d < e.nil.size(); ++d)
      if (pc.order(d) == 0)
        m = std::max(m, to_ll(abs(e.nil[d])));
  return m;
}

// Visits (t, y) for every t in G and y with y[d] in ranges[d], G part
// outermost (identity first) and depth 0 fastest, until visit returns true.
template <class Visit>
bool for_each_element(const RelativeQuotient &Q, const std::vector<std::vector<Integer>> &ranges,
                      Visit visit) {
  const std::size_t k = ranges.size();
  std::vector<std::size_t> pos(k);
  const int e = Q.identity().g;
  std::vector<int> ts{e};
  for (int t = 0; t < Q.G().order(); ++t)
    if (t != e)
      ts.push_back(t);
  for (int t : ts) {
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      RqElement z{t, PcElement(k)};
      for (std::size_t d = 0; d < k; ++d)
        z.nil[d] = ranges[d][pos[d]];
      if (visit(z))
        return true;
      std::size_t d = 0;
      for (; d < k; ++d) {
        if (++pos[d] < ranges[d].size())
          break;
        pos[d] = 0;
      }
      if (d == k)
        break;
    }
  }
  return false;
}

} // namespace detail

// Enumerates maps pi_K -> pi_J / Gamma_n over G whose nilpotent coordinates on
// each generator are bounded by `bound` in the free directions and range over
// all residues in the torsion directions. Output is sorted by the largest free
// coordinate, then by enumeration order.
inline SearchResult search_extendable(KnotPtr K, KnotPtr J, int n, long long bound,
                                      std::size_t limit = 200000) {
  require_same_G(K->G(), J->G());
  if (!J->G().is_finite())
    throw UnsupportedError("search needs a finite G");
  if (bound < 0)
    throw InputError("search bound must be nonnegative");
  auto Q = J->quotient(n);
  const PcPresentation &pc = Q->nilpotent_part();
  const int r = K->pi().rank();
  const std::size_t k = pc.size();
  std::vector<std::vector<Integer>> ranges;
  for (int i = 0; i < r; ++i)
    for (std::size_t d = 0; d < k; ++d) {
      if (pc.order(d) == 0)
        ranges.push_back(detail::signed_range(bound));
      else {
        std::vector<Integer> v;
        for (Integer a = 0; a < pc.order(d); ++a)
          v.push_back(a);
        ranges.push_back(std::move(v));
      }
    }
  SearchResult res;
  res.exhaustive = pc.hirsch_length() == 0;
  Integer space = 1;
  for (const auto &v : ranges)
    space *= v.size();
  if (space > limit) {
    res.verdict = Verdict::undecided;
    res.exhaustive = false;
    res.note = "search space of " + space.str() + " assignments exceeds the limit of " +
               std::to_string(limit);
    return res;
  }
  std::vector<int> gpart(r);
  for (int i = 0; i < r; ++i)
    gpart[i] = K->G().index(K->over_g().gamma().image(i));
  // Torsion coordinates vary fastest.
  std::vector<std::size_t> order(ranges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t p) { return pc.order(p % k) != 0; });
  std::vector<std::size_t> pos(ranges.size(), 0);
  while (true) {
    ++res.examined;
    std::vector<RqElement> imgs(r);
    for (int i = 0; i < r; ++i) {
      imgs[i].g = gpart[i];
      imgs[i].nil.resize(k);
      for (std::size_t d = 0; d < k; ++d)
        imgs[i].nil[d] = ranges[i * k + d][pos[i * k + d]];
    }
    QuotientHom tau(K->pi(), Q, imgs);
    if (tau.verified()) {
      ExtendabilityReport rep = check_extendable(*K, *J, n, tau);
      if (rep.pass())
        res.candidates.push_back({K, J, n, Q, std::move(tau), std::move(rep)});
    }
    std::size_t a = 0;
    for (; a < order.size(); ++a) {
      std::size_t p = order[a];
      if (++pos[p] < ranges[p].size())
        break;
      pos[p] = 0;
    }
    if (a == order.size())
      break;
  }
  std::stable_sort(res.candidates.begin(), res.candidates.end(),
                   [&](const ExtendableMapCandidate &x, const ExtendableMapCandidate &y) {
                     return detail::max_abs_free(x.tau.images(), pc) <
                            detail::max_abs_free(y.tau.images(), pc);
                   });
  if (!res.candidates.empty())
    res.verdict = Verdict::pass;
  else
    res.verdict = res.exhaustive ? Verdict::fail : Verdict::undecided;
  return res;
}

// The same map followed by pi_J / Gamma_{n} -> pi_J / Gamma_{m}, m <= n.
inline std::vector<RqElement> truncate_images(const ExtendableMapCandidate &c,
                                              const RelativeQuotient &lower) {
  std::vector<RqElement> out;
  for (const RqElement &e : c.tau.images())
    out.push_back(c.quotient->truncate_element(e, lower));
  return out;
}

inline ExtendableMapCandidate tower_project(const ExtendableMapCandidate &c) {
  if (c.level < 2)
    throw InputError("cannot project below level 1");
  auto lower = c.target->quotient(c.level - 1);
  return make_candidate(c.source, c.target, c.level - 1, truncate_images(c, *lower));
}

struct QuotientIsoReport {
  int level = 0; // j + 1
  IsoReport iso;
  Verdict mu_condition = Verdict::fail;
  Verdict peripheral_condition = Verdict::fail;
  std::vector<std::string> taints;

  bool pass() const {
    return iso.isomorphism() && mu_condition == Verdict::pass &&
           peripheral_condition == Verdict::pass;
  }
};

// The map pi_K / Gamma_{j+1} -> pi_J / Gamma_{j+1} induced by a candidate, j < n.
inline QuotientIsoReport induced_quotient_iso(const ExtendableMapCandidate &c, int j) {
  if (j < 1 || j >= c.level)
    throw InputError("induced quotient level must satisfy 1 <= j < n");
  QuotientIsoReport rep;
  rep.level = j + 1;
  if (!c.pass())
    rep.taints.push_back("candidate does not pass the extendability check");
  auto QK = c.source->quotient(j + 1);
  auto QJ = c.target->quotient(j + 1);
  QuotientHom f(c.source->pi(), QJ, truncate_images(c, *QJ));
  rep.iso = is_isomorphism_over_G(f, *QK);
  rep.mu_condition = verdict(f.apply(c.source->mu()) == QJ->project(c.target->mu()));
  rep.peripheral_condition = verdict(same_subgroup(*QJ, apply_all(f, c.source->peripheral()),
                                                   project_all(*QJ, c.target->peripheral())));
  return rep;
}

struct RebaseResult {
  ExtendableMapCandidate candidate;
  RqElement conjugator; // tau(a)
  bool obstruction = false;
  std::string detail;
};

// Post-composes tau with conjugation y -> tau(a)^-1 y tau(a).
inline RebaseResult rebase(const KnotData &K, const FreeWord &a, const ExtendableMapCandidate &c) {
  if (!(K.pi() == c.source->pi()))
    throw StructuralError("rebasing word belongs to another knot group");
  if (a.max_generator() >= K.pi().rank())
    throw InputError("rebasing word uses an undeclared generator");
  const RelativeQuotient &Q = *c.quotient;
  RqElement z = c.tau.apply(a);
  std::vector<RqElement> imgs;
  for (const RqElement &e : c.tau.images())
    imgs.push_back(Q.conjugate(e, z));
  RebaseResult res{make_candidate(c.source, c.target, c.level, std::move(imgs)), z, false, {}};
  RqElement mu = Q.project(c.target->mu());
  if (!(Q.conjugate(mu, z) == mu)) {
    res.obstruction = true;
    res.detail = "tau(a) = " + Q.element_string(z) + " does not centralize the meridian";
  }
  return res;
}

struct AutomorphismReport {
  std::optional<QuotientHom> p; // on generators of pi_J, landing in pi_J / Gamma_n
  bool inverted = false;
  Verdict fixes_mu = Verdict::fail;
  Verdict preserves_peripheral = Verdict::fail;
  Verdict over_g = Verdict::fail;
  Verdict bijective = Verdict::fail;
  bool identity = false;
  std::string detail;

  bool member() const {
    return inverted && fixes_mu == Verdict::pass && preserves_peripheral == Verdict::pass &&
           over_g == Verdict::pass && bijective == Verdict::pass;
  }
};

// Checks that p (given on the generators of pi_J) is an automorphism of the
// boundary condition over G.
inline AutomorphismReport check_automorphism(QuotientHom p, const KnotData &J) {
  const RelativeQuotient &Q = p.codomain();
  AutomorphismReport rep;
  rep.inverted = true;
  if (!p.verified()) {
    rep.detail = "p is not a homomorphism";
    rep.p = std::move(p);
    return rep;
  }
  rep.fixes_mu = verdict(p.apply(J.mu()) == Q.project(J.mu()));
  rep.preserves_peripheral = verdict(
      same_subgroup(Q, apply_all(p, J.peripheral()), project_all(Q, J.peripheral())));
  bool over = true, id = true;
  for (int i = 0; i < J.pi().rank(); ++i) {
    over &= p.image(i).g == Q.generator_images()[i].g;
    id &= p.image(i) == Q.generator_images()[i];
  }
  rep.over_g = verdict(over);
  rep.identity = id;
  IsoReport iso = is_isomorphism_over_G(p, Q);
  rep.bijective = verdict(iso.isomorphism());
  if (!iso.isomorphism())
    rep.detail = iso.detail;
  rep.p = std::move(p);
  return rep;
}

// p := g_* o f_*^-1 for two candidates f, g with the same source and target.
inline AutomorphismReport bc_automorphism_from_pair(const ExtendableMapCandidate &c1,
                                                    const ExtendableMapCandidate &c2) {
  if (c1.level != c2.level || !(c1.source->pi() == c2.source->pi()) ||
      !(c1.target->pi() == c2.target->pi()))
    throw StructuralError("candidates differ in level, source or target");
  const KnotData &J = *c1.target;
  const RelativeQuotient &Q = *c1.quotient;
  std::vector<QuotientSubgroup<WordShadow>::Generator> gens;
  for (int i = 0; i < c1.source->pi().rank(); ++i)
    gens.push_back({c1.tau.image(i), FreeWord::generator(i)});
  QuotientSubgroup<WordShadow> H(Q, gens);
  std::vector<RqElement> imgs;
  for (int x = 0; x < J.pi().rank(); ++x) {
    auto w = H.preimage(Q.generator_images()[x]);
    if (!w) {
      AutomorphismReport rep;
      rep.detail = "first map is not onto: generator " + J.pi().names()[x] + " has no preimage";
      return rep;
    }
    imgs.push_back(c2.tau.apply(*w));
  }
  return check_automorphism(QuotientHom(J.pi(), c2.quotient, std::move(imgs)), J);
}

// q o p2 o p1 on generators.
inline QuotientHom compose_automorphisms(const QuotientHom &p1, const QuotientHom &p2) {
  const RelativeQuotient &Q = p1.codomain();
  std::vector<RqElement> imgs;
  for (const RqElement &e : p1.images())
    imgs.push_back(p2.apply(Q.lift(e)));
  return QuotientHom(p1.domain(), p1.codomain_ptr(), std::move(imgs));
}

inline std::string shadow_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "agree-up-to-conjugacy";
  case Verdict::fail:
    return "differ";
  case Verdict::undecided:
    return "undecided-at-bound";
  }
  return "?";
}

struct ShadowReport {
  Verdict verdict = Verdict::undecided;
  std::optional<RqElement> conjugator;
  bool exhaustive = false;
  std::size_t examined = 0;
  std::string detail;
};

// The map G -> Q / N induced by a candidate, as its values on the transversal
// words of the source; nullopt when Ker(gamma_K) does not land in N.
inline std::optional<std::vector<RqElement>> shadow_on_G(const ExtendableMapCandidate &c,
                                                         const QuotientSubgroup<> &N) {
  auto QK = c.source->quotient(1);
  for (const FreeWord &s : QK->kernel().schreier_generators)
    if (!N.contains(c.tau.apply(s)))
      return std::nullopt;
  std::vector<RqElement> out;
  for (const FreeWord &r : QK->transversal())
    out.push_back(c.tau.apply(r));
  return out;
}

// Are the two maps conjugate after passing to pi_J / (Gamma_n, mu_J)? Maps
// with the same source are compared on its generators; maps from different
// sources are compared on G, which needs both to factor through G.
inline ShadowReport pi1_shadow_compare(const ExtendableMapCandidate &c1,
                                       const ExtendableMapCandidate &c2, long long bound = 2,
                                       std::size_t limit = 200000) {
  if (c1.level != c2.level || !(c1.target->pi() == c2.target->pi()))
    throw StructuralError("shadow comparison needs the same level and target");
  require_same_G(c1.source->G(), c2.source->G());
  const RelativeQuotient &Q = *c1.quotient;
  RqElement mu = Q.project(c1.target->mu());
  QuotientSubgroup<> N = meridian_closure(Q, mu);
  std::vector<RqElement> A = c1.tau.images(), B = c2.tau.images();
  if (!(c1.source->pi() == c2.source->pi())) {
    auto a = shadow_on_G(c1, N), b = shadow_on_G(c2, N);
    if (!a || !b) {
      ShadowReport rep;
      rep.detail = "a map does not factor through G after killing the meridian";
      return rep;
    }
    A = std::move(*a);
    B = std::move(*b);
  }
  auto equal_mod_N = [&](const RqElement &a, const RqElement &b) {
    return N.contains(Q.multiply(a, Q.inverse(b)));
  };
  const PcPresentation &pc = Q.nilpotent_part();
  std::vector<Integer> lead = N.nilpotent_intersection().leading_exponents();
  ShadowReport rep;
  rep.exhaustive = true;
  std::vector<std::vector<Integer>> ranges;
  for (std::size_t d = 0; d < pc.size(); ++d) {
    std::vector<Integer> v;
    if (lead[d] > 0)
      for (Integer a = 0; a < lead[d]; ++a)
        v.push_back(a);
    else if (pc.order(d) > 0)
      for (Integer a = 0; a < pc.order(d); ++a)
        v.push_back(a);
    else {
      v = detail::signed_range(bound);
      rep.exhaustive = false;
    }
    ranges.push_back(std::move(v));
  }
  Integer space = Q.G().order();
  for (const auto &v : ranges)
    space *= v.size();
  if (space > limit) {
    rep.exhaustive = false;
    rep.detail = "conjugator search space exceeds the limit";
    return rep;
  }
  detail::for_each_element(Q, ranges, [&](const RqElement &z) {
    ++rep.examined;
    for (std::size_t i = 0; i < A.size(); ++i)
      if (!equal_mod_N(Q.conjugate(A[i], z), B[i]))
        return false;
    rep.verdict = Verdict::pass;
    rep.conjugator = z;
    return true;
  });
  if (rep.conjugator)
    return rep;
  rep.verdict = rep.exhaustive ? Verdict::fail : Verdict::undecided;
  return rep;
}

} // namespace hinv
