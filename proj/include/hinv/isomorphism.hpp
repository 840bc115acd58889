#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hinv/quotient_subgroup.hpp"

namespace hinv {

using QuotientHom = GroupHom<RelativeQuotient>;

struct IsoReport {
  bool homomorphism = false;
  bool over_G = false;
  bool invariants_match = false;
  bool surjective = false;
  std::string differing_invariant; // empty when the invariants match
  std::string detail;
  bool isomorphism() const { return homomorphism && over_G && invariants_match && surjective; }
};

// Compares Hirsch length and the layer invariants of two quotients; returns
// the name of the first invariant that differs.
inline std::string first_differing_invariant(const RelativeQuotient &a, const RelativeQuotient &b,
                                             std::string *detail = nullptr) {
  auto say = [&](const std::string &s) {
    if (detail)
      *detail = s;
  };
  if (a.G().order() != b.G().order()) {
    say("|G| " + std::to_string(a.G().order()) + " vs " + std::to_string(b.G().order()));
    return "G";
  }
  if (a.level() != b.level()) {
    say("level " + std::to_string(a.level()) + " vs " + std::to_string(b.level()));
    return "level";
  }
  if (a.hirsch_length() != b.hirsch_length()) {
    say("Hirsch length " + std::to_string(a.hirsch_length()) + " vs " +
        std::to_string(b.hirsch_length()));
    return "hirsch_length";
  }
  auto la = a.layers(), lb = b.layers();
  for (std::size_t w = 0; w < la.size(); ++w)
    if (!(la[w] == lb[w])) {
      say("layer " + std::to_string(w + 1) + ": " + la[w].to_string() + " vs " +
          lb[w].to_string());
      return "layer_" + std::to_string(w + 1);
    }
  return {};
}

// Decides whether f: pi_A -> Q_B induces an isomorphism Q_A -> Q_B over G.
// A map over G carries Gamma_1 into the nilpotent part of Q_B, so it kills
// Gamma_n and induces Q_A -> Q_B. If that map is onto, it is onto on every
// layer of the nilpotent parts; layers are finitely generated abelian groups,
// so equal invariants make each layer map injective, and then the whole map.
inline IsoReport is_isomorphism_over_G(const QuotientHom &f, const RelativeQuotient &QA) {
  const RelativeQuotient &QB = f.codomain();
  require_same_G(QA.G(), QB.G());
  if (QA.has_source() && !(f.domain() == QA.source().pi()))
    throw StructuralError("homomorphism domain differs from the source quotient");
  if (!QA.has_source() && !QA.G().is_trivial())
    throw StructuralError("source quotient has no presentation to compare against");

  IsoReport rep;
  rep.homomorphism = f.verified();
  if (!rep.homomorphism) {
    rep.detail = "relator " + std::to_string(f.failing_relator() + 1) +
                 " does not map to the identity";
    return rep;
  }
  rep.over_G = true;
  if (QA.has_source())
    for (int i = 0; i < f.domain().rank(); ++i)
      if (f.image(i).g != QA.generator_images()[i].g) {
        rep.over_G = false;
        rep.detail = "generator " + f.domain().names()[i] + " changes its image in G";
        return rep;
      }
  std::string d;
  rep.differing_invariant = first_differing_invariant(QA, QB, &d);
  rep.invariants_match = rep.differing_invariant.empty();
  if (!rep.invariants_match) {
    rep.detail = d;
    return rep;
  }
  std::vector<QuotientSubgroup<>::Generator> gens;
  for (const auto &e : f.images())
    gens.push_back({e, {}});
  QuotientSubgroup<> H(QB, gens);
  if (!H.covers_G()) {
    rep.detail = "image misses part of G";
    return rep;
  }
  if (auto miss = H.first_missing_nil_generator()) {
    rep.detail = "image misses " + QB.nilpotent_part().names()[*miss];
    return rep;
  }
  rep.surjective = true;
  return rep;
}

// The map pi_A -> Q_B induced by a map of presentations pi_A -> pi_B.
inline QuotientHom induced_quotient_hom(const FpHom &f, std::shared_ptr<const RelativeQuotient> QB) {
  std::vector<RqElement> imgs;
  for (const FreeWord &w : f.images())
    imgs.push_back(QB->project(w));
  return QuotientHom(f.domain(), std::move(QB), std::move(imgs));
}

} // namespace hinv
