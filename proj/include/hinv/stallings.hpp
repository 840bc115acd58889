#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hinv/homology.hpp"
#include "hinv/isomorphism.hpp"
#include "hinv/knot.hpp"

namespace hinv {

// How the H_2 hypothesis is discharged: H_2(B; Z[G]) declared zero (the
// epimorphism is then automatic), or a polycyclic source mapping into a
// polycyclic model of B. Anything else is left undecided.
struct H2Hypothesis {
  std::string target_declared_trivial; // provenance
  std::optional<H2Source> source;
  std::optional<PcPresentation> target;

  static H2Hypothesis declared(std::string provenance) { return {std::move(provenance), {}, {}}; }
  static H2Hypothesis polycyclic(H2Source s, PcPresentation t) {
    return {{}, std::move(s), std::move(t)};
  }
};

struct StallingsReport {
  OverGReport over_g;
  H1MapReport h1;
  bool fingerprint_equal = false;
  Verdict h2 = Verdict::undecided;
  std::string h2_route;
  std::vector<std::string> assumptions;
  std::vector<std::pair<int, IsoReport>> levels; // (n, f_n)

  bool hypotheses() const { return over_g.ok && h1.isomorphism() && h2 == Verdict::pass; }
  bool conclusions() const {
    for (const auto &[n, r] : levels)
      if (!r.isomorphism())
        return false;
    return true;
  }
};

// If f induces an isomorphism on H_1(-; Z[G]) and an epimorphism on
// H_2(-; Z[G]), it induces isomorphisms A / Gamma_n -> B / Gamma_n for all n.
// The hypotheses are checked and the conclusion is verified independently at
// levels 2..max_level.
inline StallingsReport stallings_check(const FpHom &f, const OverGStructure &gA,
                                       const OverGStructure &gB, const H2Hypothesis &h2,
                                       int max_level) {
  StallingsReport rep;
  rep.over_g = verify_over_G(f, gA, gB);
  if (!f.verified())
    rep.assumptions.push_back("f could not be verified on the relators of A");
  rep.h1 = h1_induced_map(f, gA, gB);
  rep.fingerprint_equal = h1_fingerprint(gA) == h1_fingerprint(gB);
  if (!h2.target_declared_trivial.empty()) {
    rep.h2 = Verdict::pass;
    rep.h2_route = "target declared H_2-trivial";
    rep.assumptions.push_back("H_2(B; Z[G]) = 0: " + h2.target_declared_trivial);
  } else if (h2.source && h2.target) {
    rep.h2 = verdict(h2_epimorphism(*h2.source, *h2.target));
    rep.h2_route = "Hopf formula on polycyclic models";
    if (h2.source->is_declared())
      rep.assumptions.push_back("H_2 of the source declared trivial: " +
                                h2.source->declared_trivial);
  } else {
    rep.h2_route = "no H_2 data supplied";
  }
  for (int n = 2; n <= max_level; ++n) {
    auto QA = std::make_shared<const RelativeQuotient>(relative_quotient(gA, n));
    auto QB = std::make_shared<const RelativeQuotient>(relative_quotient(gB, n));
    rep.levels.emplace_back(n, is_isomorphism_over_G(induced_quotient_hom(f, QB), *QA));
  }
  return rep;
}

} // namespace hinv
