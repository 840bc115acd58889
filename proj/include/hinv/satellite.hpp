#pragma once

#include <set>
#include <string>
#include <vector>

#include "hinv/extendable.hpp"

namespace hinv {

// Data for the satellite J(eta, L): the group of E_J - N(eta) with the
// peripheral words of eta and of J, the refilling map onto pi_J (which kills
// mu_eta), and a knot L in the 3-sphere with its meridian and longitude.
struct SatelliteInput {
  KnotPtr J;
  FpPresentation exterior;
  std::vector<FreeWord> refill; // exterior generator -> word in pi_J
  FreeWord mu_eta, lambda_eta;
  FreeWord mu_J, lambda_J; // in the exterior
  FpPresentation L;
  FreeWord mu_L, lambda_L;
};

inline FreeWord shift_generators(const FreeWord &w, int offset) {
  FreeWord out;
  for (const Letter &l : w.letters())
    out.push(l.gen + offset, l.exp);
  return out;
}

// The map pi_L -> Z sending mu_L to 1, as exponents on the generators of L.
inline std::vector<Integer> meridian_class(const FpPresentation &L, const FreeWord &mu_L) {
  const int k = L.rank();
  IntMatrix M(k, L.relators().size());
  for (std::size_t j = 0; j < L.relators().size(); ++j) {
    auto e = L.relators()[j].exponent_sums(k);
    for (int x = 0; x < k; ++x)
      M(x, j) = e[x];
  }
  IntMatrix ker = left_kernel(M);
  if (ker.rows() != 1)
    throw InputError("H_1 of L has rank " + std::to_string(ker.rows()) + ", not 1");
  std::vector<Integer> phi = ker.row_vector(0);
  auto e = mu_L.exponent_sums(k);
  Integer d = 0;
  for (int x = 0; x < k; ++x)
    d += e[x] * phi[x];
  if (abs(d) != 1)
    throw InputError("mu_L does not generate H_1 of L");
  for (Integer &v : phi)
    v *= d;
  return phi;
}

struct Amalgam {
  KnotPtr knot; // pi_{J(eta,L)} over G with meridian mu_J and longitude lambda_J
  int exterior_rank = 0;
  std::vector<Integer> l_class; // L generator -> exponent of mu_L
  std::size_t gluing_first = 0; // index of the first of the two gluing relators
};

// Generators of the exterior followed by those of L; relators of both, then
// mu_L lambda_eta and lambda_L mu_eta^-1. gamma on L comes from g.
inline Amalgam amalgam_presentation(const SatelliteInput &s) {
  const int rE = s.exterior.rank(), rL = s.L.rank();
  if (static_cast<int>(s.refill.size()) != rE)
    throw InputError("refill map needs one word per exterior generator");
  std::vector<std::string> names = s.exterior.names();
  std::set<std::string> seen(names.begin(), names.end());
  for (const std::string &n : s.L.names()) {
    if (!seen.insert(n).second)
      throw InputError("generator name " + n + " is used on both sides of the amalgam");
    names.push_back(n);
  }
  std::vector<FreeWord> rels = s.exterior.relators();
  for (const FreeWord &r : s.L.relators())
    rels.push_back(shift_generators(r, rE));
  Amalgam a;
  a.exterior_rank = rE;
  a.gluing_first = rels.size();
  rels.push_back(shift_generators(s.mu_L, rE) * s.lambda_eta);
  rels.push_back(shift_generators(s.lambda_L, rE) * s.mu_eta.inverse());
  a.l_class = meridian_class(s.L, s.mu_L);

  const OverGStructure &gJ = s.J->over_g();
  const AmbientGroup &G = gJ.G();
  std::vector<AmbientGroup::Element> gamma;
  for (const FreeWord &w : s.refill)
    gamma.push_back(gJ.gamma_of(w));
  auto le = gJ.gamma_of(substitute(s.lambda_eta, s.refill));
  for (int y = 0; y < rL; ++y)
    gamma.push_back(G.power(le, -a.l_class[y]));
  OverGStructure g(FpPresentation(names, rels), gJ.G_ptr(), gamma);
  a.knot = std::make_shared<const KnotData>(s.J->name() + "(eta,L)", std::move(g),
                                            BoundaryCondition(s.mu_J, s.lambda_J));
  return a;
}

struct CollapseReport {
  FpHom h;
  std::vector<int> levels;
  std::vector<int> surviving_relators; // indices of relators not dying at some level
  bool gluing_ok = false;
  bool mu_ok = false;
  bool over_g = false;

  bool pass() const { return surviving_relators.empty() && gluing_ok && mu_ok && over_g; }
};

// h: pi_{J(eta,L)} -> pi_J, the refill map on the exterior and
// pi_L -> Z -> pi_J, mu_L -> lambda_eta^-1, on L. Relators are checked in the
// relative quotients of J at the given levels.
inline CollapseReport satellite_collapse_hom(const SatelliteInput &s, const Amalgam &a,
                                             std::vector<int> levels) {
  std::vector<FreeWord> imgs = s.refill;
  FreeWord le = substitute(s.lambda_eta, s.refill);
  for (const Integer &e : a.l_class)
    imgs.push_back(le.pow(-to_ll(e)));
  const FpPresentation &P = a.knot->pi();
  CollapseReport rep{FpHom(P, std::make_shared<const FpPresentation>(s.J->pi()), imgs),
                     std::move(levels), {}};
  std::set<int> bad;
  rep.gluing_ok = true;
  rep.mu_ok = true;
  for (int n : rep.levels) {
    auto Q = s.J->quotient(n);
    for (std::size_t r = 0; r < P.relators().size(); ++r)
      if (!Q->is_identity(Q->project(rep.h.apply(P.relators()[r])))) {
        bad.insert(static_cast<int>(r));
        if (r >= a.gluing_first)
          rep.gluing_ok = false;
      }
    rep.mu_ok &= Q->project(rep.h.apply(a.knot->mu())) == Q->project(s.J->mu());
  }
  rep.surviving_relators.assign(bad.begin(), bad.end());
  rep.over_g = verify_over_G(rep.h, a.knot->over_g(), s.J->over_g()).ok;
  return rep;
}

struct CharacteristicReport {
  ExtendableMapCandidate candidate;
  ShadowReport shadow; // against canonical_tau(J, n)
  std::vector<std::string> assumptions;

  bool pass() const { return candidate.pass() && shadow.verdict == Verdict::pass; }
};

// tau = q_n o alpha for a map alpha: pi_K -> pi_J over G, compared with tau_n
// on the pi_1 shadow. The ambient manifold is assumed aspherical.
inline CharacteristicReport characteristic_to_extendable(const FpHom &alpha, KnotPtr K, KnotPtr J,
                                                         int n) {
  OverGReport og = verify_over_G(alpha, K->over_g(), J->over_g());
  if (!og.ok)
    throw InputError("characteristic map does not induce the identity on G: " + og.detail);
  auto Q = J->quotient(n);
  std::vector<RqElement> imgs;
  for (const FreeWord &w : alpha.images())
    imgs.push_back(Q->project(w));
  CharacteristicReport rep{make_candidate(K, J, n, std::move(imgs)), {}, {}};
  rep.shadow = pi1_shadow_compare(rep.candidate, canonical_tau(J, n));
  rep.assumptions.push_back("ambient manifold declared aspherical");
  if (!alpha.verified())
    rep.assumptions.push_back("alpha verified only through the level " + std::to_string(n) +
                              " quotient");
  return rep;
}

} // namespace hinv
