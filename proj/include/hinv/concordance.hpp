#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hinv/extendable.hpp"

namespace hinv {

// Algebraic data of a concordance exterior V between K and J: the group of V
// over G, the two inclusions, the meridian images and generators of the
// boundary images of E_J and of V. The boundary lists are taken on trust.
struct ConcordanceCertificate {
  KnotPtr K, J;
  OverGStructure V;
  FpHom incl_K, incl_J;
  FreeWord mu_K_image, mu_J_image;
  std::vector<FreeWord> boundary_J, boundary_V;
  QuotientCache cache;

  ConcordanceCertificate(KnotPtr k, KnotPtr j, OverGStructure v, FpHom ik, FpHom ij, FreeWord mk,
                         FreeWord mj, std::vector<FreeWord> bj, std::vector<FreeWord> bv)
      : K(std::move(k)), J(std::move(j)), V(std::move(v)), incl_K(std::move(ik)),
        incl_J(std::move(ij)), mu_K_image(std::move(mk)), mu_J_image(std::move(mj)),
        boundary_J(std::move(bj)), boundary_V(std::move(bv)) {
    for (auto [f, L, name] : {std::tuple{&incl_K, K.get(), "K"}, std::tuple{&incl_J, J.get(), "J"}}) {
      OverGReport r = verify_over_G(*f, L->over_g(), V);
      if (!r.ok)
        throw InputError(std::string("inclusion of ") + name + " is not over G: " + r.detail);
    }
    const int r = V.pi().rank();
    auto check = [&](const FreeWord &w) {
      if (w.max_generator() >= r)
        throw InputError("certificate word uses an undeclared generator of pi_V");
    };
    check(mu_K_image);
    check(mu_J_image);
    for (const auto *l : {&boundary_J, &boundary_V})
      for (const FreeWord &w : *l)
        check(w);
  }

  std::shared_ptr<const RelativeQuotient> quotient(int n) const { return cache.get(V, n); }
};

// The certificate of the product J x I: pi_V = pi_J with identity inclusions.
inline ConcordanceCertificate product_certificate(KnotPtr J) {
  FpHom id = identity_hom(J->pi());
  return ConcordanceCertificate(J, J, J->over_g(), id, id, J->mu(), J->mu(), J->peripheral(),
                                J->peripheral());
}

struct ConcordanceReport {
  int level = 0;
  bool based = false;
  Verdict boundary = Verdict::fail;
  Verdict meridian = Verdict::pass; // only checked when based
  std::vector<std::string> assumptions;
  std::string detail;

  bool pass() const { return boundary == Verdict::pass && meridian == Verdict::pass; }
};

inline ConcordanceReport check_n_concordance(const ConcordanceCertificate &c, int n, bool based) {
  auto Q = c.quotient(n);
  ConcordanceReport rep;
  rep.level = n;
  rep.based = based;
  rep.assumptions.push_back("boundary generator lists generate the peripheral images");
  rep.boundary =
      verdict(same_subgroup(*Q, project_all(*Q, c.boundary_J), project_all(*Q, c.boundary_V)));
  if (rep.boundary == Verdict::fail)
    rep.detail = "image of the boundary of E_J differs from the image of the boundary of V";
  if (based) {
    rep.meridian = verdict(Q->project(c.mu_K_image) == Q->project(c.mu_J_image));
    if (rep.meridian == Verdict::fail && rep.detail.empty())
      rep.detail = "meridians of K and J differ in pi_V at level " + std::to_string(n);
  }
  return rep;
}

struct ConcordanceIsoReport {
  IsoReport K, J;
  bool pass() const { return K.isomorphism() && J.isomorphism(); }
};

// The inclusions induce pi_L / Gamma_{j+1} -> pi_V / Gamma_{j+1}; both should
// be isomorphisms over G.
inline ConcordanceIsoReport quotient_iso_from_concordance(const ConcordanceCertificate &c, int j) {
  if (j < 1)
    throw InputError("level must be at least 1");
  auto QV = c.quotient(j + 1);
  return {is_isomorphism_over_G(induced_quotient_hom(c.incl_K, QV), *c.K->quotient(j + 1)),
          is_isomorphism_over_G(induced_quotient_hom(c.incl_J, QV), *c.J->quotient(j + 1))};
}

struct ExtractionResult {
  ExtendableMapCandidate candidate;
  bool restriction_ok = false; // F o incl_J agrees with the projection of pi_J
};

// tau = (incl_J)_*^-1 o q o incl_K at level j, with (incl_J)_* inverted by
// sifting in pi_V / Gamma_j.
inline ExtractionResult extendable_from_concordance(const ConcordanceCertificate &c, int j) {
  auto QV = c.quotient(j);
  auto QJ = c.J->quotient(j);
  const int rJ = c.J->pi().rank();
  std::vector<QuotientSubgroup<WordShadow>::Generator> gens;
  for (int y = 0; y < rJ; ++y)
    gens.push_back({QV->project(c.incl_J.image(y)), FreeWord::generator(y)});
  QuotientSubgroup<WordShadow> H(*QV, gens);
  auto pull = [&](const FreeWord &v) {
    auto w = H.preimage(QV->project(v));
    if (!w)
      throw InputError("inclusion of J is not onto pi_V at level " + std::to_string(j));
    return QJ->project(*w);
  };
  std::vector<RqElement> imgs;
  for (const FreeWord &x : c.incl_K.images())
    imgs.push_back(pull(x));
  ExtractionResult res{make_candidate(c.K, c.J, j, std::move(imgs)), true};
  for (int y = 0; y < rJ && res.restriction_ok; ++y)
    res.restriction_ok = pull(c.incl_J.image(y)) == QJ->generator_images()[y];
  return res;
}

struct CertificateRebase {
  Verdict verdict = Verdict::undecided;
  std::optional<RqElement> conjugator;
  std::optional<ConcordanceCertificate> amended; // incl_K and mu_K conjugated
  bool exhaustive = false;
  std::size_t examined = 0;
};

// Looks for z in pi_V / Gamma_n with z^-1 mu_K z = mu_J. Only z over the
// centre of G are tried, so that the conjugated inclusion of K stays over G.
inline CertificateRebase rebase_certificate(const ConcordanceCertificate &c, int n,
                                            long long bound = 2, std::size_t limit = 200000) {
  auto Q = c.quotient(n);
  const PcPresentation &pc = Q->nilpotent_part();
  RqElement mk = Q->project(c.mu_K_image), mj = Q->project(c.mu_J_image);
  CertificateRebase res;
  res.exhaustive = true;
  std::vector<std::vector<Integer>> ranges;
  for (std::size_t d = 0; d < pc.size(); ++d) {
    if (pc.order(d) > 0) {
      std::vector<Integer> v;
      for (Integer a = 0; a < pc.order(d); ++a)
        v.push_back(a);
      ranges.push_back(std::move(v));
    } else {
      ranges.push_back(detail::signed_range(bound));
      res.exhaustive = false;
    }
  }
  Integer space = Q->G().order();
  for (const auto &v : ranges)
    space *= v.size();
  if (space > limit) {
    res.exhaustive = false;
    return res;
  }
  const AmbientGroup &G = Q->G();
  std::vector<bool> central(G.order(), true);
  for (int t = 0; t < G.order(); ++t)
    for (int u = 0; u < G.order() && central[t]; ++u)
      central[t] = G.multiply(G.from_index(t), G.from_index(u)) ==
                   G.multiply(G.from_index(u), G.from_index(t));
  detail::for_each_element(*Q, ranges, [&](const RqElement &z) {
    if (!central[z.g])
      return false;
    ++res.examined;
    if (!(Q->conjugate(mk, z) == mj))
      return false;
    res.conjugator = z;
    return true;
  });
  if (!res.conjugator) {
    res.verdict = res.exhaustive ? Verdict::fail : Verdict::undecided;
    return res;
  }
  res.verdict = Verdict::pass;
  FreeWord w = Q->lift(*res.conjugator);
  std::vector<FreeWord> imgs;
  for (const FreeWord &x : c.incl_K.images())
    imgs.push_back(conjugate(x, w));
  res.amended.emplace(c.K, c.J, c.V, FpHom(c.incl_K.domain(), c.incl_K.codomain_ptr(), imgs),
                      c.incl_J, conjugate(c.mu_K_image, w), c.mu_J_image, c.boundary_J,
                      c.boundary_V);
  return res;
}

} // namespace hinv
