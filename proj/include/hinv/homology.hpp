#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hinv/fox.hpp"
#include "hinv/reidemeister_schreier.hpp"

namespace hinv {

// H_1(pi; Z[G]) = ker d1 / im d2 for finite G, with the lattice data kept so
// that induced maps and fingerprints can be computed.
struct TwistedH1 {
  ChainComplexZG complex;
  ExpandedComplex expanded;
  IntMatrix cycles; // basis rows of ker d1
  AbelianInvariants invariants;
};

inline TwistedH1 twisted_h1(const OverGStructure &g) {
  TwistedH1 h{fox_jacobian(g), {}, {}, {}};
  h.expanded = expand_regular(h.complex);
  h.cycles = left_kernel(h.expanded.d1);
  h.invariants = quotient_invariants(h.cycles, h.expanded.d2);
  return h;
}

inline AbelianInvariants h1_twisted(const OverGStructure &g) { return twisted_h1(g).invariants; }

// Abelianization of Ker(gamma) from its Reidemeister-Schreier presentation.
inline AbelianInvariants abelianization(const FpPresentation &p) {
  IntMatrix rel(0, p.rank());
  for (const FreeWord &r : p.relators()) {
    auto sums = r.exponent_sums(p.rank());
    rel.append_row(IntVector(sums.begin(), sums.end()));
  }
  return cokernel_invariants(rel);
}

inline AbelianInvariants h1_kernel_via_rs(const OverGStructure &g, ToddCoxeterOptions opts = {}) {
  return abelianization(kernel_presentation(g, opts).presentation);
}

// Abelian invariants of H_1 and of the coinvariants H_1 / (s - 1) H_1 for each
// s in G. Equal fingerprints do not by themselves make the modules isomorphic.
struct H1Fingerprint {
  AbelianInvariants h1;
  std::vector<AbelianInvariants> coinvariants; // indexed by G element

  friend bool operator==(const H1Fingerprint &, const H1Fingerprint &) = default;
};

inline H1Fingerprint h1_fingerprint(const TwistedH1 &h) {
  H1Fingerprint f{h.invariants, {}};
  const AmbientGroup &G = *h.complex.G;
  const int m = G.order();
  const std::size_t n = h.complex.num_generators();
  for (int s = 0; s < m; ++s) {
    IntMatrix L = left_translation(G, s);
    IntMatrix rel = h.expanded.d2;
    for (std::size_t r = 0; r < h.cycles.rows(); ++r) {
      IntVector v(n * m);
      for (std::size_t x = 0; x < n; ++x)
        for (int a = 0; a < m; ++a) {
          const Integer &c = h.cycles(r, x * m + a);
          if (c == 0)
            continue;
          for (int b = 0; b < m; ++b)
            v[x * m + b] += c * L(a, b);
          v[x * m + a] -= c;
        }
      rel.append_row(v);
    }
    f.coinvariants.push_back(quotient_invariants(h.cycles, rel));
  }
  return f;
}

inline H1Fingerprint h1_fingerprint(const OverGStructure &g) { return h1_fingerprint(twisted_h1(g)); }

// The map H_1(A; Z[G]) -> H_1(B; Z[G]) induced by f over G, through the chain
// map e_x -> sum_y gamma_B(d f(x) / d y) e_y.
struct H1MapReport {
  bool chain_map = false;    // commutes with d1
  bool well_defined = false; // boundaries go to boundaries
  bool surjective = false;
  bool invariants_equal = false;
  std::string detail;
  // Onto between finitely generated abelian groups with the same invariants
  // is bijective, and a bijective Z[G]-map is a module isomorphism.
  bool isomorphism() const { return chain_map && well_defined && surjective && invariants_equal; }
};

inline H1MapReport h1_induced_map(const FpHom &f, const OverGStructure &gA, const OverGStructure &gB) {
  require_same_G(gA.G(), gB.G());
  TwistedH1 hA = twisted_h1(gA), hB = twisted_h1(gB);
  const AmbientGroup &G = gB.G();
  const int m = G.order();
  const std::size_t nA = gA.pi().rank(), nB = gB.pi().rank();
  IntMatrix Phi(nA * m, nB * m);
  for (std::size_t x = 0; x < nA; ++x)
    for (std::size_t y = 0; y < nB; ++y) {
      IntMatrix R = regular_representation(
          G, push_forward(fox_derivative(f.image(static_cast<int>(x)), static_cast<int>(y)),
                          gB.gamma()));
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          Phi(x * m + a, y * m + b) = R(a, b);
    }
  H1MapReport rep;
  rep.chain_map = Phi * hB.expanded.d1 == hA.expanded.d1;
  if (!rep.chain_map) {
    rep.detail = "f is not over G on the chain level";
    return rep;
  }
  LatticeSolver boundariesB(hB.expanded.d2);
  IntMatrix img2 = hA.expanded.d2 * Phi;
  rep.well_defined = true;
  for (std::size_t r = 0; r < img2.rows() && rep.well_defined; ++r)
    rep.well_defined = boundariesB.contains(img2.row(r));
  if (!rep.well_defined) {
    rep.detail = "a relator of A does not map to a boundary of B";
    return rep;
  }
  IntMatrix span = hA.cycles * Phi;
  for (std::size_t r = 0; r < hB.expanded.d2.rows(); ++r)
    span.append_row(hB.expanded.d2.row(r));
  LatticeSolver image(span);
  rep.surjective = true;
  for (std::size_t r = 0; r < hB.cycles.rows() && rep.surjective; ++r)
    rep.surjective = image.contains(hB.cycles.row(r));
  rep.invariants_equal = hA.invariants == hB.invariants;
  if (!rep.surjective)
    rep.detail = "induced map on H_1 is not onto";
  else if (!rep.invariants_equal)
    rep.detail = "H_1 differs: " + hA.invariants.to_string() + " vs " + hB.invariants.to_string();
  return rep;
}

// ---------------------------------------------------------------------------
// H_2 of polycyclic groups by the Hopf formula. Every power and conjugate
// relation gets a free central tail; the consistency overlaps of the tails
// extension cut out R/[F,R] as Z^T / L, and H_2 is the part mapping to zero
// in F/[F,F].

struct SchurData {
  PcPresentation base;
  PcPresentation extension; // base generators followed by T tails
  std::size_t tails = 0;
  std::vector<FreeWord> relators; // relator t as a word in base generators
  IntMatrix relations;            // L, rows in Z^T
  IntMatrix cycles;               // rows spanning ker(Z^T -> Z^n); contains L
  AbelianInvariants h2;

  // Class in Z^T of a word in the base generators that is trivial in the base group.
  IntVector tail_vector(const FreeWord &w) const {
    PcElement e = extension.collect(w);
    const std::size_t n = base.size();
    for (std::size_t l = 0; l < n; ++l)
      if (e[l] != 0)
        throw InputError("word is not a relation of the polycyclic group");
    return IntVector(e.begin() + n, e.end());
  }
};

inline SchurData schur_data(const PcPresentation &p) {
  if (!p.is_consistent())
    throw InputError("H_2 needs a consistent pc presentation");
  const std::size_t n = p.size();
  SchurData s;
  s.base = p;
  std::vector<std::pair<int, int>> rel; // (j, i) conjugate, (i, -1) power
  for (std::size_t i = 0; i < n; ++i)
    if (p.order(i) != 0)
      rel.push_back({static_cast<int>(i), -1});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      rel.push_back({static_cast<int>(j), static_cast<int>(i)});
  const std::size_t T = rel.size();
  s.tails = T;

  std::vector<std::string> names = p.names();
  std::vector<Integer> orders = p.orders();
  std::vector<int> weights = p.weights();
  for (std::size_t t = 0; t < T; ++t) {
    names.push_back("t" + std::to_string(t + 1));
    orders.push_back(0);
    weights.push_back(p.max_weight() + 1);
  }
  PcPresentation E(names, orders, weights);
  IntMatrix psi(0, n);
  for (std::size_t t = 0; t < T; ++t) {
    auto [a, b] = rel[t];
    PcElement rhs = b < 0 ? p.power_rhs(a) : p.conjugate_rhs(a, b);
    PcElement ext = rhs;
    ext.resize(n + T);
    ext[n + t] = 1;
    IntVector ev(n);
    FreeWord lhs;
    if (b < 0) {
      E.set_power(a, ext);
      lhs = FreeWord::generator(a, to_ll(p.order(a)));
      ev[a] = p.order(a);
    } else {
      E.set_conjugate(a, b, ext);
      lhs = conjugate(FreeWord::generator(a), FreeWord::generator(b));
      ev[a] = 1;
    }
    for (std::size_t l = 0; l < n; ++l)
      ev[l] -= rhs[l];
    psi.append_row(ev);
    s.relators.push_back(lhs * p.to_word(rhs).inverse());
  }
  E.finalize();
  s.extension = E;

  s.relations = IntMatrix(0, T);
  for (const auto &f : E.consistency_failures()) {
    for (std::size_t l = 0; l < n; ++l)
      check_internal(f.lhs[l] == f.rhs[l], "tails extension disagrees in the base group");
    IntVector row(T);
    for (std::size_t t = 0; t < T; ++t)
      row[t] = f.lhs[n + t] - f.rhs[n + t];
    if (!is_zero(row))
      s.relations.append_row(row);
  }
  s.cycles = left_kernel(psi);
  s.h2 = quotient_invariants(s.cycles, s.relations);
  return s;
}

inline AbelianInvariants h2_pc_group(const PcPresentation &p) { return schur_data(p).h2; }

// A source for H_2 pushforwards: a polycyclic group with the images of its
// generators in the target, or a group whose H_2 the caller declares trivial.
struct H2Source {
  std::optional<PcPresentation> pc;
  std::vector<PcElement> images; // in the target, one per pc generator
  std::string declared_trivial;  // provenance when the source is declared H_2-trivial

  static H2Source polycyclic(PcPresentation p, std::vector<PcElement> imgs) {
    return {std::move(p), std::move(imgs), {}};
  }
  static H2Source declared(std::string provenance) {
    return {std::nullopt, {}, std::move(provenance)};
  }
  bool is_declared() const { return !pc.has_value(); }
};

// Rows spanning the image of H_2(source) in Z^T of the target (modulo L).
inline IntMatrix h2_image_rows(const H2Source &src, const SchurData &target) {
  IntMatrix out(0, target.tails);
  if (src.is_declared()) {
    if (src.declared_trivial.empty())
      throw InputError("H_2 source is neither polycyclic nor declared trivial");
    return out;
  }
  const SchurData s = schur_data(*src.pc);
  if (src.images.size() != src.pc->size())
    throw InputError("H_2 source needs one image per pc generator");
  std::vector<FreeWord> img;
  for (const PcElement &e : src.images)
    img.push_back(target.base.to_word(e));
  std::vector<IntVector> rel_image;
  for (const FreeWord &r : s.relators) {
    try {
      rel_image.push_back(target.tail_vector(substitute(r, img)));
    } catch (const InputError &) {
      throw InputError("map on the H_2 source is not a homomorphism");
    }
  }
  for (std::size_t c = 0; c < s.cycles.rows(); ++c) {
    IntVector v(target.tails);
    for (std::size_t t = 0; t < s.tails; ++t)
      if (s.cycles(c, t) != 0)
        for (std::size_t u = 0; u < target.tails; ++u)
          v[u] += s.cycles(c, t) * rel_image[t][u];
    out.append_row(v);
  }
  return out;
}

inline IntMatrix with_rows(IntMatrix a, const IntMatrix &b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    a.append_row(b.row(r));
  return a;
}

struct H2CompareReport {
  bool equal = false;
  std::vector<std::string> assumptions;
};

// Do the images of H_2 of the two sources agree inside H_2(target)?
inline H2CompareReport h2_image_compare(const H2Source &a, const H2Source &b,
                                        const PcPresentation &target) {
  SchurData t = schur_data(target);
  H2CompareReport rep;
  for (const H2Source *s : {&a, &b})
    if (s->is_declared())
      rep.assumptions.push_back("H_2 of a source declared trivial: " + s->declared_trivial);
  rep.equal = same_row_lattice(with_rows(h2_image_rows(a, t), t.relations),
                               with_rows(h2_image_rows(b, t), t.relations));
  return rep;
}

// Is H_2(source) -> H_2(target) onto?
inline bool h2_epimorphism(const H2Source &a, const PcPresentation &target) {
  SchurData t = schur_data(target);
  return same_row_lattice(with_rows(h2_image_rows(a, t), t.relations), t.cycles);
}

} // namespace hinv
