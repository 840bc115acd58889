#pragma once

#include <memory>
#include <vector>

#include "hinv/group_ring.hpp"
#include "hinv/over_g.hpp"

namespace hinv {

// Left Fox derivative: d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1.
inline FreeRingElement fox_derivative(const FreeWord &w, int x) {
  FreeRingElement r;
  FreeWord prefix;
  for (const Letter &l : w.letters()) {
    if (l.gen == x) {
      if (l.exp > 0)
        for (long long k = 0; k < l.exp; ++k)
          r.add(prefix * FreeWord::generator(x).pow(k), 1);
      else
        for (long long k = 1; k <= -l.exp; ++k)
          r.add(prefix * FreeWord::generator(x, -k), -1);
    }
    prefix.push(l.gen, l.exp);
  }
  return r;
}

// Cellular chains of the G-cover of the presentation complex, as left
// Z[G]-modules acting on row vectors: C2 -> C1 is v -> v d2 and C1 -> C0 is
// u -> u d1.
struct ChainComplexZG {
  std::shared_ptr<const AmbientGroup> G;
  std::vector<std::vector<GroupRingElement>> d2; // relators x generators
  std::vector<GroupRingElement> d1;              // gamma(x) - 1

  std::size_t num_generators() const { return d1.size(); }
  std::size_t num_relators() const { return d2.size(); }

  // Row r of d2 times d1; zero for every r by the fundamental identity.
  GroupRingElement boundary_of_boundary(std::size_t r) const {
    GroupRingElement s;
    for (std::size_t x = 0; x < d1.size(); ++x)
      s += group_multiply(*G, d2[r][x], d1[x]);
    return s;
  }
};

inline ChainComplexZG fox_jacobian(const OverGStructure &g) {
  ChainComplexZG c;
  c.G = g.G_ptr();
  const AmbientGroup &G = g.G();
  const int n = g.pi().rank();
  for (int x = 0; x < n; ++x) {
    GroupRingElement e = GroupRingElement::monomial(g.gamma().image(x));
    e.add(G.identity(), -1);
    c.d1.push_back(std::move(e));
  }
  for (const FreeWord &r : g.pi().relators()) {
    std::vector<GroupRingElement> row;
    for (int x = 0; x < n; ++x)
      row.push_back(push_forward(fox_derivative(r, x), g.gamma()));
    c.d2.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < c.d2.size(); ++r)
    check_internal(c.boundary_of_boundary(r).is_zero(), "Fox Jacobian fails d2 d1 = 0");
  return c;
}

// Integer matrices of d2 and d1 over the basis (generator, G element) of
// Z[G]^k, through the right regular representation.
struct ExpandedComplex {
  IntMatrix d2, d1;
  int order = 1;
};

inline ExpandedComplex expand_regular(const ChainComplexZG &c) {
  if (!c.G->is_finite())
    throw UnsupportedError("twisted homology needs a trivial or finite G (got " +
                           c.G->describe() + ")");
  const int m = c.G->order();
  const std::size_t n = c.num_generators(), r = c.num_relators();
  ExpandedComplex e;
  e.order = m;
  e.d2 = IntMatrix(r * m, n * m);
  e.d1 = IntMatrix(n * m, m);
  auto place = [&](IntMatrix &M, std::size_t bi, std::size_t bj, const IntMatrix &B) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        M(bi * m + a, bj * m + b) = B(a, b);
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x)
      place(e.d2, i, x, regular_representation(*c.G, c.d2[i][x]));
  for (std::size_t x = 0; x < n; ++x)
    place(e.d1, x, 0, regular_representation(*c.G, c.d1[x]));
  return e;
}

} // namespace hinv
