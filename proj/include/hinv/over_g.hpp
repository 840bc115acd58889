#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hinv/ambient_group.hpp"
#include "hinv/hom.hpp"

namespace hinv {

// A group pi with an epimorphism gamma onto G.
class OverGStructure {
public:
  using GElement = AmbientGroup::Element;

  OverGStructure(FpPresentation pi, std::shared_ptr<const AmbientGroup> G,
                 std::vector<GElement> images)
      : gamma_(std::move(pi), G, validated(*G, std::move(images))) {
    if (!gamma_.verified())
      throw InputError("gamma is not a homomorphism: relator " +
                       std::to_string(gamma_.failing_relator() + 1) +
                       " does not map to the identity of G");
    if (!gamma_.codomain().generates(gamma_.images()))
      throw InputError("gamma is not surjective onto G");
  }

  const FpPresentation &pi() const { return gamma_.domain(); }
  const AmbientGroup &G() const { return gamma_.codomain(); }
  const std::shared_ptr<const AmbientGroup> &G_ptr() const { return gamma_.codomain_ptr(); }
  const GroupHom<AmbientGroup> &gamma() const { return gamma_; }
  GElement gamma_of(const FreeWord &w) const { return gamma_.apply(w); }

private:
  static std::vector<GElement> validated(const AmbientGroup &G, std::vector<GElement> images) {
    for (const GElement &e : images) {
      const bool ok = G.is_finite()
                          ? e.size() == 1 && e[0] >= 0 && e[0] < G.order()
                          : e.size() == G.pc().size();
      if (!ok)
        throw InputError("gamma image is not an element of G");
    }
    return images;
  }

  GroupHom<AmbientGroup> gamma_;
};

inline bool kernel_membership(const FreeWord &w, const OverGStructure &g) {
  return g.G().is_identity(g.gamma_of(w));
}

inline void require_same_G(const AmbientGroup &a, const AmbientGroup &b) {
  if (!(a == b))
    throw StructuralError("the two structures are over different groups G");
}

struct OverGReport {
  bool ok = true;
  int first_mismatch = -1; // generator of the source where the triangle fails
  std::string detail;
};

// Does gamma_B o f = gamma_A hold on every generator of A?
inline OverGReport verify_over_G(const FpHom &f, const OverGStructure &gA,
                                 const OverGStructure &gB) {
  require_same_G(gA.G(), gB.G());
  if (!(f.domain() == gA.pi()))
    throw StructuralError("homomorphism domain differs from the source group");
  if (f.codomain().rank() != gB.pi().rank())
    throw StructuralError("homomorphism codomain differs from the target group");
  OverGReport rep;
  for (int i = 0; i < gA.pi().rank(); ++i) {
    auto lhs = gB.gamma_of(f.image(i));
    auto rhs = gA.gamma_of(FreeWord::generator(i));
    if (lhs != rhs) {
      rep.ok = false;
      rep.first_mismatch = i;
      rep.detail = "generator " + gA.pi().names()[i] + ": gamma_B(f(x)) = " + gA.G().label(lhs) +
                   " but gamma_A(x) = " + gA.G().label(rhs);
      return rep;
    }
  }
  return rep;
}

} // namespace hinv
