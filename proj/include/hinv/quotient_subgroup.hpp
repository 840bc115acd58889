#pragma once

#include <optional>
#include <vector>

#include "hinv/pc_subgroup.hpp"
#include "hinv/relative_quotient.hpp"

namespace hinv {

// Subgroup of pi / Gamma_n generated by a list of elements. The G level is an
// orbit with a Schreier tree; the intersection with the nilpotent part is
// generated by the Schreier generators u_t h u_{th}^-1 and kept as an induced
// pc sequence. Every element carries a shadow (for example a source word) so
// membership tests also return preimages.
template <class ShadowGroup = NoShadow>
class QuotientSubgroup {
public:
  using Shadow = typename ShadowGroup::Element;
  using Element = RqElement;

  struct Generator {
    Element elem;
    Shadow shadow;
  };

  QuotientSubgroup(const RelativeQuotient &q, std::vector<Generator> gens, ShadowGroup sg = {})
      : q_(&q), sg_(sg), nil_(q.nilpotent_part(), sg) {
    const int m = q.G().order();
    reps_.assign(m, std::nullopt);
    reps_[q.identity().g] = Generator{q.identity(), sg_.identity()};
    orbit_.push_back(q.identity().g);
    for (std::size_t k = 0; k < orbit_.size(); ++k) {
      Generator u = *reps_[orbit_[k]];
      for (const Generator &h : gens) {
        Generator v = mul(u, h);
        if (!reps_[v.elem.g]) {
          reps_[v.elem.g] = v;
          orbit_.push_back(v.elem.g);
        }
      }
    }
    for (int t : orbit_)
      for (const Generator &h : gens) {
        Generator v = mul(*reps_[t], h);
        Generator s = mul(v, inv(*reps_[v.elem.g]));
        check_internal(s.elem.g == q.identity().g, "Schreier generator outside the nilpotent part");
        nil_.add_generator(s.elem.nil, s.shadow);
      }
    nil_.close();
  }

  // G indices reached by the subgroup.
  const std::vector<int> &orbit() const { return orbit_; }
  bool covers_G() const { return static_cast<int>(orbit_.size()) == q_->G().order(); }

  std::optional<Shadow> preimage(const Element &a) const {
    if (!reps_.at(a.g))
      return std::nullopt;
    const Generator &u = *reps_[a.g];
    Element d = q_->multiply(a, q_->inverse(u.elem));
    auto s = nil_.preimage(d.nil);
    if (!s)
      return std::nullopt;
    return sg_.multiply(*s, u.shadow);
  }

  bool contains(const Element &a) const {
    if (!reps_.at(a.g))
      return false;
    Element d = q_->multiply(a, q_->inverse(reps_[a.g]->elem));
    return nil_.contains(d.nil);
  }

  // True when the subgroup is the whole quotient.
  bool is_everything() const {
    if (!covers_G())
      return false;
    const PcPresentation &pc = q_->nilpotent_part();
    for (std::size_t i = 0; i < pc.size(); ++i)
      if (!nil_.contains(pc.unit(i)))
        return false;
    return true;
  }

  // First pc generator of the nilpotent part that is missed, if any.
  std::optional<std::size_t> first_missing_nil_generator() const {
    const PcPresentation &pc = q_->nilpotent_part();
    for (std::size_t i = 0; i < pc.size(); ++i)
      if (!nil_.contains(pc.unit(i)))
        return i;
    return std::nullopt;
  }

  const PcSubgroup<ShadowGroup> &nilpotent_intersection() const { return nil_; }

private:
  Generator mul(const Generator &a, const Generator &b) const {
    return {q_->multiply(a.elem, b.elem), sg_.multiply(a.shadow, b.shadow)};
  }
  Generator inv(const Generator &a) const { return {q_->inverse(a.elem), sg_.inverse(a.shadow)}; }

  const RelativeQuotient *q_;
  ShadowGroup sg_;
  PcSubgroup<ShadowGroup> nil_;
  std::vector<std::optional<Generator>> reps_;
  std::vector<int> orbit_;
};

// Free-word shadows: preimages come back as words in some generating set.
struct WordShadow {
  using Element = FreeWord;
  Element identity() const { return {}; }
  Element multiply(const Element &a, const Element &b) const { return a * b; }
  Element inverse(const Element &a) const { return a.inverse(); }
  Element power(const Element &a, const Integer &n) const { return a.pow(to_ll(n)); }
};

} // namespace hinv
