#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hinv/relative_quotient.hpp"

namespace hinv {

enum class Verdict { pass, fail, undecided };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::undecided:
    return "undecided-at-bound";
  }
  return "?";
}

inline Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

// Peripheral data (dagger, mu): images in pi of the basis (m, l) of a rank-2
// free abelian group H and the primitive class mu = a m + b l.
struct BoundaryCondition {
  FreeWord m_image;
  FreeWord l_image;
  Integer mu_m = 1, mu_l = 0;

  BoundaryCondition() = default;
  BoundaryCondition(FreeWord m, FreeWord l, Integer a = 1, Integer b = 0)
      : m_image(std::move(m)), l_image(std::move(l)), mu_m(std::move(a)), mu_l(std::move(b)) {
    if (gcd(mu_m, mu_l) != 1)
      throw InputError("meridian class (" + mu_m.str() + ", " + mu_l.str() +
                       ") is not primitive in H");
  }

  FreeWord mu_word() const { return m_image.pow(to_ll(mu_m)) * l_image.pow(to_ll(mu_l)); }

  friend bool operator==(const BoundaryCondition &, const BoundaryCondition &) = default;
};

// Relative quotients of one structure, built on first use and shared between
// copies of the owner.
class QuotientCache {
public:
  std::shared_ptr<const RelativeQuotient> get(const OverGStructure &g, int n) const {
    std::lock_guard<std::mutex> lock(state_->m);
    auto it = state_->q.find(n);
    if (it == state_->q.end())
      it = state_->q.emplace(n, std::make_shared<const RelativeQuotient>(relative_quotient(g, n)))
               .first;
    return it->second;
  }

  // Memoized yes/no property of the level n quotient.
  template <class F>
  bool property(const std::string &name, int n, F compute) const {
    {
      std::lock_guard<std::mutex> lock(state_->m);
      auto it = state_->flags.find({name, n});
      if (it != state_->flags.end())
        return it->second;
    }
    const bool v = compute();
    std::lock_guard<std::mutex> lock(state_->m);
    state_->flags.emplace(std::pair{name, n}, v);
    return v;
  }

private:
  struct State {
    std::mutex m;
    std::map<int, std::shared_ptr<const RelativeQuotient>> q;
    std::map<std::pair<std::string, int>, bool> flags;
  };
  std::shared_ptr<State> state_ = std::make_shared<State>();
};

// A knot group over G with its boundary condition. Peripheral words are
// conjugated by the basing word when one is given.
class KnotData {
public:
  KnotData(std::string name, OverGStructure g, BoundaryCondition bc,
           std::optional<FreeWord> basing = std::nullopt)
      : name_(std::move(name)), g_(std::move(g)), bc_(std::move(bc)), basing_(std::move(basing)) {
    const int r = g_.pi().rank();
    for (const FreeWord *w : {&bc_.m_image, &bc_.l_image})
      if (w->max_generator() >= r)
        throw InputError("peripheral word uses an undeclared generator");
    if (basing_ && basing_->max_generator() >= r)
      throw InputError("basing word uses an undeclared generator");
  }

  const std::string &name() const { return name_; }
  const OverGStructure &over_g() const { return g_; }
  const FpPresentation &pi() const { return g_.pi(); }
  const AmbientGroup &G() const { return g_.G(); }
  const BoundaryCondition &bc() const { return bc_; }
  const std::optional<FreeWord> &basing() const { return basing_; }

  FreeWord based(const FreeWord &w) const { return basing_ ? conjugate(w, *basing_) : w; }
  FreeWord mu() const { return based(bc_.mu_word()); }
  std::vector<FreeWord> peripheral() const { return {based(bc_.m_image), based(bc_.l_image)}; }

  std::shared_ptr<const RelativeQuotient> quotient(int n) const { return cache_.get(g_, n); }
  const QuotientCache &cache() const { return cache_; }

private:
  std::string name_;
  OverGStructure g_;
  BoundaryCondition bc_;
  std::optional<FreeWord> basing_;
  QuotientCache cache_;
};

using KnotPtr = std::shared_ptr<const KnotData>;

} // namespace hinv
