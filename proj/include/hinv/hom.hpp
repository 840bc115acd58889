#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hinv/presentation.hpp"

namespace hinv {

enum class Verification { verified, unverified, failed };

inline std::string to_string(Verification v) {
  switch (v) {
  case Verification::verified:
    return "verified";
  case Verification::unverified:
    return "unverified";
  case Verification::failed:
    return "failed";
  }
  return "";
}

// Homomorphism from a finitely presented group, given by generator images.
// Construction checks relator images where the codomain can decide it.
template <class Codomain>
class GroupHom {
public:
  using Element = typename Codomain::Element;

  GroupHom(FpPresentation domain, std::shared_ptr<const Codomain> codomain,
           std::vector<Element> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.rank())
      throw InputError("homomorphism needs one image per generator (" +
                       std::to_string(domain_.rank()) + " expected, " +
                       std::to_string(images_.size()) + " given)");
    verification_ = check_relators();
  }

  const FpPresentation &domain() const { return domain_; }
  const Codomain &codomain() const { return *codomain_; }
  const std::shared_ptr<const Codomain> &codomain_ptr() const { return codomain_; }
  const std::vector<Element> &images() const { return images_; }
  const Element &image(int gen) const { return images_.at(gen); }
  Verification verification() const { return verification_; }
  bool verified() const { return verification_ == Verification::verified; }
  // First relator whose image could not be shown trivial, or -1.
  int failing_relator() const { return failing_relator_; }

  Element apply(const FreeWord &w) const {
    const Codomain &c = *codomain_;
    Element r = c.identity();
    for (const Letter &l : w.letters())
      r = c.multiply(r, c.power(images_.at(l.gen), Integer(l.exp)));
    return r;
  }

  std::vector<std::string> taints() const {
    if (verification_ == Verification::verified)
      return {};
    return {"homomorphism " + to_string(verification_) + ": relator " +
            std::to_string(failing_relator_ + 1) + " not shown to map to the identity"};
  }

private:
  Verification check_relators() {
    const auto &rels = domain_.relators();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      Element img = apply(rels[i]);
      if constexpr (Codomain::decides_word_problem) {
        if (!codomain_->is_identity(img)) {
          failing_relator_ = static_cast<int>(i);
          return Verification::failed;
        }
      } else {
        if (img.empty())
          continue;
        bool known = false;
        for (const FreeWord &r : codomain_->relators())
          known |= is_cyclic_conjugate(img, r);
        if (!known) {
          failing_relator_ = static_cast<int>(i);
          return codomain_->relators().empty() ? Verification::failed
                                               : Verification::unverified;
        }
      }
    }
    return Verification::verified;
  }

  FpPresentation domain_;
  std::shared_ptr<const Codomain> codomain_;
  std::vector<Element> images_;
  Verification verification_ = Verification::unverified;
  int failing_relator_ = -1;
};

// Word-valued homomorphism between finitely presented groups.
using FpHom = GroupHom<FpPresentation>;

inline FpHom identity_hom(const FpPresentation &p) {
  std::vector<FreeWord> imgs;
  for (int i = 0; i < p.rank(); ++i)
    imgs.push_back(FreeWord::generator(i));
  return FpHom(p, std::make_shared<const FpPresentation>(p), std::move(imgs));
}

// Substitutes words for generators: the image of w under x_i -> images[i].
inline FreeWord substitute(const FreeWord &w, const std::vector<FreeWord> &images) {
  FreeWord r;
  for (const Letter &l : w.letters())
    r *= images.at(l.gen).pow(l.exp);
  return r;
}

} // namespace hinv
