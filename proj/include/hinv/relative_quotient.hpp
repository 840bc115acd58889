#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hinv/nilpotent_quotient.hpp"
#include "hinv/reidemeister_schreier.hpp"

namespace hinv {

// Element r_t * y of pi / Gamma_n: a G index t and a normal form y of the
// nilpotent part Gamma_1 / Gamma_n.
struct RqElement {
  int g = 0;
  PcElement nil;
  friend bool operator==(const RqElement &, const RqElement &) = default;
  friend bool operator<(const RqElement &a, const RqElement &b) {
    return a.g != b.g ? a.g < b.g : a.nil < b.nil;
  }
};

// pi / Gamma_n gamma as an extension of G (finite) by the nilpotent group
// N = Ker(gamma) / gamma_n(Ker(gamma)), stored as transversal words r_t, the
// cocycle c(s,t) = r_st^-1 r_s r_t in N and the action y -> r_t^-1 y r_t.
class RelativeQuotient {
public:
  using Element = RqElement;
  static constexpr bool decides_word_problem = true;

  // Level n >= 1: the nilpotent part has class n - 1.
  static RelativeQuotient build(const OverGStructure &g, int level, ToddCoxeterOptions opts = {}) {
    if (level < 1)
      throw InputError("quotient level must be at least 1");
    if (!g.G().is_finite())
      throw UnsupportedError("relative quotients need a finite G (got " + g.G().describe() + ")");
    RelativeQuotient q;
    q.level_ = level;
    q.G_ = g.G_ptr();
    q.source_.emplace(g);
    q.kernel_ = std::make_shared<const KernelPresentation>(kernel_presentation(g, opts));
    q.nq_ = nilpotent_quotient(q.kernel_->presentation, level - 1);
    q.nil_ = q.nq_.pc();
    const FiniteGroup &G = g.G().finite();
    const int m = G.order();
    q.transversal_.resize(m);
    for (int t = 0; t < m; ++t)
      q.transversal_[t] = q.kernel_->table.transversal[q.kernel_->table.coset_of_element[t]];
    q.kernel_words_.clear();
    for (std::size_t i = 0; i < q.nil_.size(); ++i)
      q.kernel_words_.push_back(substitute(q.nq_.preimages()[i], q.kernel_->schreier_generators));
    q.cocycle_.assign(m, std::vector<PcElement>(m));
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        int st = G.multiply(s, t);
        q.cocycle_[s][t] = q.epsilon(q.transversal_[st].inverse() * q.transversal_[s] * q.transversal_[t]);
      }
    q.action_.assign(m, std::vector<PcElement>(q.nil_.size()));
    for (int t = 0; t < m; ++t)
      for (std::size_t i = 0; i < q.nil_.size(); ++i)
        q.action_[t][i] =
            q.epsilon(q.transversal_[t].inverse() * q.kernel_words_[i] * q.transversal_[t]);
    for (int x = 0; x < g.pi().rank(); ++x)
      q.generator_images_.push_back(q.project_direct(FreeWord::generator(x)));
    return q;
  }

  // Trivial G over a hand-built weighted pc presentation (weights < level).
  static RelativeQuotient from_polycyclic(PcPresentation nil, int level) {
    if (nil.max_weight() > level - 1)
      throw InputError("pc presentation has weights beyond class " + std::to_string(level - 1));
    RelativeQuotient q;
    q.level_ = level;
    q.G_ = std::make_shared<const AmbientGroup>(AmbientGroup::trivial());
    q.nil_ = std::move(nil);
    q.transversal_ = {FreeWord()};
    q.cocycle_ = {{q.nil_.identity()}};
    q.action_.assign(1, std::vector<PcElement>());
    for (std::size_t i = 0; i < q.nil_.size(); ++i)
      q.action_[0].push_back(q.nil_.unit(i));
    return q;
  }

  int level() const { return level_; }
  const AmbientGroup &G() const { return *G_; }
  const std::shared_ptr<const AmbientGroup> &G_ptr() const { return G_; }
  const PcPresentation &nilpotent_part() const { return nil_; }
  bool has_source() const { return source_.has_value(); }
  const OverGStructure &source() const { return source_.value(); }
  const KernelPresentation &kernel() const { return *kernel_; }
  const NilpotentQuotient &kernel_quotient() const { return nq_; }
  const std::vector<FreeWord> &transversal() const { return transversal_; }
  const std::vector<Element> &generator_images() const { return generator_images_; }
  // pc generator i of N as a word of pi lying in Ker(gamma).
  const FreeWord &kernel_word(std::size_t i) const { return kernel_words_.at(i); }
  const PcElement &cocycle(int s, int t) const { return cocycle_[s][t]; }
  const PcElement &action(int t, std::size_t i) const { return action_[t][i]; }

  std::size_t hirsch_length() const { return nil_.hirsch_length(); }

  // Abelian invariants of gamma_w N / gamma_{w+1} N, w = 1..level-1.
  std::vector<AbelianInvariants> layers() const {
    std::vector<AbelianInvariants> out;
    for (int w = 1; w < level_; ++w) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < nil_.size(); ++i)
        if (nil_.weight(i) == w)
          idx.push_back(i);
      IntMatrix rel(0, idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (nil_.order(idx[a]) == 0)
          continue;
        IntVector row(idx.size());
        row[a] = nil_.order(idx[a]);
        for (std::size_t b = 0; b < idx.size(); ++b)
          row[b] -= nil_.power_rhs(idx[a])[idx[b]];
        rel.append_row(row);
      }
      out.push_back(cokernel_invariants(rel));
    }
    return out;
  }

  Element identity() const { return {G_->finite().identity(), nil_.identity()}; }
  bool is_identity(const Element &a) const { return a == identity(); }
  bool equal(const Element &a, const Element &b) const { return a == b; }

  // phi_t(y) = r_t^-1 y r_t
  PcElement act(int t, const PcElement &y) const {
    PcElement r = nil_.identity();
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 0)
        r = nil_.multiply(r, nil_.power(action_[t][i], y[i]));
    return r;
  }

  Element multiply(const Element &a, const Element &b) const {
    const FiniteGroup &G = G_->finite();
    PcElement y = nil_.multiply(nil_.multiply(cocycle_[a.g][b.g], act(b.g, a.nil)), b.nil);
    return {G.multiply(a.g, b.g), std::move(y)};
  }

  Element inverse(const Element &a) const {
    const FiniteGroup &G = G_->finite();
    int s = G.inverse(a.g);
    PcElement z = nil_.inverse(nil_.multiply(cocycle_[a.g][s], act(s, a.nil)));
    return {s, std::move(z)};
  }

  Element power(const Element &a, Integer n) const {
    Element base = a;
    if (n < 0) {
      base = inverse(a);
      n = -n;
    }
    Element r = identity();
    while (n > 0) {
      if ((n & 1) != 0)
        r = multiply(r, base);
      n >>= 1;
      if (n > 0)
        base = multiply(base, base);
    }
    return r;
  }
  Element power(const Element &a, long long n) const { return power(a, Integer(n)); }

  Element conjugate(const Element &a, const Element &b) const {
    return multiply(multiply(inverse(b), a), b);
  }

  // Element of N viewed in the quotient.
  Element from_nil(const PcElement &y) const { return {G_->finite().identity(), y}; }

  // Projection pi -> pi / Gamma_n by substituting generator images.
  Element project(const FreeWord &w) const {
    require_source();
    Element r = identity();
    for (const Letter &l : w.letters())
      r = multiply(r, power(generator_images_.at(l.gen), Integer(l.exp)));
    return r;
  }

  // Projection computed from the whole word at once: G part from gamma and
  // nilpotent part by rewriting r_t^-1 w into the kernel generators.
  Element project_direct(const FreeWord &w) const {
    require_source();
    int t = G_->index(source_->gamma_of(w));
    return {t, epsilon(transversal_[t].inverse() * w)};
  }

  // A word of pi mapping to a.
  FreeWord lift(const Element &a) const {
    require_source();
    return transversal_[a.g] * substitute(nq_.preimage_word(a.nil), kernel_->schreier_generators);
  }

  // pi / Gamma_j for j <= level, by truncating the nilpotent part.
  RelativeQuotient truncate(int j) const {
    if (j < 1 || j > level_)
      throw InputError("truncation level out of range");
    RelativeQuotient q = *this;
    q.level_ = j;
    q.nil_ = nil_.truncate_to_weight(j - 1);
    const std::size_t k = q.nil_.size();
    if (has_source())
      q.nq_ = nq_.truncate(j - 1);
    q.kernel_words_.resize(std::min(k, kernel_words_.size()));
    for (auto &row : q.cocycle_)
      for (auto &c : row)
        c = PcPresentation::prefix(c, k);
    for (auto &row : q.action_) {
      row.resize(k);
      for (auto &c : row)
        c = PcPresentation::prefix(c, k);
    }
    for (auto &e : q.generator_images_)
      e.nil = PcPresentation::prefix(e.nil, k);
    return q;
  }

  Element truncate_element(const Element &a, const RelativeQuotient &lower) const {
    return {a.g, PcPresentation::prefix(a.nil, lower.nil_.size())};
  }

  std::string element_string(const Element &a) const {
    std::string s = "(" + G_->label({a.g}) + "; ";
    bool first = true;
    for (std::size_t i = 0; i < a.nil.size(); ++i) {
      if (a.nil[i] == 0)
        continue;
      if (!first)
        s += " ";
      s += nil_.names()[i];
      if (a.nil[i] != 1)
        s += "^" + a.nil[i].str();
      first = false;
    }
    return s + (first ? "1)" : ")");
  }

private:
  void require_source() const {
    if (!source_)
      throw UnsupportedError("quotient was built without a presentation of pi");
  }

  // Kernel word of pi -> N.
  PcElement epsilon(const FreeWord &w) const { return nq_.evaluate(kernel_->rewrite(w)); }

  int level_ = 1;
  std::shared_ptr<const AmbientGroup> G_;
  std::optional<OverGStructure> source_;
  std::shared_ptr<const KernelPresentation> kernel_;
  NilpotentQuotient nq_;
  PcPresentation nil_;
  std::vector<FreeWord> transversal_;
  std::vector<FreeWord> kernel_words_;
  std::vector<std::vector<PcElement>> cocycle_;
  std::vector<std::vector<PcElement>> action_;
  std::vector<Element> generator_images_;
};

inline RelativeQuotient relative_quotient(const OverGStructure &g, int level,
                                          ToddCoxeterOptions opts = {}) {
  return RelativeQuotient::build(g, level, opts);
}

} // namespace hinv
