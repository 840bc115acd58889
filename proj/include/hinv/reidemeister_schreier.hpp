#pragma once

#include <vector>

#include "hinv/coset_enumeration.hpp"

namespace hinv {

// Presentation of Ker(gamma) on the Schreier generators r_c x r_{cx}^-1.
struct KernelPresentation {
  FpPresentation presentation;
  std::vector<FreeWord> schreier_generators; // as words in pi
  std::vector<std::vector<int>> schreier_index; // [coset][generator] -> index or -1
  CosetTable table;
  FpHom embedding; // kernel -> pi

  struct Rewritten {
    FreeWord word; // in the Schreier generators
    int end_coset = 0;
  };

  // Rewrites w read from coset `start`; the result equals r_start w r_end^-1.
  Rewritten rewrite_from(const FreeWord &w, int start) const {
    Rewritten out;
    int c = start;
    for (const Letter &l : w.letters()) {
      const int x = l.gen;
      for (long long k = 0; k < std::llabs(l.exp); ++k) {
        if (l.exp > 0) {
          int s = schreier_index[c][x];
          if (s >= 0)
            out.word.push(s, 1);
          c = table.table[c][2 * x];
        } else {
          c = table.table[c][2 * x + 1];
          int s = schreier_index[c][x];
          if (s >= 0)
            out.word.push(s, -1);
        }
      }
    }
    out.end_coset = c;
    return out;
  }

  // Rewrites a word of pi lying in the kernel.
  FreeWord rewrite(const FreeWord &w) const {
    Rewritten r = rewrite_from(w, 0);
    if (r.end_coset != 0)
      throw InputError("word is not in the kernel of gamma");
    return r.word;
  }

  int rank() const { return presentation.rank(); }
};

inline KernelPresentation reidemeister_schreier(const CosetTable &t, const OverGStructure &g) {
  const int n = g.pi().rank();
  check_internal(t.num_generators == n, "coset table built for another presentation");
  std::vector<FreeWord> sgens;
  std::vector<std::vector<int>> sidx(t.size(), std::vector<int>(n, -1));
  for (int c = 0; c < t.size(); ++c)
    for (int x = 0; x < n; ++x) {
      int d = t.table[c][2 * x];
      FreeWord s = t.transversal[c] * FreeWord::generator(x) * t.transversal[d].inverse();
      if (s.empty())
        continue;
      sidx[c][x] = static_cast<int>(sgens.size());
      sgens.push_back(std::move(s));
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sgens.size(); ++i)
    names.push_back("s" + std::to_string(i + 1));

  KernelPresentation kp{FpPresentation(names, {}), sgens, sidx, t,
                        identity_hom(FpPresentation())};
  std::vector<FreeWord> rels;
  for (int c = 0; c < t.size(); ++c)
    for (const FreeWord &r : g.pi().relators()) {
      auto rw = kp.rewrite_from(r, c);
      check_internal(rw.end_coset == c, "relator does not close in the coset table");
      if (!rw.word.empty())
        rels.push_back(std::move(rw.word));
    }
  kp.presentation = FpPresentation(std::move(names), std::move(rels));
  for (const FreeWord &s : sgens)
    check_internal(kernel_membership(s, g), "Schreier generator outside the kernel");
  kp.embedding = FpHom(kp.presentation, std::make_shared<const FpPresentation>(g.pi()), sgens);
  return kp;
}

inline KernelPresentation kernel_presentation(const OverGStructure &g,
                                              ToddCoxeterOptions opts = {}) {
  return reidemeister_schreier(todd_coxeter(g, opts), g);
}

} // namespace hinv
