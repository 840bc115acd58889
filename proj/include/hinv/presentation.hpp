#pragma once

#include <string>
#include <vector>

#include "hinv/integer.hpp"
#include "hinv/word.hpp"

namespace hinv {

class FpPresentation {
public:
  using Element = FreeWord;
  // Only free reduction is available: equality of elements is not decided.
  static constexpr bool decides_word_problem = false;

  FpPresentation() = default;
  FpPresentation(std::vector<std::string> names, std::vector<FreeWord> relators)
      : names_(std::move(names)), relators_(std::move(relators)) {
    int n = static_cast<int>(names_.size());
    for (const FreeWord &r : relators_)
      if (r.max_generator() >= n)
        throw InputError("relator uses generator index " +
                         std::to_string(r.max_generator()) + " but only " +
                         std::to_string(n) + " generators are declared");
  }

  // Default names x1, x2, ...
  static FpPresentation with_rank(int rank, std::vector<FreeWord> relators = {}) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i)
      names.push_back("x" + std::to_string(i + 1));
    return FpPresentation(std::move(names), std::move(relators));
  }

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const std::vector<FreeWord> &relators() const { return relators_; }

  FreeWord identity() const { return {}; }
  FreeWord generator(int i) const { return FreeWord::generator(i); }
  FreeWord multiply(const FreeWord &a, const FreeWord &b) const { return a * b; }
  FreeWord inverse(const FreeWord &a) const { return a.inverse(); }
  FreeWord power(const FreeWord &a, long long n) const { return a.pow(n); }
  FreeWord power(const FreeWord &a, const Integer &n) const { return a.pow(to_ll(n)); }

  friend bool operator==(const FpPresentation &, const FpPresentation &) = default;

private:
  std::vector<std::string> names_;
  std::vector<FreeWord> relators_;
};

} // namespace hinv
