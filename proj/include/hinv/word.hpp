#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "hinv/error.hpp"

namespace hinv {

struct Letter {
  int gen = 0;
  long long exp = 1;
  friend bool operator==(const Letter &, const Letter &) = default;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

// Freely reduced word stored run-length: adjacent letters have distinct
// generators and no exponent is zero.
class FreeWord {
public:
  FreeWord() = default;

  static FreeWord generator(int gen, long long exp = 1) {
    FreeWord w;
    w.push(gen, exp);
    return w;
  }

  // Reduces an arbitrary letter sequence. With num_generators >= 0 every
  // index must lie in [0, num_generators).
  static FreeWord reduce(std::span<const Letter> raw, int num_generators = -1) {
    FreeWord w;
    for (const Letter &l : raw) {
      if (l.gen < 0 || (num_generators >= 0 && l.gen >= num_generators))
        throw InputError("generator index " + std::to_string(l.gen) +
                         " out of range");
      w.push(l.gen, l.exp);
    }
    return w;
  }

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t syllables() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Number of letters when written out without powers.
  long long length() const {
    long long n = 0;
    for (const Letter &l : letters_)
      n += std::llabs(l.exp);
    return n;
  }

  int max_generator() const {
    int m = -1;
    for (const Letter &l : letters_)
      m = std::max(m, l.gen);
    return m;
  }

  // Appends g^e, cancelling against the last syllable.
  void push(int gen, long long exp) {
    if (exp == 0)
      return;
    if (!letters_.empty() && letters_.back().gen == gen) {
      letters_.back().exp += exp;
      if (letters_.back().exp == 0)
        letters_.pop_back();
      return;
    }
    letters_.push_back({gen, exp});
  }

  FreeWord &operator*=(const FreeWord &o) {
    for (const Letter &l : o.letters_)
      push(l.gen, l.exp);
    return *this;
  }
  friend FreeWord operator*(FreeWord a, const FreeWord &b) { return a *= b; }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  FreeWord pow(long long n) const {
    FreeWord base = n < 0 ? inverse() : *this;
    if (n < 0)
      n = -n;
    FreeWord r;
    while (n > 0) {
      if (n & 1)
        r *= base;
      n >>= 1;
      if (n > 0)
        base *= FreeWord(base);
    }
    return r;
  }

  // Exponent sum of each generator.
  std::vector<long long> exponent_sums(int num_generators) const {
    std::vector<long long> v(num_generators, 0);
    for (const Letter &l : letters_)
      v.at(l.gen) += l.exp;
    return v;
  }

  // Renumbers generators: gen i becomes map[i].
  FreeWord relabel(std::span<const int> map) const {
    FreeWord w;
    for (const Letter &l : letters_)
      w.push(map[l.gen], l.exp);
    return w;
  }

  friend bool operator==(const FreeWord &, const FreeWord &) = default;
  friend auto operator<=>(const FreeWord &a, const FreeWord &b) {
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<Letter> letters_;
};

inline FreeWord reduce_word(std::span<const Letter> raw, int num_generators = -1) {
  return FreeWord::reduce(raw, num_generators);
}

// [u,v] = u^-1 v^-1 u v
inline FreeWord commutator(const FreeWord &u, const FreeWord &v) {
  return u.inverse() * v.inverse() * u * v;
}

// u^v = v^-1 u v
inline FreeWord conjugate(const FreeWord &u, const FreeWord &v) {
  return v.inverse() * u * v;
}

// Cyclically reduced core of w (w is a conjugate of the result).
inline FreeWord cyclic_core(const FreeWord &w) {
  auto ls = w.letters();
  std::size_t i = 0, j = ls.size();
  FreeWord core;
  while (j - i >= 2 && ls[i].gen == ls[j - 1].gen && ls[i].exp == -ls[j - 1].exp) {
    ++i;
    --j;
  }
  if (j - i >= 2 && ls[i].gen == ls[j - 1].gen) {
    // merge the two ends into one syllable
    for (std::size_t k = i + 1; k + 1 < j; ++k)
      core.push(ls[k].gen, ls[k].exp);
    core.push(ls[i].gen, ls[i].exp + ls[j - 1].exp);
    return core;
  }
  for (std::size_t k = i; k < j; ++k)
    core.push(ls[k].gen, ls[k].exp);
  return core;
}

// Letter-by-letter expansion (each entry has exponent +1 or -1).
inline std::vector<Letter> expand(const FreeWord &w) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const Letter &l : w.letters()) {
    long long s = l.exp > 0 ? 1 : -1;
    for (long long k = 0; k < std::llabs(l.exp); ++k)
      out.push_back({l.gen, s});
  }
  return out;
}

// True if u is a cyclic permutation of v or of v^-1.
inline bool is_cyclic_conjugate(const FreeWord &u, const FreeWord &v) {
  auto a = expand(cyclic_core(u));
  for (const FreeWord &cand : {v, v.inverse()}) {
    auto b = expand(cyclic_core(cand));
    if (a.size() != b.size())
      continue;
    if (a.empty())
      return true;
    for (std::size_t shift = 0; shift < b.size(); ++shift) {
      bool eq = true;
      for (std::size_t k = 0; k < a.size() && eq; ++k)
        eq = a[k] == b[(k + shift) % b.size()];
      if (eq)
        return true;
    }
  }
  return false;
}

} // namespace hinv
