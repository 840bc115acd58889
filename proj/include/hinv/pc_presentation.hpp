#pragma once

#include <string>
#include <vector>

#include "hinv/error.hpp"
#include "hinv/integer.hpp"
#include "hinv/word.hpp"

namespace hinv {

// Exponent vector of a normal form g_1^e_1 ... g_k^e_k.
using PcElement = std::vector<Integer>;

// Polycyclic presentation with power relations g_i^m_i = u_i (m_i = 0 means
// infinite order) and conjugate relations g_j^(g_i) = g_j v_ij for i < j,
// where u_i and v_ij only involve generators of larger index. Elements are
// kept in collected normal form with 0 <= e_i < m_i for finite m_i.
class PcPresentation {
public:
  using Element = PcElement;
  static constexpr bool decides_word_problem = true;

  PcPresentation() { finalize(); }

  // All conjugate relations trivial and all powers g_i^m_i = 1 until set.
  PcPresentation(std::vector<std::string> names, std::vector<Integer> orders,
                 std::vector<int> weights = {})
      : names_(std::move(names)), orders_(std::move(orders)), weights_(std::move(weights)) {
    const std::size_t n = names_.size();
    if (orders_.size() != n)
      throw InputError("pc presentation: one relative order per generator expected");
    if (weights_.empty())
      weights_.assign(n, 1);
    if (weights_.size() != n)
      throw InputError("pc presentation: one weight per generator expected");
    for (std::size_t i = 0; i < n; ++i) {
      if (orders_[i] < 0 || orders_[i] == 1)
        throw InputError("pc presentation: relative order of " + names_[i] +
                         " must be 0 (infinite) or at least 2");
      if (i > 0 && weights_[i] < weights_[i - 1])
        throw InputError("pc presentation: weights must be non-decreasing");
    }
    powers_.assign(n, PcElement(n));
    conj_.assign(n, std::vector<PcElement>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        conj_[j][i] = unit(j);
    finalize();
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }
  const std::vector<Integer> &orders() const { return orders_; }
  const std::vector<int> &weights() const { return weights_; }
  const Integer &order(std::size_t i) const { return orders_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  int max_weight() const { return weights_.empty() ? 0 : weights_.back(); }
  const PcElement &power_rhs(std::size_t i) const { return powers_[i]; }
  const PcElement &conjugate_rhs(std::size_t j, std::size_t i) const { return conj_[j][i]; }
  bool commute(std::size_t j, std::size_t i) const { return commutes_[j][i]; }

  // Number of infinite generators (Hirsch length of the presented group).
  std::size_t hirsch_length() const {
    std::size_t h = 0;
    for (const Integer &m : orders_)
      h += m == 0;
    return h;
  }

  PcElement identity() const { return PcElement(size()); }
  PcElement unit(std::size_t i, const Integer &e = 1) const {
    PcElement v(size());
    v[i] = e;
    return v;
  }
  PcElement generator(int i) const { return unit(static_cast<std::size_t>(i)); }

  void set_power(std::size_t i, PcElement rhs) {
    check_tail(rhs, i, "power relation of " + names_.at(i));
    powers_[i] = std::move(rhs);
    finalized_ = false;
  }

  // g_j^(g_i) = rhs; rhs must have the form g_j * (generators after j).
  void set_conjugate(std::size_t j, std::size_t i, PcElement rhs) {
    if (!(i < j && j < size()))
      throw InputError("pc presentation: conjugate relation needs i < j");
    if (rhs.size() != size() || rhs[j] != 1)
      throw InputError("pc presentation: conjugate of " + names_[j] + " by " + names_[i] +
                       " must start with " + names_[j]);
    PcElement tail = rhs;
    tail[j] = 0;
    check_tail(tail, j, "conjugate relation " + names_[j] + "^" + names_[i]);
    conj_[j][i] = std::move(rhs);
    finalized_ = false;
  }

  // [g_j, g_i] = c, with c a word in generators after j.
  void set_commutator(std::size_t j, std::size_t i, const PcElement &c) {
    PcElement rhs = c;
    if (rhs.size() != size())
      throw InputError("pc presentation: commutator value has wrong length");
    rhs[j] += 1;
    set_conjugate(j, i, std::move(rhs));
  }

  // Derives inverse conjugates; must follow the last set_* call.
  void finalize() {
    const std::size_t n = size();
    commutes_.assign(n, std::vector<bool>(n, true));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        commutes_[j][i] = conj_[j][i] == unit(j);
    conj_inv_.assign(n, std::vector<PcElement>(n));
    finalized_ = true;
    // g_j^(g_i^-1) = g_j y with y^(g_i) = (g_j^-1 g_j^(g_i))^-1; y lives after j,
    // so it is found from inverse conjugates already known.
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = n; j-- > i + 1;) {
        if (commutes_[j][i]) {
          conj_inv_[j][i] = unit(j);
          continue;
        }
        PcElement c = conj_[j][i];
        c[j] = 0;
        PcElement y = conjugate_by_generator(inverse(c), i, -1);
        y[j] = 1;
        conj_inv_[j][i] = std::move(y);
      }
  }

  bool is_identity(const PcElement &a) const { return is_zero(a); }
  bool equal(const PcElement &a, const PcElement &b) const { return a == b; }

  PcElement multiply(const PcElement &a, const PcElement &b) const {
    PcElement r = a;
    for (std::size_t l = 0; l < b.size(); ++l)
      if (b[l] != 0)
        mul_generator_power(r, l, b[l]);
    return r;
  }

  PcElement inverse(const PcElement &a) const {
    PcElement r = identity();
    for (std::size_t l = a.size(); l-- > 0;)
      if (a[l] != 0)
        mul_generator_power(r, l, -a[l]);
    return r;
  }

  PcElement power(const PcElement &a, Integer n) const {
    PcElement base = a;
    if (n < 0) {
      base = inverse(a);
      n = -n;
    }
    PcElement r = identity();
    // Pure powers of one generator need no squaring.
    std::size_t support = 0, lead = 0;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (base[l] != 0) {
        ++support;
        lead = l;
      }
    if (support == 1) {
      mul_generator_power(r, lead, base[lead] * n);
      return r;
    }
    while (n > 0) {
      if ((n & 1) != 0)
        r = multiply(r, base);
      n >>= 1;
      if (n > 0)
        base = multiply(base, base);
    }
    return r;
  }
  PcElement power(const PcElement &a, long long n) const { return power(a, Integer(n)); }

  // b^-1 a b
  PcElement conjugate(const PcElement &a, const PcElement &b) const {
    return multiply(multiply(inverse(b), a), b);
  }
  // a^-1 b^-1 a b
  PcElement commutator(const PcElement &a, const PcElement &b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
  }

  // Normal form of a word whose letters are pc generator indices.
  PcElement collect(const FreeWord &w) const {
    PcElement r = identity();
    for (const Letter &l : w.letters()) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= size())
        throw InputError("pc word uses an undeclared generator");
      mul_generator_power(r, static_cast<std::size_t>(l.gen), Integer(l.exp));
    }
    return r;
  }

  // Normal form written as a word g_1^e_1 ... g_k^e_k.
  FreeWord to_word(const PcElement &a) const {
    FreeWord w;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (a[l] != 0)
        w.push(static_cast<int>(l), to_ll(a[l]));
    return w;
  }

  // Right-multiplies e in place by g_l^k.
  void mul_generator_power(PcElement &e, std::size_t l, Integer k) const {
    check_internal(finalized_, "pc presentation used before finalize()");
    if (k == 0)
      return;
    const std::size_t n = size();
    bool tail_commutes = true;
    for (std::size_t j = l + 1; j < n && tail_commutes; ++j)
      if (e[j] != 0 && !commutes_[j][l])
        tail_commutes = false;
    if (tail_commutes) {
      Integer a = e[l] + k;
      if (orders_[l] == 0) {
        e[l] = a;
        return;
      }
      Integer q = floor_div(a, orders_[l]);
      e[l] = a - q * orders_[l];
      if (q != 0)
        absorb_power(e, l, q);
      return;
    }
    const int s = k > 0 ? 1 : -1;
    for (Integer c = abs(k); c > 0; --c) {
      PcElement tail(n);
      for (std::size_t j = l + 1; j < n; ++j)
        std::swap(tail[j], e[j]);
      PcElement moved = conjugate_by_generator(tail, l, s);
      Integer a = e[l] + s;
      PcElement pending = identity();
      if (orders_[l] != 0) {
        Integer q = floor_div(a, orders_[l]);
        a -= q * orders_[l];
        if (q != 0)
          pending = power(powers_[l], q);
      }
      e[l] = a;
      PcElement rest = multiply(pending, moved);
      for (std::size_t j = l + 1; j < n; ++j)
        e[j] = std::move(rest[j]);
    }
  }

  // tail^(g_l^s) for s = +-1 and tail supported after l.
  PcElement conjugate_by_generator(const PcElement &tail, std::size_t l, int s) const {
    PcElement acc = identity();
    for (std::size_t j = l + 1; j < size(); ++j) {
      if (tail[j] == 0)
        continue;
      if (commutes_[j][l])
        mul_generator_power(acc, j, tail[j]);
      else
        acc = multiply(acc, power(s > 0 ? conj_[j][l] : conj_inv_[j][l], tail[j]));
    }
    return acc;
  }

  struct ConsistencyFailure {
    std::string test;
    PcElement lhs, rhs;
  };

  // Standard overlap tests; an empty result means the presentation is consistent.
  // Tests whose generator weights add up to more than max_weight_sum are
  // skipped (they only matter above that class).
  std::vector<ConsistencyFailure> consistency_failures(int max_weight_sum = -1) const {
    auto within = [&](int w) { return max_weight_sum < 0 || w <= max_weight_sum; };
    std::vector<ConsistencyFailure> out;
    const std::size_t n = size();
    auto g = [&](std::size_t i) { return unit(i); };
    auto gi = [&](std::size_t i) { return inverse(unit(i)); };
    auto record = [&](std::string name, PcElement a, PcElement b) {
      if (a != b)
        out.push_back({std::move(name), std::move(a), std::move(b)});
    };
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (within(weights_[i] + weights_[j] + weights_[k]))
            record("(" + names_[k] + names_[j] + ")" + names_[i],
                 multiply(multiply(g(k), g(j)), g(i)),
                 multiply(g(k), multiply(g(j), g(i))));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (!within(weights_[i] + weights_[j]))
          continue;
        if (orders_[j] != 0)
          record(names_[j] + "^m " + names_[i], multiply(powers_[j], g(i)),
                 multiply(power(g(j), orders_[j] - 1), multiply(g(j), g(i))));
        if (orders_[i] != 0)
          record(names_[j] + " " + names_[i] + "^m", multiply(g(j), powers_[i]),
                 multiply(multiply(g(j), g(i)), power(g(i), orders_[i] - 1)));
        if (orders_[i] == 0)
          record(names_[j] + " = (" + names_[j] + names_[i] + "^-1)" + names_[i],
                 multiply(multiply(g(j), gi(i)), g(i)), g(j));
        if (orders_[j] == 0)
          record(names_[i] + " = " + names_[j] + "^-1(" + names_[j] + names_[i] + ")",
                 multiply(gi(j), multiply(g(j), g(i))), g(i));
        if (orders_[i] == 0 && orders_[j] == 0)
          record(names_[j] + "^-1 = (" + names_[j] + "^-1" + names_[i] + "^-1)" + names_[i],
                 multiply(multiply(gi(j), gi(i)), g(i)), gi(j));
      }
    for (std::size_t i = 0; i < n; ++i)
      if (orders_[i] != 0)
        record(names_[i] + "^(m+1)", multiply(powers_[i], g(i)), multiply(g(i), powers_[i]));
    return out;
  }

  bool is_consistent() const { return consistency_failures().empty(); }

  // Quotient by the generators of weight > c (a normal subgroup when the
  // weights come from a lower central series).
  PcPresentation truncate_to_weight(int c) const {
    std::size_t k = 0;
    while (k < size() && weights_[k] <= c)
      ++k;
    return truncate(k);
  }

  // Keeps the first k generators; assumes the rest span a normal subgroup.
  PcPresentation truncate(std::size_t k) const {
    PcPresentation q(std::vector<std::string>(names_.begin(), names_.begin() + k),
                     std::vector<Integer>(orders_.begin(), orders_.begin() + k),
                     std::vector<int>(weights_.begin(), weights_.begin() + k));
    for (std::size_t i = 0; i < k; ++i) {
      q.powers_[i] = prefix(powers_[i], k);
      for (std::size_t j = 0; j < i; ++j)
        q.conj_[i][j] = prefix(conj_[i][j], k);
    }
    q.finalize();
    return q;
  }

  static PcElement prefix(const PcElement &a, std::size_t k) {
    return PcElement(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(k, a.size())));
  }

  friend bool operator==(const PcPresentation &a, const PcPresentation &b) {
    return a.orders_ == b.orders_ && a.weights_ == b.weights_ && a.powers_ == b.powers_ &&
           a.conj_ == b.conj_;
  }

private:
  static bool is_zero(const PcElement &a) {
    for (const Integer &x : a)
      if (x != 0)
        return false;
    return true;
  }

  void check_tail(const PcElement &tail, std::size_t after, const std::string &what) const {
    if (tail.size() != size())
      throw InputError("pc presentation: " + what + " has wrong length");
    for (std::size_t l = 0; l <= after; ++l)
      if (tail[l] != 0)
        throw InputError("pc presentation: " + what + " must only involve later generators");
    for (std::size_t l = 0; l < size(); ++l)
      if (orders_[l] != 0 && (tail[l] < 0 || tail[l] >= orders_[l]))
        throw InputError("pc presentation: " + what + " is not in normal form");
  }

  // e has e[l] already reduced; multiply the part after l on the left by u_l^q.
  void absorb_power(PcElement &e, std::size_t l, const Integer &q) const {
    PcElement tail(size());
    for (std::size_t j = l + 1; j < size(); ++j)
      std::swap(tail[j], e[j]);
    PcElement rest = multiply(power(powers_[l], q), tail);
    for (std::size_t j = l + 1; j < size(); ++j)
      e[j] = std::move(rest[j]);
  }

  std::vector<std::string> names_;
  std::vector<Integer> orders_;
  std::vector<int> weights_;
  std::vector<PcElement> powers_;
  std::vector<std::vector<PcElement>> conj_;
  std::vector<std::vector<PcElement>> conj_inv_;
  std::vector<std::vector<bool>> commutes_;
  bool finalized_ = false;
};

} // namespace hinv
