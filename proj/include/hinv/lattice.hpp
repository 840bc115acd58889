#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hinv/error.hpp"
#include "hinv/integer.hpp"

namespace hinv {

using IntVector = std::vector<Integer>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector> &rows, std::size_t cols) {
    IntMatrix m(0, cols);
    for (const IntVector &r : rows)
      m.append_row(r);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const {
    auto s = row(r);
    return IntVector(s.begin(), s.end());
  }

  void append_row(std::span<const Integer> r) {
    if (r.size() != cols_)
      throw InternalError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(src, c) != 0)
        (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, src) != 0)
        (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (auto &x : row(r))
      x = -x;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer &x) { return x == 0; });
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw InternalError("matrix product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer &x = a(i, k);
        if (x == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0)
            p(i, j) += x * b(k, j);
      }
    return p;
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

inline IntVector row_times(std::span<const Integer> v, const IntMatrix &m) {
  IntVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0)
      continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0)
        out[c] += v[r] * m(r, c);
  }
  return out;
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

// Row-style Hermite normal form H = U * M. The first rank() rows of H are
// nonzero with strictly increasing pivot columns, positive pivots, and
// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

inline HermiteForm hermite_form(IntMatrix M, bool with_transform = true) {
  const std::size_t m = M.rows(), n = M.cols();
  IntMatrix U = with_transform ? IntMatrix::identity(m) : IntMatrix();
  auto add = [&](std::size_t dst, std::size_t src, const Integer &k) {
    M.add_row(dst, src, k);
    if (with_transform)
      U.add_row(dst, src, k);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    M.swap_rows(a, b);
    if (with_transform)
      U.swap_rows(a, b);
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c over rows r.., always reducing by the smallest entry.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (M(i, c) != 0 && (best == m || abs(M(i, c)) < abs(M(best, c))))
          best = i;
      if (best == m)
        break;
      swap(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (M(i, c) == 0)
          continue;
        add(i, r, -(M(i, c) / M(r, c)));
        others |= M(i, c) != 0;
      }
      if (!others)
        break;
    }
    if (M(r, c) == 0)
      continue;
    if (M(r, c) < 0) {
      M.negate_row(r);
      if (with_transform)
        U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i)
      if (M(i, c) != 0)
        add(i, r, -floor_div(M(i, c), M(r, c)));
    pivots.push_back(c);
    ++r;
  }
  return {std::move(M), std::move(U), std::move(pivots)};
}

inline std::size_t rank(const IntMatrix &M) { return hermite_form(M, false).rank(); }

// Basis (as rows) of the saturated lattice {v : v * M = 0}.
inline IntMatrix left_kernel(const IntMatrix &M) {
  HermiteForm hf = hermite_form(M, true);
  IntMatrix K(0, M.rows());
  for (std::size_t r = hf.rank(); r < M.rows(); ++r)
    K.append_row(hf.U.row(r));
  return K;
}

// Coordinates with respect to the rows of B; the Hermite form is computed once.
class LatticeSolver {
public:
  explicit LatticeSolver(const IntMatrix &B) : rows_(B.rows()), hf_(hermite_form(B, true)) {}

  // Integer coefficients c with c * B = v, if v lies in the row lattice of B.
  std::optional<IntVector> solve(std::span<const Integer> v) const {
    const std::size_t cols = hf_.H.cols();
    if (v.size() != cols)
      throw InternalError("solve_in_lattice: length mismatch");
    IntVector res(v.begin(), v.end());
    IntVector d(hf_.rank());
    for (std::size_t i = 0; i < hf_.rank(); ++i) {
      std::size_t p = hf_.pivot_cols[i];
      if (res[p] % hf_.H(i, p) != 0)
        return std::nullopt;
      d[i] = res[p] / hf_.H(i, p);
      if (d[i] != 0)
        for (std::size_t c = p; c < cols; ++c)
          res[c] -= d[i] * hf_.H(i, c);
    }
    if (!is_zero(res))
      return std::nullopt;
    IntVector c(rows_);
    for (std::size_t i = 0; i < hf_.rank(); ++i)
      if (d[i] != 0)
        for (std::size_t k = 0; k < rows_; ++k)
          c[k] += d[i] * hf_.U(i, k);
    return c;
  }

  bool contains(std::span<const Integer> v) const { return solve(v).has_value(); }

private:
  std::size_t rows_;
  HermiteForm hf_;
};

inline std::optional<IntVector> solve_in_lattice(const IntMatrix &B,
                                                 std::span<const Integer> v) {
  return LatticeSolver(B).solve(v);
}

// Nonzero Smith invariants d_1 | d_2 | ... (all positive).
inline std::vector<Integer> smith_invariants(IntMatrix A) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pick_min = [&]() {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (bi == m || abs(A(i, j)) < abs(A(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m)
        return false;
      A.swap_rows(t, bi);
      A.swap_cols(t, bj);
      return true;
    };
    if (!pick_min())
      break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (A(i, t) != 0) {
          A.add_row(i, t, -(A(i, t) / A(t, t)));
          clean &= A(i, t) == 0;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (A(t, j) != 0) {
          A.add_col(j, t, -(A(t, j) / A(t, t)));
          clean &= A(t, j) == 0;
        }
      if (!clean) {
        pick_min();
        continue;
      }
      // Divisibility: fold an offending row into row t and keep going.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      A.add_row(t, bad, 1);
    }
    diag.push_back(abs(A(t, t)));
  }
  return diag;
}

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // each >= 2, each dividing the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  std::string to_string() const {
    std::string s;
    auto plus = [&] {
      if (!s.empty())
        s += " + ";
    };
    if (free_rank > 0) {
      s += "Z";
      if (free_rank > 1)
        s += "^" + std::to_string(free_rank);
    }
    for (const Integer &t : torsion) {
      plus();
      s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
  friend std::ostream &operator<<(std::ostream &os, const AbelianInvariants &a) {
    return os << a.to_string();
  }
};

// Invariants of Z^ngens / (row lattice of relations).
inline AbelianInvariants cokernel_invariants(const IntMatrix &relations) {
  AbelianInvariants inv;
  std::vector<Integer> d = smith_invariants(relations);
  inv.free_rank = relations.cols() - d.size();
  for (const Integer &x : d)
    if (x > 1)
      inv.torsion.push_back(x);
  return inv;
}

// Invariants of L / R where L is the row lattice of `basis` (independent rows)
// and R, spanned by `relations`, is a sublattice of L.
inline AbelianInvariants quotient_invariants(const IntMatrix &basis,
                                             const IntMatrix &relations) {
  IntMatrix coords(0, basis.rows());
  LatticeSolver solver(basis);
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    auto c = solver.solve(relations.row(r));
    if (!c)
      throw InternalError("quotient_invariants: relation outside the lattice");
    coords.append_row(*c);
  }
  return cokernel_invariants(coords);
}

// Row lattices compared through their reduced Hermite forms.
inline bool same_row_lattice(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.cols())
    return false;
  HermiteForm ha = hermite_form(a, false), hb = hermite_form(b, false);
  if (ha.rank() != hb.rank())
    return false;
  for (std::size_t r = 0; r < ha.rank(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (ha.H(r, c) != hb.H(r, c))
        return false;
  return true;
}

} // namespace hinv
