#pragma once

#include "twalex/integer.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twalex {

/// Dense integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &r : rows) {
      assert(r.size() == cols_);
      for (long v : r) entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer &factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  IntMatrix transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    assert(a.cols_ == b.rows_);
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Smith form left * M * right = D. `diagonal` lists the nonzero invariant
/// factors d_1 | d_2 | ... (all positive); the rest of D is zero.
struct SmithResult {
  std::vector<Integer> diagonal;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

/// Smith normal form over Z. Pivots on the entry of least nonzero absolute
/// value. Transforms are only accumulated when requested.
inline SmithResult smith_normal_form(IntMatrix d, bool with_transforms = false) {
  const std::size_t m = d.rows(), n = d.cols();
  std::optional<IntMatrix> left, right;
  if (with_transforms) {
    left = IntMatrix::identity(m);
    right = IntMatrix::identity(n);
  }
  SmithResult result;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    while (true) {
      // Minimal nonzero pivot in the trailing submatrix.
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == m || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        result.left = std::move(left);
        result.right = std::move(right);
        return result;
      }
      d.swap_rows(k, pi);
      d.swap_cols(k, pj);
      if (left) left->swap_rows(k, pi);
      if (right) right->swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (d(i, k) == 0) continue;
        const Integer q = d(i, k) / d(k, k);
        d.add_row(i, k, -q);
        if (left) left->add_row(i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        const Integer q = d(k, j) / d(k, k);
        d.add_col(j, k, -q);
        if (right) right->add_col(j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = k + 1; i < m && bad == m; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (d(i, j) % d(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad != m) {
        d.add_row(k, bad, 1);
        if (left) left->add_row(k, bad, 1);
        continue;
      }
      break;
    }
    if (d(k, k) < 0) {
      d.negate_row(k);
      if (left) left->negate_row(k);
    }
    result.diagonal.push_back(d(k, k));
  }
  result.left = std::move(left);
  result.right = std::move(right);
  return result;
}

/// Z^rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... .
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }

  /// Order of a finite group; 0 stands for infinite.
  Integer order() const {
    if (rank != 0) return 0;
    Integer o = 1;
    for (const auto &d : torsion) o *= d;
    return o;
  }

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// Invariant factors of Z^cols / (row space of M).
inline AbelianGroup cokernel_invariants(const IntMatrix &m) {
  const auto snf = smith_normal_form(m);
  AbelianGroup g;
  g.rank = m.cols() - snf.diagonal.size();
  for (const auto &d : snf.diagonal)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

/// Direct sum, brought back to invariant factor form.
inline AbelianGroup direct_sum(const AbelianGroup &a, const AbelianGroup &b) {
  const std::size_t n = a.torsion.size() + b.torsion.size();
  IntMatrix d(n, n);
  std::size_t i = 0;
  for (const auto &x : a.torsion) d(i, i) = x, ++i;
  for (const auto &x : b.torsion) d(i, i) = x, ++i;
  AbelianGroup out = cokernel_invariants(d);
  out.rank += a.rank + b.rank;
  return out;
}

inline std::size_t integer_rank(const IntMatrix &m) {
  return smith_normal_form(m).diagonal.size();
}

/// `0`, `Z`, `Z^2 + Z/3`, ...
inline std::string to_string(const AbelianGroup &g) {
  std::string out;
  if (g.rank == 1) out = "Z";
  if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
  for (const auto &d : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + to_string(d);
  }
  return out.empty() ? "0" : out;
}

} // namespace twalex
