#pragma once

#include "twalex/laurent_poly.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace twalex {

/// Dense rectangular matrix over Z[t, t^-1].
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &r : rows) {
      assert(r.size() == cols_);
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static LaurentMatrix identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LaurentPoly &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto &e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Copies the block with top-left corner (r0, c0).
  LaurentMatrix block(std::size_t r0, std::size_t c0, std::size_t rows,
                      std::size_t cols) const {
    LaurentMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const LaurentMatrix &b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  LaurentMatrix select_rows(const std::vector<std::size_t> &idx) const {
    LaurentMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
  }

  LaurentMatrix select_cols(const std::vector<std::size_t> &idx) const {
    LaurentMatrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
  }

  LaurentMatrix &operator+=(const LaurentMatrix &o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  LaurentMatrix &operator-=(const LaurentMatrix &o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix &b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix &b) { return a -= b; }

  friend LaurentMatrix operator*(const LaurentMatrix &a, const LaurentMatrix &b) {
    assert(a.cols_ == b.rows_);
    LaurentMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto &aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend LaurentMatrix operator*(const LaurentPoly &c, LaurentMatrix m) {
    for (auto &e : m.entries_) e = c * e;
    return m;
  }

  friend bool operator==(const LaurentMatrix &, const LaurentMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Exact determinant by fraction-free Bareiss elimination. Each column is
/// first multiplied by the power of t that moves it into Z[t]; the shift is
/// restored at the end. The 0x0 determinant is 1.
inline LaurentPoly det_laurent(const LaurentMatrix &input) {
  if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  LaurentMatrix m = input;
  long total_shift = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    long lo = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).low()) : m(i, j).low();
      any = true;
    }
    if (!any) return {};
    for (std::size_t i = 0; i < n; ++i) m(i, j) = m(i, j).shifted(-lo);
    total_shift += lo;
  }

  int sign = 1;
  LaurentPoly previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      // Prefer the nonzero pivot of smallest span.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero() && (best == n || m(i, k).span() < m(best, k).span()))
          best = i;
      if (best == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(best, j));
      sign = -sign;
    }
    const LaurentPoly &pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = pivot * m(i, j) - m(i, k) * m(k, j);
        auto q = exact_divide(v, previous);
        if (!q) throw DivisionFailed("Bareiss step is not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly{};
    }
    previous = pivot;
  }
  LaurentPoly d = m(n - 1, n - 1).shifted(total_shift);
  return sign < 0 ? -d : d;
}

/// Characteristic polynomial of the module after restricting scalars along
/// s = t^r: c0^r * prod (s - a_j^r) where f = c0 * prod (t - a_j) is the
/// unit-normalized input. Computed as the Sylvester determinant of
/// Res_t(f(t), t^r - s) with entries in Z[s], then sign-fixed so the leading
/// coefficient is positive. Roots are never materialized.
inline LaurentPoly base_change(const LaurentPoly &f, std::size_t r) {
  if (r == 0) throw Error("base change needs r >= 1");
  if (f.is_zero()) throw ZeroArgument("base change of the zero polynomial");
  const detail::Poly a = unit_normalized(f).dense();
  const std::size_t m = a.size() - 1; // deg f
  if (m == 0) return LaurentPoly(pow(a[0], r));
  const std::size_t size = m + r;
  LaurentMatrix syl(size, size);
  // Rows 0..r-1: shifted coefficients of f, highest degree first.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k <= m; ++k) syl(i, i + k) = LaurentPoly(a[m - k]);
  // Rows r..r+m-1: shifted coefficients of t^r - s.
  const LaurentPoly minus_s = -LaurentPoly::t(1);
  for (std::size_t i = 0; i < m; ++i) {
    syl(r + i, i) = 1;
    syl(r + i, i + r) = syl(r + i, i + r) + minus_s;
  }
  LaurentPoly res = det_laurent(syl);
  if (res.is_zero()) throw DivisionFailed("base change resultant vanished");
  return res.leading() < 0 ? -res : res;
}

} // namespace twalex
