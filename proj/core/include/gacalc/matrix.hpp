#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "gacalc/errors.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

// Dense row-major matrix over an exact or floating scalar field. Sized for
// the small systems this library solves (vector-space maps up to dim 12 and
// blade-space maps up to 2^12); elimination uses max-|pivot| selection,
// which is exact for rationals and stable enough for doubles.
template <ScalarField S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, scalar_traits<S>::from_int(0)) {}
  Mat(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      for (const auto& v : r) a_.push_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = scalar_traits<S>::from_int(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<S> col(std::size_t j) const {
    std::vector<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  void set_col(std::size_t j, const std::vector<S>& c) {
    if (c.size() != rows_) throw DimensionMismatch("column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (scalar_traits<S>::is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<S> y(rows_, scalar_traits<S>::from_int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

  std::size_t rank() const {
    Mat m = *this;
    return m.forward_eliminate(cols_);
  }

  // Solves A x = b for square A; nullopt when singular.
  std::optional<std::vector<S>> solve(const std::vector<S>& b) const {
    if (rows_ != cols_ || b.size() != rows_)
      throw DimensionMismatch("solve expects a square system");
    const std::size_t n = rows_;
    Mat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, n) = b[i];
    }
    if (aug.forward_eliminate(n) < n) return std::nullopt;
    std::vector<S> x(n, scalar_traits<S>::from_int(0));
    for (std::size_t ii = n; ii-- > 0;) {
      S acc = aug.at(ii, n);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= aug.at(ii, j) * x[j];
      x[ii] = acc / aug.at(ii, ii);
    }
    return x;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = rows_;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, n + i) = scalar_traits<S>::from_int(1);
    }
    if (aug.forward_eliminate(n) < n) return std::nullopt;
    // Back-substitute to reduced row echelon.
    for (std::size_t ii = n; ii-- > 0;) {
      const S inv_p = scalar_traits<S>::from_int(1) / aug.at(ii, ii);
      for (std::size_t j = ii; j < 2 * n; ++j) aug.at(ii, j) = aug.at(ii, j) * inv_p;
      for (std::size_t r = 0; r < ii; ++r) {
        const S f = aug.at(r, ii);
        if (scalar_traits<S>::is_zero(f)) continue;
        for (std::size_t j = ii; j < 2 * n; ++j) aug.at(r, j) -= f * aug.at(ii, j);
      }
    }
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
  }

 private:
  // In-place row echelon over the leading limit_cols columns, row swaps
  // only; returns the rank of that block. When the block is square and full
  // rank, the pivots land on the diagonal.
  std::size_t forward_eliminate(std::size_t limit_cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < limit_cols && rank < rows_; ++c) {
      std::size_t piv = rank;
      bool found = false;
      S best = scalar_traits<S>::from_int(0);
      for (std::size_t r = rank; r < rows_; ++r) {
        if (scalar_traits<S>::is_zero(at(r, c))) continue;
        const S mag = scalar_traits<S>::abs(at(r, c));
        if (!found || best < mag) {
          piv = r;
          best = mag;
          found = true;
        }
      }
      if (!found) continue;
      if (piv != rank)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (scalar_traits<S>::is_zero(at(r, c))) continue;
        const S f = at(r, c) / at(rank, c);
        at(r, c) = scalar_traits<S>::from_int(0);
        for (std::size_t j = c + 1; j < cols_; ++j) at(r, j) -= f * at(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  std::size_t rows_, cols_;
  std::vector<S> a_;
};

// Congruence diagonalization of a symmetric matrix: an invertible basis
// change P with P^T G P diagonal. Symmetric Gaussian elimination, pivoting
// on nonzero diagonal entries; when every remaining diagonal entry vanishes
// but an off-diagonal survives, the substitution x -> x + y makes a usable
// pivot (valid away from characteristic 2).
template <ScalarField S>
struct CongruenceDiagonalization {
  Mat<S> basis;         // P, columns are the new basis vectors
  std::vector<S> diag;  // diagonal of P^T G P
};

template <ScalarField S>
CongruenceDiagonalization<S> congruence_diagonalize(const Mat<S>& gram) {
  if (!gram.is_symmetric()) throw DimensionMismatch("gram matrix must be symmetric");
  const std::size_t n = gram.rows();
  Mat<S> g = gram;
  Mat<S> p = Mat<S>::identity(n);
  const S zero = scalar_traits<S>::from_int(0);

  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(g.at(r, i), g.at(r, j));
      std::swap(p.at(r, i), p.at(r, j));
    }
    for (std::size_t c = 0; c < n; ++c) std::swap(g.at(i, c), g.at(j, c));
  };
  // column j += f * column i, mirrored on rows of g to stay congruent
  auto add_basis = [&](std::size_t j, std::size_t i, const S& f) {
    for (std::size_t r = 0; r < n; ++r) {
      g.at(r, j) += f * g.at(r, i);
      p.at(r, j) += f * p.at(r, i);
    }
    for (std::size_t c = 0; c < n; ++c) g.at(j, c) += f * g.at(i, c);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (scalar_traits<S>::is_zero(g.at(k, k))) {
      std::size_t d = k;
      while (d < n && scalar_traits<S>::is_zero(g.at(d, d))) ++d;
      if (d < n) {
        swap_basis(k, d);
      } else {
        std::size_t off = k;
        while (off < n && scalar_traits<S>::is_zero(g.at(k, off))) ++off;
        if (off == n) continue;  // row is clear: degenerate direction
        add_basis(k, off, scalar_traits<S>::from_int(1));
      }
    }
    const S pivot = g.at(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (scalar_traits<S>::is_zero(g.at(k, j))) continue;
      add_basis(j, k, -(g.at(k, j) / pivot));
    }
  }

  // Canonical order: degenerate directions first, then positive, then
  // negative diagonal entries (stable within each class).
  std::vector<std::size_t> order;
  for (int cls = 0; cls < 3; ++cls)
    for (std::size_t i = 0; i < n; ++i) {
      const int s = scalar_traits<S>::sgn(g.at(i, i));
      if ((cls == 0 && s == 0) || (cls == 1 && s > 0) || (cls == 2 && s < 0))
        order.push_back(i);
    }
  CongruenceDiagonalization<S> out;
  out.basis = Mat<S>(n, n);
  out.diag.assign(n, zero);
  for (std::size_t j = 0; j < n; ++j) {
    out.diag[j] = g.at(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.basis.at(r, j) = p.at(r, order[j]);
  }
  return out;
}

}  // namespace gacalc
