#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gacalc/errors.hpp"
#include "gacalc/matrix.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

inline constexpr std::size_t kMaxDim = 12;

template <ScalarField S>
using Vec = std::vector<S>;

// A list of linearly independent vectors, stored as matrix columns.
template <ScalarField S>
class Subspace {
 public:
  Subspace() : basis_(0, 0) {}
  explicit Subspace(Mat<S> basis) : basis_(std::move(basis)) {
    if (basis_.cols() > 0 && basis_.rank() != basis_.cols())
      throw Error("subspace basis vectors must be linearly independent");
  }

  static Subspace zero(std::size_t ambient_dim) { return Subspace(Mat<S>(ambient_dim, 0)); }

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec<S>>& vectors) {
    Mat<S> b(ambient_dim, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (vectors[j].size() != ambient_dim)
        throw DimensionMismatch("subspace vector has wrong length");
      b.set_col(j, vectors[j]);
    }
    return Subspace(std::move(b));
  }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Mat<S>& basis() const { return basis_; }
  Vec<S> basis_vector(std::size_t j) const { return basis_.col(j); }

  bool contains(const Vec<S>& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector has wrong length");
    Mat<S> ext(ambient_dim(), dim() + 1);
    for (std::size_t j = 0; j < dim(); ++j) ext.set_col(j, basis_.col(j));
    ext.set_col(dim(), v);
    return ext.rank() == dim();
  }

  bool contains(const Subspace& other) const {
    for (std::size_t j = 0; j < other.dim(); ++j)
      if (!contains(other.basis_vector(j))) return false;
    return true;
  }

 private:
  Mat<S> basis_;
};

// A symmetric bilinear form on an n-dimensional space (n <= 12). The
// congruence diagonalization is computed once at construction and orders the
// diagonal degenerate-first, then positive, then negative.
template <ScalarField S>
class QuadraticForm {
 public:
  static QuadraticForm from_gram(Mat<S> gram) {
    if (gram.rows() != gram.cols()) throw DimensionMismatch("gram matrix must be square");
    if (gram.rows() == 0 || gram.rows() > kMaxDim)
      throw DimensionMismatch("dimension must be between 1 and 12");
    if (!gram.is_symmetric()) throw Error("gram matrix must be symmetric");
    return QuadraticForm(std::move(gram));
  }

  // Diagonal form with r zero entries first, then p entries +1, then q
  // entries -1.
  static QuadraticForm from_signature(std::size_t p, std::size_t q, std::size_t r) {
    const std::size_t n = p + q + r;
    if (n == 0 || n > kMaxDim) throw DimensionMismatch("dimension must be between 1 and 12");
    Mat<S> g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < r)
        g.at(i, i) = scalar_traits<S>::from_int(0);
      else if (i < r + p)
        g.at(i, i) = scalar_traits<S>::from_int(1);
      else
        g.at(i, i) = scalar_traits<S>::from_int(-1);
    }
    return QuadraticForm(std::move(g));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Mat<S>& gram() const { return gram_; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (i != j && !scalar_traits<S>::is_zero(gram_.at(i, j))) return false;
    return true;
  }

  S bilinear(const Vec<S>& u, const Vec<S>& v) const {
    if (u.size() != dim() || v.size() != dim())
      throw DimensionMismatch("bilinear arguments must have the form's dimension");
    S acc = scalar_traits<S>::from_int(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (scalar_traits<S>::is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) acc += u[i] * gram_.at(i, j) * v[j];
    }
    return acc;
  }

  // Change of basis P with P^T gram P diagonal; columns of P are the
  // diagonalized basis vectors expressed in the original basis.
  const Mat<S>& diag_basis() const { return diag_.basis; }
  const std::vector<S>& diag_metric() const { return diag_.diag; }

  // The same space in its diagonalized basis.
  QuadraticForm diagonalized() const {
    Mat<S> g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) g.at(i, i) = diag_.diag[i];
    return QuadraticForm(std::move(g));
  }

  Vec<S> to_diag_coords(const Vec<S>& v) const { return diag_basis_inv_.apply(v); }
  Vec<S> from_diag_coords(const Vec<S>& v) const { return diag_.basis.apply(v); }

  // Counts of positive, negative, zero diagonal entries.
  struct Signature {
    std::size_t positive, negative, zero;
  };
  Signature signature() const {
    Signature s{0, 0, 0};
    for (const S& d : diag_.diag) {
      const int sg = scalar_traits<S>::sgn(d);
      if (sg > 0)
        ++s.positive;
      else if (sg < 0)
        ++s.negative;
      else
        ++s.zero;
    }
    return s;
  }

  bool is_degenerate() const { return signature().zero > 0; }

  // Basis of the kernel of the gram matrix: the zero-diagonal columns of the
  // diagonalizing basis change.
  Subspace<S> radical() const {
    std::vector<Vec<S>> vs;
    for (std::size_t j = 0; j < dim(); ++j)
      if (scalar_traits<S>::is_zero(diag_.diag[j])) vs.push_back(diag_.basis.col(j));
    return Subspace<S>::span(dim(), vs);
  }

  // The induced form on the canonical transversal of V/U. Requires U
  // radical; the transversal keeps the non-pivot coordinates of U in their
  // original order.
  QuadraticForm quotient(const Subspace<S>& u_sub) const {
    if (u_sub.ambient_dim() != dim())
      throw DimensionMismatch("quotient subspace lives in a different space");
    for (std::size_t j = 0; j < u_sub.dim(); ++j) {
      const Vec<S> u = u_sub.basis_vector(j);
      for (std::size_t i = 0; i < dim(); ++i) {
        Vec<S> e(dim(), scalar_traits<S>::from_int(0));
        e[i] = scalar_traits<S>::from_int(1);
        if (!scalar_traits<S>::is_zero(bilinear(u, e)))
          throw NotRadical("subspace pairs nonzero with a basis vector");
      }
    }
    if (u_sub.dim() == 0) return *this;
    const std::vector<std::size_t> t = transversal_indices(u_sub);
    if (t.empty()) throw DimensionMismatch("quotient by the whole space");
    Mat<S> g(t.size(), t.size());
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) g.at(a, b) = gram_.at(t[a], t[b]);
    return QuadraticForm(std::move(g));
  }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.gram_ == b.gram_;
  }

 private:
  explicit QuadraticForm(Mat<S> gram) : gram_(std::move(gram)) {
    diag_ = congruence_diagonalize(gram_);
    auto inv = diag_.basis.inverse();
    diag_basis_inv_ = *inv;  // congruence basis changes are invertible
  }

  // Standard basis indices avoiding the pivot coordinates of u_sub's
  // column-echelon form; these represent a transversal of V/U.
  std::vector<std::size_t> transversal_indices(const Subspace<S>& u_sub) const {
    Mat<S> m = u_sub.basis().transposed();  // rows = subspace vectors
    std::vector<bool> is_pivot(dim(), false);
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim() && row < m.rows(); ++c) {
      std::size_t piv = row;
      while (piv < m.rows() && scalar_traits<S>::is_zero(m.at(piv, c))) ++piv;
      if (piv == m.rows()) continue;
      for (std::size_t j = 0; j < dim(); ++j) std::swap(m.at(piv, j), m.at(row, j));
      for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
        if (r2 == row || scalar_traits<S>::is_zero(m.at(r2, c))) continue;
        const S f = m.at(r2, c) / m.at(row, c);
        for (std::size_t j = 0; j < dim(); ++j) m.at(r2, j) -= f * m.at(row, j);
      }
      is_pivot[c] = true;
      ++row;
    }
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!is_pivot[i]) t.push_back(i);
    return t;
  }

  Mat<S> gram_;
  CongruenceDiagonalization<S> diag_;
  Mat<S> diag_basis_inv_;
};

// map: src -> dst as a dst.dim x src.dim matrix; true iff it preserves the
// bilinear form.
template <ScalarField S>
bool is_isometry(const Mat<S>& map, const QuadraticForm<S>& src, const QuadraticForm<S>& dst) {
  if (map.cols() != src.dim() || map.rows() != dst.dim())
    throw DimensionMismatch("isometry candidate has wrong shape");
  return map.transposed() * dst.gram() * map == src.gram();
}

// Isometry of the space onto itself, invertible, fixing the radical
// elementwise.
template <ScalarField S>
bool is_weak_orthogonal(const Mat<S>& map, const QuadraticForm<S>& form) {
  if (!is_isometry(map, form, form)) return false;
  if (!map.inverse().has_value()) return false;
  const Subspace<S> rad = form.radical();
  for (std::size_t j = 0; j < rad.dim(); ++j) {
    const Vec<S> b = rad.basis_vector(j);
    if (map.apply(b) != b) return false;
  }
  return true;
}

// An orthogonal complement W of the degenerate line F e0, normalized to the
// canonical basis w_t = omega_W([e_t]) for each transversal index t. Defined
// on a diagonal form; e0 is the chosen degenerate generator.
template <ScalarField S>
class Complement {
 public:
  // W spanned by the coordinate vectors other than e0.
  static Complement coordinate(const QuadraticForm<S>& form, std::size_t e0_index = 0) {
    check_form(form, e0_index);
    const std::size_t n = form.dim();
    Mat<S> w(n, n - 1);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == e0_index) continue;
      w.at(i, j) = scalar_traits<S>::from_int(1);
      ++j;
    }
    return Complement(form, e0_index, std::move(w));
  }

  static Complement from_subspace(const QuadraticForm<S>& form, std::size_t e0_index,
                                  const Subspace<S>& spec) {
    check_form(form, e0_index);
    const std::size_t n = form.dim();
    if (spec.ambient_dim() != n || spec.dim() != n - 1)
      throw NotAComplement("complement must have dimension dim-1");
    // Spans V together with e0 (so in particular excludes e0).
    Mat<S> full(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) full.set_col(j, spec.basis_vector(j));
    Vec<S> e0(n, scalar_traits<S>::from_int(0));
    e0[e0_index] = scalar_traits<S>::from_int(1);
    full.set_col(n - 1, e0);
    if (full.rank() != n) throw NotAComplement("subspace does not complement the e0 line");
    // Orthogonality to e0 is automatic for complements of a radical line;
    // assert it anyway.
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (!scalar_traits<S>::is_zero(form.bilinear(spec.basis_vector(j), e0)))
        throw NotAComplement("complement is not orthogonal to e0");
    // Canonicalize: w_t = omega_W([e_t]). Solving on the transversal
    // coordinates of the given basis yields the unique section with image W.
    Mat<S> q(n - 1, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Vec<S> b = spec.basis_vector(j);
      std::size_t a = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == e0_index) continue;
        q.at(a, j) = b[i];
        ++a;
      }
    }
    auto qinv = q.inverse();
    if (!qinv.has_value()) throw NotAComplement("subspace does not complement the e0 line");
    Mat<S> w = spec.basis() * (*qinv);
    return Complement(form, e0_index, std::move(w));
  }

  const QuadraticForm<S>& form() const { return form_; }
  std::size_t dim() const { return form_.dim(); }
  std::size_t e0_index() const { return e0_; }

  Vec<S> e0_vector() const {
    Vec<S> v(dim(), scalar_traits<S>::from_int(0));
    v[e0_] = scalar_traits<S>::from_int(1);
    return v;
  }

  // Transversal indices in ascending order (all but e0); quotient
  // coordinate j corresponds to basis vector e_{transversal(j)}.
  std::size_t transversal_index(std::size_t j) const { return j < e0_ ? j : j + 1; }

  // The section omega_W on transversal coordinates: a dim x (dim-1) matrix
  // whose column j is omega_W([e_{transversal(j)}]).
  const Mat<S>& canonical_section() const { return w_basis_; }

  Subspace<S> subspace() const { return Subspace<S>(w_basis_); }

  // v = w + lambda e0 with w in W; the unique such pair.
  std::pair<Vec<S>, S> project_vector(const Vec<S>& v) const {
    if (v.size() != dim()) throw DimensionMismatch("vector has wrong length");
    Vec<S> quotient_coords;
    quotient_coords.reserve(dim() - 1);
    for (std::size_t i = 0; i < dim(); ++i)
      if (i != e0_) quotient_coords.push_back(v[i]);
    Vec<S> w = w_basis_.apply(quotient_coords);
    const S lambda = v[e0_] - w[e0_];
    return {std::move(w), lambda};
  }

  friend bool operator==(const Complement& a, const Complement& b) {
    return a.e0_ == b.e0_ && a.form_ == b.form_ && a.w_basis_ == b.w_basis_;
  }

 private:
  Complement(QuadraticForm<S> form, std::size_t e0, Mat<S> w_basis)
      : form_(std::move(form)), e0_(e0), w_basis_(std::move(w_basis)) {}

  static void check_form(const QuadraticForm<S>& form, std::size_t e0_index) {
    if (!form.is_diagonal())
      throw Error("complements are specified on the diagonalized basis");
    if (e0_index >= form.dim()) throw DimensionMismatch("e0 index out of range");
    if (!scalar_traits<S>::is_zero(form.gram().at(e0_index, e0_index)))
      throw NoDegenerateGenerator("chosen e0 is not degenerate");
    if (form.dim() < 2) throw DimensionMismatch("no room for a complement");
  }

  QuadraticForm<S> form_;
  std::size_t e0_;
  Mat<S> w_basis_;
};

template <ScalarField S>
S bilinear(const QuadraticForm<S>& form, const Vec<S>& u, const Vec<S>& v) {
  return form.bilinear(u, v);
}

template <ScalarField S>
Subspace<S> radical(const QuadraticForm<S>& form) {
  return form.radical();
}

template <ScalarField S>
QuadraticForm<S> quotient_form(const QuadraticForm<S>& form, const Subspace<S>& u_sub) {
  return form.quotient(u_sub);
}

template <ScalarField S>
Mat<S> canonical_section(const Complement<S>& comp) {
  return comp.canonical_section();
}

template <ScalarField S>
std::pair<Vec<S>, S> playfair_project_vector(const Vec<S>& v, const Complement<S>& comp) {
  return comp.project_vector(v);
}

}  // namespace gacalc
