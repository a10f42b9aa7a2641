#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gacalc/algebra.hpp"
#include "gacalc/matrix.hpp"
#include "gacalc/multivector.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

// A linear map on Cl(V) in blade coordinates, stored as sparse columns:
// cols[j] maps blade j to a sparse combination of blades.
template <ScalarField S>
class LinearEndo {
 public:
  explicit LinearEndo(typename Algebra<S>::Ptr alg)
      : alg_(std::move(alg)), cols_(alg_->blade_count()) {}

  static LinearEndo identity(typename Algebra<S>::Ptr alg) {
    LinearEndo m(std::move(alg));
    for (BladeMask j = 0; j < m.cols_.size(); ++j)
      m.cols_[j][j] = scalar_traits<S>::from_int(1);
    return m;
  }

  // The unique unital algebra endomorphism extending an isometry f of V:
  // a blade maps to the geometric product of the images of its factors.
  static LinearEndo clifford_extension(typename Algebra<S>::Ptr alg, const Mat<S>& f) {
    if (!is_isometry(f, alg->form(), alg->form()))
      throw NotAnIsometry("clifford extension requires an isometry");
    LinearEndo m(alg);
    std::vector<Multivector<S>> image;
    image.reserve(alg->blade_count());
    image.push_back(Multivector<S>::one(alg));
    for (BladeMask mask = 1; mask < alg->blade_count(); ++mask) {
      const int low = std::countr_zero(mask);
      const BladeMask rest = mask & (mask - 1);
      if (rest == 0) {
        image.push_back(Multivector<S>::from_vector(alg, f.col(static_cast<std::size_t>(low))));
      } else {
        image.push_back(image[BladeMask{1} << low] * image[rest]);
      }
    }
    for (BladeMask j = 0; j < alg->blade_count(); ++j)
      for (const auto& [mask, c] : image[j].terms()) m.cols_[j][mask] = c;
    return m;
  }

  // M with M . coords(y) = coords(x * y).
  static LinearEndo left_multiplication(const Multivector<S>& x) {
    LinearEndo m(x.algebra());
    const auto& alg = *x.algebra();
    for (BladeMask j = 0; j < m.cols_.size(); ++j)
      for (const auto& [mx, cx] : x.terms()) {
        auto [coef, mask] = alg.blade_product(mx, j);
        if (scalar_traits<S>::is_zero(coef)) continue;
        S v = coef * cx;
        auto it = m.cols_[j].find(mask);
        if (it == m.cols_[j].end()) {
          m.cols_[j].emplace(mask, std::move(v));
        } else {
          it->second += v;
          if (scalar_traits<S>::is_zero(it->second)) m.cols_[j].erase(it);
        }
      }
    return m;
  }

  const typename Algebra<S>::Ptr& algebra() const { return alg_; }

  void set(BladeMask row, BladeMask col, S value) {
    if (scalar_traits<S>::is_zero(value))
      cols_[col].erase(row);
    else
      cols_[col][row] = std::move(value);
  }

  S at(BladeMask row, BladeMask col) const {
    auto it = cols_[col].find(row);
    return it == cols_[col].end() ? scalar_traits<S>::from_int(0) : it->second;
  }

  // Column as a multivector: the image of a basis blade.
  Multivector<S> image_of_blade(BladeMask j) const {
    Multivector<S> out(alg_);
    for (const auto& [mask, c] : cols_[j]) out.add_term(mask, c);
    return out;
  }

  Multivector<S> apply(const Multivector<S>& x) const {
    if (!alg_->same(*x.algebra()))
      throw AlgebraMismatch("map and operand belong to different algebras");
    Multivector<S> out(alg_);
    for (const auto& [j, cj] : x.terms())
      for (const auto& [mask, c] : cols_[j]) out.add_term(mask, c * cj);
    return out;
  }

  // this o other.
  LinearEndo compose(const LinearEndo& other) const {
    if (!alg_->same(*other.alg_))
      throw AlgebraMismatch("maps belong to different algebras");
    LinearEndo out(alg_);
    for (BladeMask j = 0; j < other.cols_.size(); ++j) {
      const Multivector<S> img = apply(other.image_of_blade(j));
      for (const auto& [mask, c] : img.terms()) out.cols_[j][mask] = c;
    }
    return out;
  }

  friend bool operator==(const LinearEndo& a, const LinearEndo& b) {
    return a.alg_->same(*b.alg_) && a.cols_ == b.cols_;
  }

  // Solves (this) z = rhs by dense elimination over the blade space;
  // nullopt when singular. Intended for the small algebras this library
  // targets (the system is 2^dim x 2^dim).
  std::optional<Multivector<S>> solve(const Multivector<S>& rhs) const {
    const std::size_t n = cols_.size();
    Mat<S> dense(n, n);
    for (BladeMask j = 0; j < n; ++j)
      for (const auto& [mask, c] : cols_[j]) dense.at(mask, j) = c;
    std::vector<S> b(n, scalar_traits<S>::from_int(0));
    for (const auto& [mask, c] : rhs.terms()) b[mask] = c;
    auto x = dense.solve(b);
    if (!x) return std::nullopt;
    Multivector<S> out(alg_);
    for (BladeMask j = 0; j < n; ++j) out.add_term(j, (*x)[j]);
    return out;
  }

 private:
  typename Algebra<S>::Ptr alg_;
  std::vector<std::map<BladeMask, S>> cols_;
};

template <ScalarField S>
LinearEndo<S> clifford_extend(typename Algebra<S>::Ptr alg, const Mat<S>& f) {
  return LinearEndo<S>::clifford_extension(std::move(alg), f);
}

template <ScalarField S>
LinearEndo<S> left_mul_matrix(const Multivector<S>& x) {
  return LinearEndo<S>::left_multiplication(x);
}

}  // namespace gacalc
