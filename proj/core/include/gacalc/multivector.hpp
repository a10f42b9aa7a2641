#pragma once

#include <bit>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gacalc/algebra.hpp"
#include "gacalc/errors.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

// Sparse blade-indexed element of Cl(V): a map from blade mask to nonzero
// coefficient. Immutable value; all arithmetic returns fresh objects.
template <ScalarField S>
class Multivector {
 public:
  using Terms = std::map<BladeMask, S>;

  explicit Multivector(typename Algebra<S>::Ptr alg) : alg_(std::move(alg)) {}

  static Multivector zero(typename Algebra<S>::Ptr alg) { return Multivector(std::move(alg)); }

  static Multivector scalar(typename Algebra<S>::Ptr alg, S value) {
    Multivector m(std::move(alg));
    m.add_term(0, std::move(value));
    return m;
  }

  static Multivector one(typename Algebra<S>::Ptr alg) {
    return scalar(std::move(alg), scalar_traits<S>::from_int(1));
  }

  static Multivector blade(typename Algebra<S>::Ptr alg, BladeMask mask,
                           S coef = scalar_traits<S>::from_int(1)) {
    if (mask >= (BladeMask{1} << alg->dim()))
      throw UnknownBlade("blade outside the algebra's dimension");
    Multivector m(std::move(alg));
    m.add_term(mask, std::move(coef));
    return m;
  }

  static Multivector basis_vector(typename Algebra<S>::Ptr alg, std::size_t i) {
    return blade(std::move(alg), BladeMask{1} << i);
  }

  // Grade-1 element from coordinates in the algebra's (diagonal) basis.
  static Multivector from_vector(typename Algebra<S>::Ptr alg, const std::vector<S>& coords) {
    if (coords.size() != alg->dim())
      throw DimensionMismatch("vector has wrong length for the algebra");
    Multivector m(std::move(alg));
    for (std::size_t i = 0; i < coords.size(); ++i) m.add_term(BladeMask{1} << i, coords[i]);
    return m;
  }

  const typename Algebra<S>::Ptr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coef(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? scalar_traits<S>::from_int(0) : it->second;
  }

  // Coordinates of the grade-1 part.
  std::vector<S> vector_part() const {
    std::vector<S> v(alg_->dim(), scalar_traits<S>::from_int(0));
    for (std::size_t i = 0; i < alg_->dim(); ++i) v[i] = coef(BladeMask{1} << i);
    return v;
  }

  bool is_homogeneous(std::size_t grade) const {
    for (const auto& [mask, c] : terms_)
      if (static_cast<std::size_t>(std::popcount(mask)) != grade) return false;
    return true;
  }

  Multivector grade_part(std::size_t k) const {
    if (k > alg_->dim()) throw GradeOutOfRange("grade exceeds the algebra's dimension");
    Multivector out(alg_);
    for (const auto& [mask, c] : terms_)
      if (static_cast<std::size_t>(std::popcount(mask)) == k) out.add_term(mask, c);
    return out;
  }

  Multivector grade_involution() const {
    Multivector out(alg_);
    for (const auto& [mask, c] : terms_)
      out.add_term(mask, (std::popcount(mask) & 1) ? -c : c);
    return out;
  }

  Multivector even_part() const {
    Multivector out(alg_);
    for (const auto& [mask, c] : terms_)
      if ((std::popcount(mask) & 1) == 0) out.add_term(mask, c);
    return out;
  }

  Multivector odd_part() const {
    Multivector out(alg_);
    for (const auto& [mask, c] : terms_)
      if ((std::popcount(mask) & 1) != 0) out.add_term(mask, c);
    return out;
  }

  Multivector operator-() const {
    Multivector out(alg_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, -c);
    return out;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_algebra(b);
    Multivector out = a;
    for (const auto& [mask, c] : b.terms_) out.add_term(mask, c);
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    a.check_algebra(b);
    Multivector out = a;
    for (const auto& [mask, c] : b.terms_) out.add_term(mask, -c);
    return out;
  }

  friend Multivector operator*(const S& s, const Multivector& m) {
    Multivector out(m.alg_);
    for (const auto& [mask, c] : m.terms_) out.add_term(mask, s * c);
    return out;
  }

  friend Multivector operator*(const Multivector& m, const S& s) { return s * m; }

  // Geometric product. Dense operands accumulate into a flat scratch buffer
  // instead of the sparse map; the crossover is when the term-pair count
  // reaches the blade count.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_algebra(b);
    Multivector out(a.alg_);
    const std::size_t pair_count = a.terms_.size() * b.terms_.size();
    if (pair_count >= a.alg_->blade_count()) {
      const std::size_t n = a.alg_->blade_count();
      std::vector<S> acc(n, scalar_traits<S>::from_int(0));
      std::vector<bool> touched(n, false);
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
          auto [coef, mask] = a.alg_->blade_product(ma, mb);
          if (scalar_traits<S>::is_zero(coef)) continue;
          acc[mask] += coef * ca * cb;
          touched[mask] = true;
        }
      for (BladeMask mask = 0; mask < n; ++mask)
        if (touched[mask]) out.add_term(mask, std::move(acc[mask]));
      return out;
    }
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [coef, mask] = a.alg_->blade_product(ma, mb);
        if (scalar_traits<S>::is_zero(coef)) continue;
        out.add_term(mask, coef * ca * cb);
      }
    return out;
  }

  // Exterior product.
  friend Multivector operator^(const Multivector& a, const Multivector& b) {
    a.check_algebra(b);
    Multivector out(a.alg_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [sign, mask] = a.alg_->blade_wedge(ma, mb);
        if (sign == 0) continue;
        S c = ca * cb;
        out.add_term(mask, sign < 0 ? -c : c);
      }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.alg_->same(*b.alg_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // Canonical text form, terms in ascending blade order:
  // "2 + 3*e1 - e01 + e123". Parses back to an equal value.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const S one = scalar_traits<S>::from_int(1);
    bool first = true;
    for (const auto& [mask, c] : terms_) {
      const bool neg = scalar_traits<S>::sgn(c) < 0;
      const S mag = scalar_traits<S>::abs(c);
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      if (mask == 0) {
        out += scalar_traits<S>::str(mag);
      } else if (mag == one) {
        out += alg_->blade_name(mask);
      } else {
        out += scalar_traits<S>::str(mag) + "*" + alg_->blade_name(mask);
      }
    }
    return out;
  }

  void add_term(BladeMask mask, S c) {
    if (scalar_traits<S>::is_zero(c)) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, std::move(c));
    } else {
      it->second += c;
      if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  void check_algebra(const Multivector& other) const {
    if (!alg_->same(*other.alg_))
      throw AlgebraMismatch("operands belong to different algebras");
  }

  typename Algebra<S>::Ptr alg_;
  Terms terms_;
};

template <ScalarField S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

template <ScalarField S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
  return a ^ b;
}

template <ScalarField S>
Multivector<S> grade_part(const Multivector<S>& x, std::size_t k) {
  return x.grade_part(k);
}

template <ScalarField S>
Multivector<S> grade_involution(const Multivector<S>& x) {
  return x.grade_involution();
}

// x = x_even + x_odd by grade parity.
template <ScalarField S>
std::pair<Multivector<S>, Multivector<S>> even_odd_split(const Multivector<S>& x) {
  return {x.even_part(), x.odd_part()};
}

}  // namespace gacalc
