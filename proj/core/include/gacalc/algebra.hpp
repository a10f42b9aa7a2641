#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gacalc/errors.hpp"
#include "gacalc/quadratic_space.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

using BladeMask = std::uint32_t;

// Number of transpositions needed to interleave two ascending index lists,
// mod 2; the sign of the basis-blade product before metric contraction.
inline int blade_reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// The Clifford algebra context: a diagonalized quadratic form plus the blade
// arithmetic over it. Multivectors hold a shared pointer to one of these;
// the object is immutable after construction.
template <ScalarField S>
class Algebra {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  static Ptr from_form(const QuadraticForm<S>& form) {
    return Ptr(new Algebra(form.diagonalized()));
  }

  static Ptr from_signature(std::size_t p, std::size_t q, std::size_t r) {
    return Ptr(new Algebra(QuadraticForm<S>::from_signature(p, q, r)));
  }

  // The flagship instance: 3D Euclidean plane-based PGA, Cl(3,0,1).
  static Ptr pga3() { return from_signature(3, 0, 1); }

  std::size_t dim() const { return form_.dim(); }
  std::size_t blade_count() const { return std::size_t{1} << dim(); }
  const QuadraticForm<S>& form() const { return form_; }
  const S& metric(std::size_t i) const { return metric_[i]; }
  const std::vector<S>& metric() const { return metric_; }

  bool is_degenerate_index(std::size_t i) const {
    return scalar_traits<S>::is_zero(metric_[i]);
  }

  bool has_degenerate_generator() const { return e0_.has_value(); }

  // The chosen degenerate generator (first zero-metric index by default).
  std::size_t e0_index() const {
    if (!e0_) throw NoDegenerateGenerator("algebra has no degenerate generator");
    return *e0_;
  }
  BladeMask e0_mask() const { return BladeMask{1} << e0_index(); }

  // Geometric product of two basis blades: result mask is the symmetric
  // difference, the coefficient is the reorder sign times the metric of each
  // contracted index. Small algebras with a +-1/0 metric read a table
  // computed once at construction.
  std::pair<S, BladeMask> blade_product(BladeMask a, BladeMask b) const {
    if (!product_table_.empty())
      return {scalar_traits<S>::from_int(product_table_[(std::size_t{a} << dim()) | b]),
              a ^ b};
    S coef = scalar_traits<S>::from_int(blade_reorder_sign(a, b));
    BladeMask common = a & b;
    while (common != 0) {
      const int i = std::countr_zero(common);
      if (scalar_traits<S>::is_zero(metric_[static_cast<std::size_t>(i)]))
        return {scalar_traits<S>::from_int(0), 0};
      coef = coef * metric_[static_cast<std::size_t>(i)];
      common &= common - 1;
    }
    return {std::move(coef), a ^ b};
  }

  // Exterior product of basis blades: zero on intersecting masks, otherwise
  // the signed union.
  std::pair<int, BladeMask> blade_wedge(BladeMask a, BladeMask b) const {
    if ((a & b) != 0) return {0, 0};
    return {blade_reorder_sign(a, b), a | b};
  }

  // "1" for the scalar blade; otherwise e + indices, underscore-separated
  // when any index exceeds 9 (e.g. e013, e1_11).
  std::string blade_name(BladeMask mask) const {
    if (mask == 0) return "1";
    const bool wide = dim() > 10;
    std::string out = "e";
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
      if ((mask & (BladeMask{1} << i)) == 0) continue;
      if (!first && wide) out += '_';
      out += std::to_string(i);
      first = false;
    }
    return out;
  }

  // "p,q,r" counts of the diagonal metric by sign, degenerate first.
  std::string signature_string() const {
    const auto sig = form_.signature();
    return std::to_string(sig.positive) + "," + std::to_string(sig.negative) + "," +
           std::to_string(sig.zero);
  }

  bool same(const Algebra& other) const {
    return this == &other || metric_ == other.metric_;
  }

 private:
  explicit Algebra(QuadraticForm<S> diagonal_form) : form_(std::move(diagonal_form)) {
    metric_.reserve(form_.dim());
    for (std::size_t i = 0; i < form_.dim(); ++i) metric_.push_back(form_.gram().at(i, i));
    for (std::size_t i = 0; i < metric_.size(); ++i)
      if (scalar_traits<S>::is_zero(metric_[i])) {
        e0_ = i;
        break;
      }

    std::vector<int> signs;
    bool simple = dim() <= 8;
    for (const S& m : metric_) {
      const int sg = scalar_traits<S>::sgn(m);
      if (!(m == scalar_traits<S>::from_int(sg))) simple = false;
      signs.push_back(sg);
    }
    if (simple) {
      product_table_.resize(blade_count() * blade_count());
      for (BladeMask a = 0; a < blade_count(); ++a)
        for (BladeMask b = 0; b < blade_count(); ++b) {
          int coef = blade_reorder_sign(a, b);
          for (BladeMask common = a & b; common != 0; common &= common - 1)
            coef *= signs[static_cast<std::size_t>(std::countr_zero(common))];
          product_table_[(std::size_t{a} << dim()) | b] = static_cast<std::int8_t>(coef);
        }
    }
  }

  QuadraticForm<S> form_;
  std::vector<S> metric_;
  std::optional<std::size_t> e0_;
  std::vector<std::int8_t> product_table_;  // read-only after construction
};

}  // namespace gacalc
