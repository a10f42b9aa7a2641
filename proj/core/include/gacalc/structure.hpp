#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "gacalc/algebra.hpp"
#include "gacalc/errors.hpp"
#include "gacalc/linear_endo.hpp"
#include "gacalc/multivector.hpp"
#include "gacalc/playfair.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

namespace detail {

// Exact equality for exact scalars; small relative tolerance for floats,
// where the left-regular solve introduces rounding.
template <ScalarField S>
bool near_equal(const Multivector<S>& a, const Multivector<S>& b) {
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    const Multivector<S> d = a - b;
    double scale = 1.0;
    for (const auto& [mask, c] : a.terms())
      scale = std::max(scale, std::abs(scalar_traits<S>::to_double(c)));
    for (const auto& [mask, c] : d.terms())
      if (std::abs(scalar_traits<S>::to_double(c)) > 1e-9 * scale) return false;
    return true;
  }
}

}  // namespace detail

// Inverse by solving the left-regular representation against 1, then
// verifying the inverse two-sided. Works uniformly in degenerate algebras,
// where norm-based formulas do not.
template <ScalarField S>
Multivector<S> inverse(const Multivector<S>& x) {
  const auto& alg = x.algebra();
  auto z = LinearEndo<S>::left_multiplication(x).solve(Multivector<S>::one(alg));
  if (!z) throw NotAUnit("element is not a unit");
  const Multivector<S> one = Multivector<S>::one(alg);
  if (!detail::near_equal(x * *z, one) || !detail::near_equal(*z * x, one))
    throw NotAUnit("element is not a unit");
  return *z;
}

// A unit written as r * (1 + tail * e0) with r a unit of Cl(W).
template <ScalarField S>
struct UnitDecomposition {
  Multivector<S> r;
  Multivector<S> tail;
};

template <ScalarField S>
UnitDecomposition<S> unit_decompose(const Multivector<S>& x, const Complement<S>& comp) {
  auto pair = to_twisted_pair(x, comp);
  Multivector<S> r_inv(x.algebra());
  try {
    r_inv = inverse(pair.r);
  } catch (const NotAUnit&) {
    throw NotAUnit("r-component " + pair.r.str() + " not a unit");
  }
  return {std::move(pair.r), r_inv * pair.m};
}

// tau(r): m -> r m a(r^-1), the conjugation action of the unit r on the
// ideal coordinate.
template <ScalarField S>
Multivector<S> tau_action(const Multivector<S>& r, const Multivector<S>& m) {
  return r * m * inverse(r).grade_involution();
}

// B x X = (BX - XB) / 2. For grade-2 B this preserves the grade of X and
// makes the bivectors a Lie algebra.
template <ScalarField S>
Multivector<S> commutator(const Multivector<S>& b, const Multivector<S>& x) {
  return scalar_half<S>() * (b * x - x * b);
}

namespace detail {

// Makes B(u, v) = 0 without changing u ^ v, by shearing one vector along
// the other (null/null pairs go through the hyperbolic substitution first).
template <ScalarField S>
void orthogonalize_pair(const QuadraticForm<S>& form, Vec<S>& u, Vec<S>& v) {
  S buv = form.bilinear(u, v);
  if (scalar_traits<S>::is_zero(buv)) return;
  S buu = form.bilinear(u, u);
  if (scalar_traits<S>::is_zero(buu)) {
    const S bvv = form.bilinear(v, v);
    if (!scalar_traits<S>::is_zero(bvv)) {
      const S f = buv / bvv;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= f * v[i];
      return;
    }
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
    buv = form.bilinear(u, v);
    buu = form.bilinear(u, u);
  }
  const S f = buv / buu;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * u[i];
}

}  // namespace detail

// Writes a bivector as a sum of at most dim/2 products of orthogonal vector
// pairs: repeatedly pivot on a nonzero entry (p, q) of the antisymmetric
// coefficient matrix and subtract the rank-2 piece matching rows p and q.
template <ScalarField S>
std::vector<std::pair<Vec<S>, Vec<S>>> simple_bivector_decomposition(const Multivector<S>& b) {
  if (!b.is_homogeneous(2)) throw NotGrade2("expected a homogeneous grade-2 element");
  const auto& alg = b.algebra();
  const std::size_t n = alg->dim();
  const S zero = scalar_traits<S>::from_int(0);

  // Antisymmetric coefficient matrix: b = sum_{i<j} a[i][j] e_i e_j.
  std::vector<std::vector<S>> a(n, std::vector<S>(n, zero));
  for (const auto& [mask, c] : b.terms()) {
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & (mask - 1));
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -c;
  }

  std::vector<std::pair<Vec<S>, Vec<S>>> pairs;
  while (true) {
    std::size_t p = 0, q = 0;
    bool found = false;
    S best = zero;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (scalar_traits<S>::is_zero(a[i][j])) continue;
        const S mag = scalar_traits<S>::abs(a[i][j]);
        if (!found || best < mag) {
          p = i;
          q = j;
          best = mag;
          found = true;
        }
      }
    if (!found) break;
    const S c = a[p][q];
    // u v^T - v u^T agrees with a on rows and columns p and q, so the
    // difference is antisymmetric with both cleared; rank drops by two.
    Vec<S> u(n, zero), v(n, zero);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = -(a[q][j] / c);
      v[j] = a[p][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= u[i] * v[j] - v[i] * u[j];
    detail::orthogonalize_pair(alg->form(), u, v);
    pairs.emplace_back(std::move(u), std::move(v));
  }
  return pairs;
}

// Grade-2 split B = rotational + ideal_vector * e0 with rotational in
// Cl^2(W); the ideal vector is returned with its e0 coordinate normalized
// to zero (e0 contributes nothing to the product).
template <ScalarField S>
struct BivectorSplit {
  Multivector<S> rotational;
  Vec<S> ideal_vector;
};

template <ScalarField S>
BivectorSplit<S> bivector_split(const Multivector<S>& b, const Complement<S>& comp) {
  if (!b.is_homogeneous(2)) throw NotGrade2("expected a homogeneous grade-2 element");
  auto split = decompose(b, comp);
  Vec<S> w = split.ideal_cofactor.vector_part();
  w[b.algebra()->e0_index()] = scalar_traits<S>::from_int(0);
  return {std::move(split.at_w), std::move(w)};
}

// All pairwise commutators of a bivector basis, expanded in that basis:
// table[i][j][k] is the coefficient of basis_k in basis_i x basis_j.
template <ScalarField S>
std::vector<std::vector<std::vector<S>>> lie_structure_table(
    const std::vector<Multivector<S>>& basis) {
  if (basis.empty()) throw NotSpanning("empty bivector basis");
  const auto& alg = basis.front().algebra();
  std::vector<BladeMask> slots;
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if (std::popcount(m) == 2) slots.push_back(m);
  const std::size_t d = slots.size();
  if (basis.size() != d) throw NotSpanning("basis does not span the bivector space");

  Mat<S> m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!basis[j].is_homogeneous(2)) throw NotGrade2("basis element is not grade 2");
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = basis[j].coef(slots[i]);
  }
  auto m_inv = m.inverse();
  if (!m_inv) throw NotSpanning("basis does not span the bivector space");

  std::vector<std::vector<std::vector<S>>> table(
      d, std::vector<std::vector<S>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Multivector<S> bracket = commutator(basis[i], basis[j]);
      std::vector<S> coords(d, scalar_traits<S>::from_int(0));
      for (std::size_t k = 0; k < d; ++k) coords[k] = bracket.coef(slots[k]);
      table[i][j] = m_inv->apply(coords);
    }
  return table;
}

}  // namespace gacalc
