#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "gacalc/algebra.hpp"
#include "gacalc/errors.hpp"
#include "gacalc/quadratic_space.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc::pga3 {

// A plane v0 + v1 x + v2 y + v3 z = 0, represented homogeneously by its
// coefficient vector over (e0, e1, e2, e3). Multiples of e0 itself do not
// represent planes.
template <ScalarField S>
struct Plane {
  std::array<S, 4> v;

  S operator[](std::size_t i) const { return v[i]; }

  bool is_valid() const {
    return !(scalar_traits<S>::is_zero(v[1]) && scalar_traits<S>::is_zero(v[2]) &&
             scalar_traits<S>::is_zero(v[3]));
  }

  Vec<S> coords() const { return {v[0], v[1], v[2], v[3]}; }

  friend Plane operator*(const S& s, const Plane& p) {
    return Plane{{s * p.v[0], s * p.v[1], s * p.v[2], s * p.v[3]}};
  }

  friend bool operator==(const Plane& a, const Plane& b) { return a.v == b.v; }
};

// A Euclidean point; induces the complement V_P of planes through it.
template <ScalarField S>
struct Point {
  S x, y, z;
};

template <ScalarField S>
QuadraticForm<S> form() {
  return QuadraticForm<S>::from_signature(3, 0, 1);
}

// B(u, v) = u1 v1 + u2 v2 + u3 v3.
template <ScalarField S>
S bilinear(const Plane<S>& u, const Plane<S>& v) {
  return u.v[1] * v.v[1] + u.v[2] * v.v[2] + u.v[3] * v.v[3];
}

template <ScalarField S>
S magnitude_squared(const Plane<S>& p) {
  if (!p.is_valid()) throw NotAPlane("multiples of e0 do not represent planes");
  return bilinear(p, p);
}

// |v| = sqrt(B(v, v)); leaves the rational field, so always a double.
template <ScalarField S>
double magnitude(const Plane<S>& p) {
  return std::sqrt(scalar_traits<S>::to_double(magnitude_squared(p)));
}

// Dihedral angle in [0, pi], orientation-sensitive: B(u,v) = |u||v| cos
// theta.
template <ScalarField S>
double dihedral_angle(const Plane<S>& u, const Plane<S>& v) {
  const double c =
      scalar_traits<S>::to_double(bilinear(u, v)) / (magnitude(u) * magnitude(v));
  return std::acos(std::max(-1.0, std::min(1.0, c)));
}

// v0 + v1 x + v2 y + v3 z = 0 at P.
template <ScalarField S>
bool incident(const Point<S>& p, const Plane<S>& plane) {
  const S val = plane.v[0] + plane.v[1] * p.x + plane.v[2] * p.y + plane.v[3] * p.z;
  return scalar_traits<S>::is_zero(val);
}

// The unique plane through P parallel to the given plane, with the same
// orientation and magnitude: shift the e0 coefficient by
// lambda = -v0 - v1 x - v2 y - v3 z.
template <ScalarField S>
Plane<S> parallel_through(const Point<S>& p, const Plane<S>& plane) {
  if (!plane.is_valid()) throw NotAPlane("multiples of e0 do not represent planes");
  const S lambda =
      -plane.v[0] - plane.v[1] * p.x - plane.v[2] * p.y - plane.v[3] * p.z;
  return Plane<S>{{plane.v[0] + lambda, plane.v[1], plane.v[2], plane.v[3]}};
}

// Unit-magnitude representative, keeping orientation. parallel_through does
// not normalize; this is the explicit call for that.
template <ScalarField S>
Plane<double> normalized(const Plane<S>& p) {
  const double m = magnitude(p);
  return {{scalar_traits<S>::to_double(p.v[0]) / m, scalar_traits<S>::to_double(p.v[1]) / m,
           scalar_traits<S>::to_double(p.v[2]) / m, scalar_traits<S>::to_double(p.v[3]) / m}};
}

// V_P = { v : v0 + v1 x + v2 y + v3 z = 0 }, spanned by e_i - p_i e0; the
// canonical section of this complement is the omega_P of the plane model.
template <ScalarField S>
Complement<S> point_complement(const Point<S>& p) {
  const QuadraticForm<S> f = form<S>();
  const S zero = scalar_traits<S>::from_int(0);
  const S one = scalar_traits<S>::from_int(1);
  std::vector<Vec<S>> basis = {
      {-p.x, one, zero, zero}, {-p.y, zero, one, zero}, {-p.z, zero, zero, one}};
  return Complement<S>::from_subspace(f, 0, Subspace<S>::span(4, basis));
}

}  // namespace gacalc::pga3
