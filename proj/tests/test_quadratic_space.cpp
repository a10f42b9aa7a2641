#include <doctest.h>

#include "gacalc/pga3.hpp"
#include "gacalc/quadratic_space.hpp"
#include "oracles.hpp"

using namespace gacalc;
using R = Rational;

namespace {

Vec<R> basis_vec(std::size_t n, std::size_t i, R scale = R(1)) {
  Vec<R> v(n, R(0));
  v[i] = scale;
  return v;
}

}  // namespace

TEST_SUITE("quadratic_space") {

TEST_CASE("bilinear on the PGA3 form") {
  const auto form = pga3::form<R>();
  CHECK(form.bilinear(basis_vec(4, 0), basis_vec(4, 1)) == R(0));
  CHECK(form.bilinear(basis_vec(4, 1), basis_vec(4, 1)) == R(1));
  Vec<R> u{R(0), R(0), R(3), R(4)};
  CHECK(form.bilinear(u, u) == R(25));
  CHECK_THROWS_AS(form.bilinear(u, Vec<R>{R(1)}), DimensionMismatch);

  testing::Gen gen(7);
  for (int t = 0; t < 50; ++t) {
    Vec<R> a{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
    Vec<R> b{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
    CHECK(form.bilinear(a, b) == form.bilinear(b, a));
  }
}

TEST_CASE("radical extraction") {
  const auto pga = pga3::form<R>();
  const auto rad = pga.radical();
  REQUIRE(rad.dim() == 1);
  CHECK(rad.basis_vector(0) == basis_vec(4, 0));

  CHECK(QuadraticForm<R>::from_signature(2, 1, 0).radical().dim() == 0);
  CHECK(QuadraticForm<R>::from_signature(2, 0, 2).radical().dim() == 2);

  // Every radical vector pairs to zero with every basis vector.
  Mat<R> g{{R(1), R(1), R(0)}, {R(1), R(1), R(0)}, {R(0), R(0), R(2)}};
  const auto f = QuadraticForm<R>::from_gram(g);
  const auto r = f.radical();
  REQUIRE(r.dim() == 1);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(f.bilinear(r.basis_vector(0), basis_vec(3, i)) == R(0));
}

TEST_CASE("quotient form") {
  const auto pga = pga3::form<R>();
  const auto quo = pga.quotient(pga.radical());
  CHECK(quo.dim() == 3);
  const auto sig = quo.signature();
  CHECK(sig.positive == 3);
  CHECK(sig.zero == 0);

  CHECK(pga.quotient(Subspace<R>::zero(4)) == pga);

  CHECK_THROWS_AS(pga.quotient(Subspace<R>::span(4, {basis_vec(4, 1)})), NotRadical);
}

TEST_CASE("canonical section") {
  const auto form = pga3::form<R>();
  const auto coord = Complement<R>::coordinate(form, 0);
  CHECK(coord.canonical_section().col(0) == basis_vec(4, 1));

  const auto at_x1 = pga3::point_complement(pga3::Point<R>{R(1), R(0), R(0)});
  Vec<R> expected{R(-1), R(1), R(0), R(0)};
  CHECK(at_x1.canonical_section().col(0) == expected);

  const auto origin = pga3::point_complement(pga3::Point<R>{R(0), R(0), R(0)});
  for (std::size_t j = 0; j < 3; ++j) CHECK(origin.canonical_section().col(j)[0] == R(0));
}

TEST_CASE("vector-level playfair projection") {
  const auto form = pga3::form<R>();
  const auto coord = Complement<R>::coordinate(form, 0);

  auto [w0, l0] = coord.project_vector(basis_vec(4, 0));
  CHECK(w0 == Vec<R>(4, R(0)));
  CHECK(l0 == R(1));

  Vec<R> v{R(2), R(1), R(0), R(0)};
  auto [w1, l1] = coord.project_vector(v);
  CHECK(w1 == basis_vec(4, 1));
  CHECK(l1 == R(2));

  const auto at_x1 = pga3::point_complement(pga3::Point<R>{R(1), R(0), R(0)});
  auto [w2, l2] = at_x1.project_vector(basis_vec(4, 1));
  CHECK((w2 == Vec<R>{R(-1), R(1), R(0), R(0)}));
  CHECK(l2 == R(1));
}

TEST_CASE("isometry and weak orthogonality tests") {
  const auto form = pga3::form<R>();
  const auto id = Mat<R>::identity(4);
  CHECK(is_isometry(id, form, form));
  CHECK(is_weak_orthogonal(id, form));

  Mat<R> neg(4, 4);
  for (int i = 0; i < 4; ++i) neg.at(i, i) = R(-1);
  CHECK(is_isometry(neg, form, form));
  CHECK_FALSE(is_weak_orthogonal(neg, form));

  Mat<R> scale = Mat<R>::identity(4);
  scale.at(1, 1) = R(2);
  CHECK_FALSE(is_isometry(scale, form, form));

  // Rational rotation in the e1 e2 plane (3-4-5), fixing e0 and e3.
  Mat<R> rot = Mat<R>::identity(4);
  rot.at(1, 1) = R(3, 5);
  rot.at(1, 2) = R(-4, 5);
  rot.at(2, 1) = R(4, 5);
  rot.at(2, 2) = R(3, 5);
  CHECK(is_isometry(rot, form, form));
  CHECK(is_weak_orthogonal(rot, form));
}

TEST_CASE("complement validation") {
  const auto form = pga3::form<R>();
  CHECK_THROWS_AS(
      Complement<R>::from_subspace(form, 0, Subspace<R>::span(4, {basis_vec(4, 1)})),
      NotAComplement);
  CHECK_THROWS_AS(
      Complement<R>::from_subspace(
          form, 0,
          Subspace<R>::span(4, {basis_vec(4, 0), basis_vec(4, 2), basis_vec(4, 3)})),
      NotAComplement);
  CHECK_THROWS_AS(Complement<R>::coordinate(QuadraticForm<R>::from_signature(3, 0, 0), 0),
                  NoDegenerateGenerator);
}

TEST_CASE("congruence diagonalization invariants") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.range(1, 6));
    Mat<R> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const R v = R(gen.range(-4, 4));
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    const auto f = QuadraticForm<R>::from_gram(g);
    const Mat<R>& p = f.diag_basis();
    REQUIRE(p.inverse().has_value());
    const Mat<R> d = p.transposed() * g * p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          CHECK(d.at(i, j) == f.diag_metric()[i]);
        } else {
          CHECK(d.at(i, j) == R(0));
        }
      }

    // Signature is invariant under a random congruence perturbation.
    Mat<R> q = Mat<R>::identity(n);
    for (int k = 0; k < 4; ++k) {
      const auto i = static_cast<std::size_t>(gen.range(0, static_cast<long>(n) - 1));
      const auto j = static_cast<std::size_t>(gen.range(0, static_cast<long>(n) - 1));
      if (i != j) q.at(i, j) += gen.rational();
    }
    if (!q.inverse().has_value()) continue;
    const auto perturbed = QuadraticForm<R>::from_gram(q.transposed() * g * q);
    CHECK(perturbed.signature().positive == f.signature().positive);
    CHECK(perturbed.signature().negative == f.signature().negative);
    CHECK(perturbed.signature().zero == f.signature().zero);
  }
}

}  // TEST_SUITE
