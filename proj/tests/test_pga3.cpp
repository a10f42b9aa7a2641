#include <doctest.h>

#include <cmath>

#include "gacalc/pga3.hpp"
#include "oracles.hpp"

using namespace gacalc;
using R = Rational;
using PlaneR = pga3::Plane<R>;
using PointR = pga3::Point<R>;

TEST_SUITE("pga3") {

TEST_CASE("magnitude") {
  CHECK(pga3::magnitude(PlaneR{{R(0), R(1), R(0), R(0)}}) == doctest::Approx(1.0));
  CHECK(pga3::magnitude(PlaneR{{R(7), R(0), R(3), R(4)}}) == doctest::Approx(5.0));
  CHECK(pga3::magnitude_squared(PlaneR{{R(7), R(0), R(3), R(4)}}) == R(25));
  CHECK_THROWS_AS(pga3::magnitude(PlaneR{{R(1), R(0), R(0), R(0)}}), NotAPlane);
}

TEST_CASE("dihedral angle") {
  using Pd = pga3::Plane<double>;
  const double pi = std::acos(-1.0);
  CHECK(pga3::dihedral_angle(Pd{{0, 1, 0, 0}}, Pd{{0, 0, 1, 0}}) == doctest::Approx(pi / 2));
  CHECK(pga3::dihedral_angle(Pd{{0, 1, 0, 0}}, Pd{{5, 1, 0, 0}}) == doctest::Approx(0.0));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(pga3::dihedral_angle(Pd{{0, 1, 0, 0}}, Pd{{0, s, s, 0}}) == doctest::Approx(pi / 4));
  CHECK_THROWS_AS(pga3::dihedral_angle(Pd{{1, 0, 0, 0}}, Pd{{0, 1, 0, 0}}), NotAPlane);
}

TEST_CASE("parallel through") {
  // x = 0 through (1,0,0) becomes x = 1.
  const auto p1 = pga3::parallel_through(PointR{R(1), R(0), R(0)},
                                         PlaneR{{R(0), R(1), R(0), R(0)}});
  CHECK((p1 == PlaneR{{R(-1), R(1), R(0), R(0)}}));

  // A plane through the origin stays itself.
  const auto p2 = pga3::parallel_through(PointR{R(0), R(0), R(0)},
                                         PlaneR{{R(0), R(1), R(2), R(3)}});
  CHECK((p2 == PlaneR{{R(0), R(1), R(2), R(3)}}));

  // z + 1 = 0 through (0,0,2) becomes z = 2.
  const auto p3 = pga3::parallel_through(PointR{R(0), R(0), R(2)},
                                         PlaneR{{R(1), R(0), R(0), R(1)}});
  CHECK((p3 == PlaneR{{R(-2), R(0), R(0), R(1)}}));
}

TEST_CASE("point complement") {
  const auto origin = pga3::point_complement(PointR{R(0), R(0), R(0)});
  for (std::size_t j = 0; j < 3; ++j) {
    Vec<R> expect(4, R(0));
    expect[j + 1] = R(1);
    CHECK(origin.canonical_section().col(j) == expect);
  }

  const auto at_x1 = pga3::point_complement(PointR{R(1), R(0), R(0)});
  CHECK((at_x1.canonical_section().col(0) == Vec<R>{R(-1), R(1), R(0), R(0)}));

  testing::Gen gen(53);
  const auto form = pga3::form<R>();
  Vec<R> e0{R(1), R(0), R(0), R(0)};
  for (int t = 0; t < 20; ++t) {
    const auto comp = pga3::point_complement(gen.point());
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(form.bilinear(comp.canonical_section().col(j), e0) == R(0));
  }
}

TEST_CASE("incidence") {
  CHECK(pga3::incident(PointR{R(0), R(0), R(0)}, PlaneR{{R(0), R(1), R(0), R(0)}}));
  CHECK_FALSE(pga3::incident(PointR{R(1), R(0), R(0)}, PlaneR{{R(0), R(1), R(0), R(0)}}));
  CHECK(pga3::incident(PointR{R(1), R(0), R(0)}, PlaneR{{R(-1), R(1), R(0), R(0)}}));
}

TEST_CASE("normalization") {
  const auto n = pga3::normalized(PlaneR{{R(7), R(0), R(3), R(4)}});
  CHECK(n.v[0] == doctest::Approx(1.4));
  CHECK(n.v[2] == doctest::Approx(0.6));
  CHECK(pga3::magnitude(n) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pga3::normalized(PlaneR{{R(1), R(0), R(0), R(0)}}), NotAPlane);
}

TEST_CASE("magnitude is constant along a parallel class") {
  testing::Gen gen(59);
  for (int t = 0; t < 50; ++t) {
    PlaneR p{{gen.rational(), gen.rational(), gen.rational(), gen.nonzero_rational()}};
    PlaneR shifted = p;
    shifted.v[0] += gen.rational();
    CHECK(pga3::magnitude_squared(p) == pga3::magnitude_squared(shifted));
  }
}

}  // TEST_SUITE
