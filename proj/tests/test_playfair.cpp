#include <doctest.h>

#include "gacalc/pga3.hpp"
#include "gacalc/playfair.hpp"
#include "oracles.hpp"

using namespace gacalc;
using R = Rational;
using MV = Multivector<R>;

namespace {

Algebra<R>::Ptr pga() { return Algebra<R>::pga3(); }

Complement<R> coord_w() {
  static const Complement<R> c = Complement<R>::coordinate(pga3::form<R>(), 0);
  return c;
}

}  // namespace

TEST_SUITE("playfair") {

TEST_CASE("decompose") {
  const auto alg = pga();
  const MV e0 = MV::basis_vector(alg, 0);
  const MV e1 = MV::basis_vector(alg, 1);

  const MV x = R(2) * e0 + e1 + R(3) * MV::blade(alg, 0b0011);
  const auto s = decompose(x, coord_w());
  CHECK(s.at_w == e1);
  CHECK(s.ideal_cofactor == MV::scalar(alg, R(2)) - R(3) * e1);
  CHECK(s.at_w + s.ideal_cofactor * e0 == x);

  const MV e123 = MV::blade(alg, 0b1110);
  const auto s2 = decompose(e123, coord_w());
  CHECK(s2.at_w == e123);
  CHECK(s2.ideal_cofactor.is_zero());

  const auto at_x1 = pga3::point_complement(pga3::Point<R>{R(1), R(0), R(0)});
  const auto s3 = decompose(e1, at_x1);
  CHECK(s3.at_w == e1 - e0);
  CHECK(s3.ideal_cofactor == MV::one(alg));
}

TEST_CASE("derivation") {
  const auto alg = pga();
  const MV e0 = MV::basis_vector(alg, 0);
  const MV e1 = MV::basis_vector(alg, 1);
  CHECK(derivation_d(coord_w(), e0) == e0);
  CHECK(derivation_d(coord_w(), e1).is_zero());
  const auto at_x1 = pga3::point_complement(pga3::Point<R>{R(1), R(0), R(0)});
  CHECK(derivation_d(at_x1, e1) == e0);
}

TEST_CASE("ideal membership") {
  const auto alg = pga();
  CHECK(is_in_ideal(MV::basis_vector(alg, 0)));
  CHECK(is_in_ideal(MV::blade(alg, 0b0011)));
  CHECK_FALSE(is_in_ideal(MV::one(alg) + MV::basis_vector(alg, 0)));
}

TEST_CASE("quotient projection") {
  const auto alg = pga();
  const auto quot = quotient_algebra<R>(alg);
  CHECK(quot->dim() == 3);
  CHECK(quotient_project(MV::basis_vector(alg, 0), quot).is_zero());
  CHECK(quotient_project(MV::basis_vector(alg, 1) + R(2) * MV::basis_vector(alg, 0), quot) ==
        Multivector<R>::basis_vector(quot, 0));

  testing::Gen gen(21);
  for (int t = 0; t < 100; ++t) {
    const MV x = gen.mv(alg), y = gen.mv(alg);
    CHECK(quotient_project(x * y, quot) ==
          quotient_project(x, quot) * quotient_project(y, quot));
  }
}

TEST_CASE("quotient image is point-independent") {
  const auto alg = pga();
  const auto quot = quotient_algebra<R>(alg);
  testing::Gen gen(22);
  for (int t = 0; t < 50; ++t) {
    const auto comp = pga3::point_complement(gen.point());
    const MV x = gen.mv(alg);
    CHECK(quotient_project(decompose(x, comp).at_w, quot) == quotient_project(x, quot));
  }
}

TEST_CASE("twisted pairs") {
  const auto alg = pga();
  const MV e0 = MV::basis_vector(alg, 0);
  const MV e1 = MV::basis_vector(alg, 1);
  const MV e2 = MV::basis_vector(alg, 2);

  const auto p1 = to_twisted_pair(MV::one(alg), coord_w());
  CHECK(p1.r == MV::one(alg));
  CHECK(p1.m.is_zero());

  CHECK(from_twisted_pair(TwistedPair<R>{e1, MV::one(alg)}, coord_w()) == e1 + e0);

  const TwistedPair<R> id{MV::one(alg), MV(alg)};
  const TwistedPair<R> g{e1, MV::one(alg)};
  CHECK(twisted_mul(id, g) == g);
  const auto sq = twisted_mul(TwistedPair<R>{e1, MV(alg)}, TwistedPair<R>{e1, MV(alg)});
  CHECK(sq.r == MV::one(alg));
  CHECK(sq.m.is_zero());
  const auto mix = twisted_mul(TwistedPair<R>{e1, MV::one(alg)}, TwistedPair<R>{e2, MV(alg)});
  CHECK(mix.r == MV::blade(alg, 0b0110));
  CHECK(mix.m == -e2);

  testing::Gen gen(23);
  for (int t = 0; t < 1000; ++t) {
    const MV x = gen.mv(alg);
    CHECK(from_twisted_pair(to_twisted_pair(x, coord_w()), coord_w()) == x);
  }
}

TEST_CASE("right multiplication by lambda e0") {
  const auto alg = pga();
  CHECK(right_mul_e0(MV::one(alg), R(1)) == MV::basis_vector(alg, 0));
  CHECK(right_mul_e0(MV::basis_vector(alg, 1), R(2)) == R(-2) * MV::blade(alg, 0b0011));
  CHECK(right_mul_e0(MV::basis_vector(alg, 1), R(1)) !=
        right_mul_e0(MV::basis_vector(alg, 1), R(2)));
  CHECK_THROWS_AS(right_mul_e0(MV::one(alg), R(0)), ZeroScale);
}

TEST_CASE("complement from derivation") {
  const auto alg = pga();
  const BladeMask n = static_cast<BladeMask>(alg->blade_count());

  // The coordinate projection derivation recovers the coordinate complement.
  {
    const PlayfairFrame<R> frame(alg, coord_w());
    LinearEndo<R> d(alg);
    for (BladeMask m = 0; m < n; ++m) {
      const MV img = frame.derivation(MV::blade(alg, m));
      for (const auto& [mask, c] : img.terms()) d.set(mask, m, c);
    }
    CHECK(complement_from_derivation(d) == coord_w());
  }

  // d(e1) = e0, d(e2) = d(e3) = 0, d(e0) = e0 extended by Leibniz recovers
  // the complement of the point (1, 0, 0).
  {
    const auto expect = pga3::point_complement(pga3::Point<R>{R(1), R(0), R(0)});
    const PlayfairFrame<R> frame(alg, expect);
    LinearEndo<R> d(alg);
    for (BladeMask m = 0; m < n; ++m) {
      const MV img = frame.derivation(MV::blade(alg, m));
      for (const auto& [mask, c] : img.terms()) d.set(mask, m, c);
    }
    CHECK(d.image_of_blade(0b0010) == MV::basis_vector(alg, 0));
    CHECK(d.image_of_blade(0b0100).is_zero());
    CHECK(complement_from_derivation(d) == expect);
  }

  // The zero map is a derivation but does not fix e0.
  CHECK_THROWS_AS(complement_from_derivation(LinearEndo<R>(alg)), DoesNotFixE0);

  // The identity fails the Leibniz law.
  CHECK_THROWS_AS(complement_from_derivation(LinearEndo<R>::identity(alg)), NotADerivation);

  // An infinitesimal rotation fixing e0 is a Clifford derivation, but its
  // image escapes the ideal.
  {
    LinearEndo<R> d(alg);
    d.set(0b0001, 0b0001, R(1));   // e0 -> e0
    d.set(0b0100, 0b0010, R(1));   // e1 -> e2
    d.set(0b0010, 0b0100, R(-1));  // e2 -> -e1
    // Extend to blades by the Leibniz rule.
    for (BladeMask m = 0; m < n; ++m) {
      if (std::popcount(m) < 2) continue;
      const BladeMask low = m & ~(m - 1);  // lowest set bit
      const BladeMask rest = m ^ low;
      const MV img = MV::blade(alg, low) * d.image_of_blade(rest) +
                     d.image_of_blade(low) * MV::blade(alg, rest);
      for (const auto& [mask, c] : img.terms()) d.set(mask, m, c);
    }
    CHECK_THROWS_AS(complement_from_derivation(d), ImageNotInIdeal);
  }
}

TEST_CASE("even odd split") {
  const auto alg = pga();
  const MV e1 = MV::basis_vector(alg, 1);
  const auto [ev, od] = even_odd_split(MV::one(alg) + e1);
  CHECK(ev == MV::one(alg));
  CHECK(od == e1);

  std::size_t even_blades = 0;
  for (BladeMask m = 0; m < 16; ++m)
    if ((std::popcount(m) & 1) == 0) ++even_blades;
  CHECK(even_blades == 8);

  testing::Gen gen(31);
  for (int t = 0; t < 100; ++t) {
    const MV even = gen.mv(alg).even_part();
    CHECK(even.grade_involution() == even);
  }
}

TEST_CASE("square-zero ideal, exhaustive blade pairs") {
  const auto alg = pga();
  const MV e0 = MV::basis_vector(alg, 0);
  for (BladeMask a = 0; a < 16; ++a)
    for (BladeMask b = 0; b < 16; ++b)
      CHECK(((MV::blade(alg, a) * e0) * (MV::blade(alg, b) * e0)).is_zero());
}

}  // TEST_SUITE
