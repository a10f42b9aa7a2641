#include "gacalc/verify.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gacalc/errors.hpp"
#include "gacalc/pga3.hpp"
#include "gacalc/playfair.hpp"
#include "gacalc/structure.hpp"

namespace gacalc::verify {
namespace {

using R = Rational;
using MV = Multivector<R>;
using AlgPtr = Algebra<R>::Ptr;

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}

  long range(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(g);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
  }
};

R rand_rational(Rng& rng) { return R(rng.range(-9, 9), rng.range(1, 9)); }

R rand_nonzero_rational(Rng& rng) {
  R v = rand_rational(rng);
  while (v.is_zero()) v = rand_rational(rng);
  return v;
}

MV rand_mv(const AlgPtr& alg, Rng& rng, int denominator = 3) {
  MV out(alg);
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if (rng.range(1, denominator) == 1) out.add_term(m, rand_rational(rng));
  return out;
}

MV rand_bivector(const AlgPtr& alg, Rng& rng) {
  MV out(alg);
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if (std::popcount(m) == 2 && rng.range(1, 2) == 1) out.add_term(m, rand_rational(rng));
  return out;
}

Vec<R> rand_vec(std::size_t n, Rng& rng) {
  Vec<R> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_rational(rng));
  return v;
}

pga3::Point<R> rand_point(Rng& rng) {
  return {rand_rational(rng), rand_rational(rng), rand_rational(rng)};
}

MV rand_nonnull_vector(const AlgPtr& alg, Rng& rng) {
  while (true) {
    Vec<R> v = rand_vec(alg->dim(), rng);
    if (!alg->form().bilinear(v, v).is_zero()) return MV::from_vector(alg, v);
  }
}

// A random unit: a product of nonnull vectors and a unipotent 1 + m e0.
MV rand_unit(const AlgPtr& alg, Rng& rng) {
  MV u = MV::scalar(alg, rand_nonzero_rational(rng));
  const long k = rng.range(1, 3);
  for (long i = 0; i < k; ++i) u = u * rand_nonnull_vector(alg, rng);
  MV m(alg);
  for (BladeMask b = 0; b < alg->blade_count(); ++b)
    if ((b & alg->e0_mask()) == 0 && rng.range(1, 3) == 1) m.add_term(b, rand_rational(rng));
  return u * (MV::one(alg) + m * MV::blade(alg, alg->e0_mask()));
}

MV e0_mv(const AlgPtr& alg) { return MV::blade(alg, alg->e0_mask()); }

struct Ctx {
  bool ok = true;
  std::string detail;
  long cases = 0;

  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      detail = msg;
    }
  }
  bool require(bool cond, const std::string& msg) {
    ++cases;
    if (!cond) fail(msg);
    return cond;
  }
  CheckResult done(const std::string& name) const {
    return {name, ok, ok ? std::to_string(cases) + " cases" : detail};
  }
};

// ---------------------------------------------------------------------------
// Quadratic-space checks
// ---------------------------------------------------------------------------

CheckResult check_quotient_form(std::uint64_t seed) {
  Ctx c;
  const auto form = pga3::form<R>();
  const auto quo = form.quotient(form.radical());
  auto sig = quo.signature();
  c.require(quo.dim() == 3 && sig.positive == 3 && sig.negative == 0 && sig.zero == 0,
            "PGA3 quotient by its radical is not the positive-definite O(3) form");

  c.require(form.quotient(Subspace<R>::zero(4)) == form, "quotient by zero changed the form");

  Vec<R> e1{R(0), R(1), R(0), R(0)};
  bool threw = false;
  try {
    form.quotient(Subspace<R>::span(4, {e1}));
  } catch (const NotRadical&) {
    threw = true;
  }
  c.require(threw, "quotient by a non-radical line did not raise NotRadical");

  // Arbitrary degenerate gram: quotient by the full radical is nondegenerate.
  Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(2, 5));
    Mat<R> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const R v = R(rng.range(-3, 3));
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    const auto f = QuadraticForm<R>::from_gram(g);
    const auto rad = f.radical();
    if (rad.dim() == f.dim()) continue;  // zero form has no quotient space
    const auto q = f.quotient(rad);
    c.require(!q.is_degenerate(), "quotient by the full radical stayed degenerate");
    c.require(q.dim() == f.dim() - rad.dim(), "quotient dimension is off");
  }
  return c.done("quotient-form");
}

CheckResult check_orthogonal_complement(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto form = pga3::form<R>();
  const Vec<R> e0{R(1), R(0), R(0), R(0)};
  for (int t = 0; t < 10; ++t) {
    const auto p = rand_point(rng);
    const auto comp = pga3::point_complement(p);
    const Mat<R>& w = comp.canonical_section();
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec<R> wj = w.col(j);
      // pi o omega = id on transversal coordinates.
      for (std::size_t i = 1; i < 4; ++i)
        c.require(wj[i] == (i == j + 1 ? R(1) : R(0)),
                  "canonical section is not a section of the projection");
      // Image lies in V_P and is orthogonal to e0.
      c.require(pga3::incident(p, pga3::Plane<R>{{wj[0], wj[1], wj[2], wj[3]}}),
                "section image is not incident with the point");
      c.require(form.bilinear(wj, e0).is_zero(), "complement is not orthogonal to e0");
      // Isometric to the quotient: the canonical basis carries the O(3) gram.
      for (std::size_t k = 0; k < 3; ++k)
        c.require(form.bilinear(wj, w.col(k)) == (j == k ? R(1) : R(0)),
                  "complement basis does not carry the quotient form");
    }
    // Unique section with image W: canonicalizing any basis of V_P again
    // returns the same section.
    const auto again = Complement<R>::from_subspace(form, 0, comp.subspace());
    c.require(again == comp, "canonical section is not unique for its image");
  }
  return c.done("orthogonal-complement");
}

CheckResult check_playfair_vector(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto form = pga3::form<R>();
  for (int t = 0; t < 200; ++t) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const Vec<R> v = rand_vec(4, rng);
    const auto [w, lambda] = comp.project_vector(v);
    Vec<R> recon = w;
    recon[0] += lambda;
    c.require(recon == v, "v != w + lambda e0");
    const auto again = comp.project_vector(w);
    c.require(again.first == w && again.second.is_zero(), "w is not in W");
    // Uniqueness: solve on the basis [w_1 w_2 w_3 e0] and compare.
    Mat<R> basis(4, 4);
    for (std::size_t j = 0; j < 3; ++j) basis.set_col(j, comp.canonical_section().col(j));
    basis.set_col(3, comp.e0_vector());
    const auto sol = basis.solve(v);
    c.require(sol.has_value(), "split basis is singular");
    if (sol) {
      Vec<R> w2(4, R(0));
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i)
          w2[i] += comp.canonical_section().at(i, j) * (*sol)[j];
      c.require(w2 == w && (*sol)[3] == lambda, "decomposition is not unique");
    }
  }
  return c.done("playfair-vector");
}

CheckResult check_playfair_axiom(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const auto p = rand_point(rng);
    pga3::Plane<R> plane{{rand_rational(rng), rand_rational(rng), rand_rational(rng),
                          rand_rational(rng)}};
    if (!plane.is_valid()) {
      plane.v[3] = R(1);
    }
    const auto through = pga3::parallel_through(p, plane);
    c.require(pga3::incident(p, through), "parallel plane does not pass through the point");
    c.require(through.v[1] == plane.v[1] && through.v[2] == plane.v[2] &&
                  through.v[3] == plane.v[3],
              "parallel plane left its parallel class");
    pga3::Plane<R> shifted = through;
    shifted.v[0] += R(1);
    c.require(!pga3::incident(p, shifted), "parallel through the point is not unique");
    c.require(pga3::magnitude_squared(through) == pga3::magnitude_squared(plane),
              "parallel plane changed magnitude");
    // Homogeneity.
    const R s = rand_nonzero_rational(rng);
    c.require(pga3::parallel_through(p, s * plane) == s * through,
              "parallel_through is not homogeneous");
  }
  return c.done("playfair-axiom");
}

CheckResult check_cosine_law(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    auto make_plane = [&rng]() {
      while (true) {
        pga3::Plane<double> p{{rng.real(-2, 2), rng.real(-2, 2), rng.real(-2, 2),
                               rng.real(-2, 2)}};
        if (p.is_valid()) return p;
      }
    };
    const auto u = make_plane();
    const auto v = make_plane();
    const double theta = pga3::dihedral_angle(u, v);
    // Independent route: the Euclidean normals.
    const double dot = u.v[1] * v.v[1] + u.v[2] * v.v[2] + u.v[3] * v.v[3];
    const double nu = std::sqrt(u.v[1] * u.v[1] + u.v[2] * u.v[2] + u.v[3] * u.v[3]);
    const double nv = std::sqrt(v.v[1] * v.v[1] + v.v[2] * v.v[2] + v.v[3] * v.v[3]);
    const double expected = std::acos(std::max(-1.0, std::min(1.0, dot / (nu * nv))));
    c.require(std::abs(theta - expected) <= 1e-12, "dihedral angle disagrees with normals");
    c.require(theta >= 0.0 && theta <= 3.14159265358979324, "angle out of [0, pi]");
  }
  return c.done("cosine-law");
}

// ---------------------------------------------------------------------------
// Clifford-algebra checks
// ---------------------------------------------------------------------------

CheckResult check_commuting_e0(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const MV e0 = e0_mv(alg);
  for (BladeMask m = 0; m < alg->blade_count(); ++m) {
    const MV x = MV::blade(alg, m);
    c.require(e0 * x == x.grade_involution() * e0, "e0 X != a(X) e0 on blade " +
                                                       alg->blade_name(m));
  }
  for (int t = 0; t < 1000; ++t) {
    const MV x = rand_mv(alg, rng);
    c.require(e0 * x == x.grade_involution() * e0, "e0 X != a(X) e0 on a random element");
  }
  return c.done("commuting-e0");
}

CheckResult check_playfair_decomposition(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const MV e0 = e0_mv(alg);
  for (int pt = 0; pt < 20; ++pt) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    // Independent split basis: products of the w vectors, and those times
    // e0; invert once, re-solve every sample.
    std::vector<MV> w_blades;
    for (BladeMask b = 0; b < 16; ++b) {
      if ((b & 1) != 0) continue;
      MV prod = MV::one(alg);
      for (std::size_t i = 1; i < 4; ++i)
        if ((b >> i) & 1)
          prod = prod * MV::from_vector(alg, comp.canonical_section().col(i - 1));
      w_blades.push_back(prod);
    }
    Mat<R> basis(16, 16);
    for (std::size_t j = 0; j < 8; ++j) {
      for (const auto& [mask, coef] : w_blades[j].terms()) basis.at(mask, j) = coef;
      const MV ideal_blade = w_blades[j] * e0;
      for (const auto& [mask, coef] : ideal_blade.terms()) basis.at(mask, 8 + j) = coef;
    }
    const auto basis_inv = basis.inverse();
    if (!c.require(basis_inv.has_value(), "split basis of Cl(V) is singular")) break;

    for (int t = 0; t < 200; ++t) {
      const MV x = rand_mv(alg, rng);
      const auto split = frame.decompose(x);
      c.require(split.at_w + split.ideal_cofactor * e0 == x, "reconstruction failed");
      c.require(frame.in_cl_w(split.at_w), "at_w component is not in Cl(W)");
      c.require(frame.in_cl_w(split.ideal_cofactor), "cofactor is not in Cl(W)");
      // Uniqueness: the independent linear solve agrees.
      std::vector<R> coords(16, R(0));
      for (const auto& [mask, coef] : x.terms()) coords[mask] = coef;
      const auto sol = basis_inv->apply(coords);
      MV at(alg), cof(alg);
      for (std::size_t j = 0; j < 8; ++j) {
        at = at + sol[j] * w_blades[j];
        cof = cof + sol[8 + j] * w_blades[j];
      }
      c.require(at == split.at_w && cof == split.ideal_cofactor,
                "decomposition differs from the independent re-solve");
    }
  }
  return c.done("playfair-decomposition");
}

CheckResult check_ideal_equality(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const MV e0 = e0_mv(alg);
  for (int pt = 0; pt < 5; ++pt) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    for (BladeMask m = 0; m < alg->blade_count(); ++m) {
      const MV x = MV::blade(alg, m);
      c.require(frame.projection(x) * e0 == x * e0, "Cl(pi_W)(X) e0 != X e0");
    }
    for (int t = 0; t < 100; ++t) {
      const MV x = rand_mv(alg, rng);
      c.require(frame.projection(x) * e0 == x * e0, "Cl(pi_W)(X) e0 != X e0");
    }
  }
  return c.done("ideal-equality");
}

CheckResult check_derivation_laws(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  for (int pt = 0; pt < 5; ++pt) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    c.require(frame.derivation(e0_mv(alg)) == e0_mv(alg), "D_W does not fix e0");
    for (int t = 0; t < 200; ++t) {
      const MV x = rand_mv(alg, rng);
      const MV y = rand_mv(alg, rng);
      c.require(frame.derivation(x * y) ==
                    x * frame.derivation(y) + frame.derivation(x) * y,
                "Leibniz law failed");
      c.require(is_in_ideal(frame.derivation(x)), "derivation image is not in the ideal");
      c.require(frame.derivation(frame.derivation(x)) == frame.derivation(x),
                "D_W is not idempotent");
      c.require(frame.projection(frame.projection(x)) == frame.projection(x),
                "Cl(pi_W) is not idempotent");
    }
  }
  return c.done("derivation-laws");
}

CheckResult check_quotient_algebra(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const auto quot = quotient_algebra<R>(alg);
  c.require(quot->dim() == 3 && !quot->form().is_degenerate(),
            "quotient algebra has the wrong form");
  const auto comp = Complement<R>::coordinate(alg->form(), 0);
  const PlayfairFrame<R> frame(alg, comp);
  for (int t = 0; t < 500; ++t) {
    const MV x = rand_mv(alg, rng);
    const MV y = rand_mv(alg, rng);
    c.require(quotient_project(x * y, quot) ==
                  quotient_project(x, quot) * quotient_project(y, quot),
              "Cl(pi) is not multiplicative");
    const MV z = (t % 2 == 0) ? x : x * e0_mv(alg);
    const bool in_ideal = is_in_ideal(z);
    c.require(in_ideal == quotient_project(z, quot).is_zero(),
              "ideal membership disagrees with the quotient kernel");
    c.require(in_ideal == (frame.derivation(z) == z),
              "ideal membership disagrees with D_W fixed points");
  }
  for (BladeMask m = 0; m < alg->blade_count(); ++m) {
    const MV x = MV::blade(alg, m);
    c.require(is_in_ideal(x) == quotient_project(x, quot).is_zero(),
              "ideal membership disagrees on a blade");
  }
  return c.done("quotient-algebra");
}

CheckResult check_ideal_properties(std::uint64_t) {
  Ctx c;
  const auto alg = Algebra<R>::pga3();
  const MV e0 = e0_mv(alg);
  c.require(!is_in_ideal(MV::one(alg)), "ideal is not proper");
  c.require(is_in_ideal(e0) && !e0.is_zero(), "ideal is trivial");
  for (BladeMask a = 0; a < alg->blade_count(); ++a) {
    const MV ma = MV::blade(alg, a);
    for (BladeMask b = 0; b < alg->blade_count(); ++b) {
      const MV ideal_elt = MV::blade(alg, b) * e0;
      c.require(is_in_ideal(ma * ideal_elt) && is_in_ideal(ideal_elt * ma),
                "ideal is not two-sided");
      c.require((ma * e0) * ideal_elt == MV(alg), "ideal does not square to zero");
    }
  }
  bool threw = false;
  try {
    inverse(e0);
  } catch (const NotAUnit&) {
    threw = true;
  }
  c.require(threw, "e0 has an inverse");
  return c.done("ideal-properties");
}

CheckResult check_derivation_correspondence(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();

  // Complement -> derivation -> complement.
  for (int t = 0; t < 20; ++t) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    LinearEndo<R> d(alg);
    for (BladeMask m = 0; m < alg->blade_count(); ++m) {
      const MV image = frame.derivation(MV::blade(alg, m));
      for (const auto& [mask, coef] : image.terms()) d.set(mask, m, coef);
    }
    const auto recovered = complement_from_derivation(d);
    c.require(recovered == comp, "complement_from_derivation(D_W) != W");
  }

  // Derivation -> complement -> derivation, building D from the product
  // formula D(v_1...v_k) = sum_i lambda_i v_1...v_{i-1} a(v_{i+1}...v_k) e0.
  for (int t = 0; t < 20; ++t) {
    std::array<R, 4> lambda{R(1), rand_rational(rng), rand_rational(rng), rand_rational(rng)};
    LinearEndo<R> d(alg);
    for (BladeMask m = 0; m < alg->blade_count(); ++m) {
      MV image(alg);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < 4; ++i)
        if ((m >> i) & 1) idx.push_back(i);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        MV head = MV::one(alg);
        for (std::size_t j = 0; j < i; ++j)
          head = head * MV::basis_vector(alg, idx[j]);
        MV tail = MV::one(alg);
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          tail = tail * MV::basis_vector(alg, idx[j]);
        image = image + lambda[idx[i]] * (head * tail.grade_involution() * e0_mv(alg));
      }
      for (const auto& [mask, coef] : image.terms()) d.set(mask, m, coef);
    }
    const auto comp = complement_from_derivation(d);
    const PlayfairFrame<R> frame(alg, comp);
    for (BladeMask m = 0; m < alg->blade_count(); ++m)
      c.require(frame.derivation(MV::blade(alg, m)) == d.image_of_blade(m),
                "D_W of the recovered complement differs from D");
    for (std::size_t i = 1; i < 4; ++i) {
      Vec<R> expect(4, R(0));
      expect[i] = R(1);
      expect[0] = -lambda[i];
      c.require(comp.canonical_section().col(i - 1) == expect,
                "recovered complement has the wrong basis");
    }
  }
  return c.done("derivation-correspondence");
}

CheckResult check_right_mul_iso(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  for (const R& lambda : {R(1), R(2), R(-3), rand_nonzero_rational(rng)}) {
    // Matrix of rho_lambda on the e0-free blades.
    Mat<R> rho(16, 8);
    std::size_t j = 0;
    std::vector<BladeMask> w_masks;
    for (BladeMask b = 0; b < 16; ++b) {
      if ((b & 1) != 0) continue;
      w_masks.push_back(b);
      const MV img = right_mul_e0(MV::blade(alg, b), lambda);
      c.require(is_in_ideal(img), "rho image is not in the ideal");
      for (const auto& [mask, coef] : img.terms()) rho.at(mask, j) = coef;
      ++j;
    }
    c.require(rho.rank() == 8, "right-multiplication by lambda e0 is not injective");
    // Image spans the ideal: every e0 blade is hit.
    Mat<R> square(8, 8);
    for (std::size_t col = 0; col < 8; ++col)
      for (std::size_t row = 0; row < 8; ++row)
        square.at(row, col) = rho.at((w_masks[row] | 1), col);
    c.require(square.rank() == 8, "right-multiplication does not cover the ideal");
  }
  c.require(right_mul_e0(MV::basis_vector(alg, 1), R(1)) !=
                right_mul_e0(MV::basis_vector(alg, 1), R(2)),
            "distinct scales give the same map");
  bool threw = false;
  try {
    right_mul_e0(MV::one(alg), R(0));
  } catch (const ZeroScale&) {
    threw = true;
  }
  c.require(threw, "zero scale accepted");
  return c.done("right-mul-iso");
}

CheckResult check_algebra_isomorphisms(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const auto quot = quotient_algebra<R>(alg);
  for (int pt = 0; pt < 5; ++pt) {
    const auto comp = pga3::point_complement(rand_point(rng));
    // Lift Cl(V/Fe0) -> Cl(W) through the canonical section, blade by blade.
    auto lift = [&](const Multivector<R>& q) {
      MV out(alg);
      for (const auto& [mask, coef] : q.terms()) {
        MV prod = MV::one(alg);
        for (std::size_t i = 0; i < 3; ++i)
          if ((mask >> i) & 1)
            prod = prod * MV::from_vector(alg, comp.canonical_section().col(i));
        out = out + coef * prod;
      }
      return out;
    };
    for (BladeMask a = 0; a < quot->blade_count(); ++a) {
      const auto qa = Multivector<R>::blade(quot, a);
      c.require(quotient_project(lift(qa), quot) == qa, "Cl(pi) o Cl(omega_W) != id");
      for (BladeMask b = 0; b < quot->blade_count(); ++b) {
        const auto qb = Multivector<R>::blade(quot, b);
        c.require(lift(qa * qb) == lift(qa) * lift(qb),
                  "Clifford extension of the section is not an algebra map");
      }
    }
    for (int t = 0; t < 50; ++t) {
      const auto q = rand_mv(quot, rng);
      c.require(quotient_project(lift(q), quot) == q, "lift does not section Cl(pi)");
    }
  }
  return c.done("algebra-isomorphisms");
}

CheckResult check_twisted_extension(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  for (int pt = 0; pt < 5; ++pt) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    for (int t = 0; t < 200; ++t) {
      const MV x = rand_mv(alg, rng);
      const MV y = rand_mv(alg, rng);
      const auto px = to_twisted_pair(x, comp);
      const auto py = to_twisted_pair(y, comp);
      c.require(to_twisted_pair(x * y, comp) == twisted_mul(px, py),
                "phi(xy) != phi(x) phi(y)");
      c.require(from_twisted_pair(px, comp) == x, "from_twisted_pair does not invert");
      // to o from = id on Cl(W) x Cl(W).
      const TwistedPair<R> q{frame.projection(rand_mv(alg, rng)),
                             frame.projection(rand_mv(alg, rng))};
      c.require(to_twisted_pair(from_twisted_pair(q, comp), comp) == q,
                "to_twisted_pair does not invert");
    }
  }
  return c.done("twisted-extension");
}

CheckResult check_even_odd_split(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  std::size_t even_count = 0;
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if ((std::popcount(m) & 1) == 0) ++even_count;
  c.require(even_count == 8, "even subalgebra of PGA3 should have dimension 8");

  const auto comp = Complement<R>::coordinate(alg->form(), 0);
  for (int t = 0; t < 200; ++t) {
    const MV x = rand_mv(alg, rng);
    const auto [ev, od] = even_odd_split(x);
    c.require(ev + od == x, "parity split does not reconstruct");
    c.require(ev.grade_involution() == ev && od.grade_involution() == -od,
              "parity parts misbehave under the involution");
    // Even subalgebra splits untwisted: the twist acts trivially there.
    const MV r1 = rand_mv(alg, rng).even_part();
    const MV m1 = rand_mv(alg, rng);
    const MV r2 = rand_mv(alg, rng).even_part();
    const MV m2 = rand_mv(alg, rng);
    const auto twisted = twisted_mul(TwistedPair<R>{r1, m1}, TwistedPair<R>{r2, m2});
    c.require(twisted.m == r1 * m2 + m1 * r2, "twist is not trivial on even elements");
    // decompose respects parity: the cofactor flips it. The even subalgebra
    // splits through (even, odd) pairs, the odd subspace through (odd, even).
    const auto se = to_twisted_pair(ev, comp);
    c.require(se.r.grade_involution() == se.r && se.m.grade_involution() == -se.m,
              "even split has wrong parities");
    const auto so = to_twisted_pair(od, comp);
    c.require(so.r.grade_involution() == -so.r && so.m.grade_involution() == so.m,
              "odd split has wrong parities");
  }
  return c.done("even-odd-split");
}

CheckResult check_unit_group(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  const MV one = MV::one(alg);
  const MV e0 = e0_mv(alg);

  std::vector<Complement<R>> comps;
  comps.push_back(Complement<R>::coordinate(alg->form(), 0));
  for (int i = 0; i < 4; ++i) comps.push_back(pga3::point_complement(rand_point(rng)));

  for (int t = 0; t < 500; ++t) {
    const auto& comp = comps[static_cast<std::size_t>(t) % comps.size()];
    const MV x = rand_unit(alg, rng);
    const auto ud = unit_decompose(x, comp);
    c.require(ud.r * (one + ud.tail * e0) == x, "unit decomposition does not reconstruct");
    const MV r_inv = inverse(ud.r);  // throws if the r-component is not a unit
    c.require(r_inv * ud.r == one, "r-component inverse is wrong");
  }

  for (int t = 0; t < 50; ++t) {
    const MV bad = rand_mv(alg, rng) * e0;  // zero quotient image
    bool threw = false;
    try {
      unit_decompose(bad, comps[0]);
    } catch (const NotAUnit&) {
      threw = true;
    }
    c.require(threw, "an ideal element decomposed as a unit");
    try {
      inverse(bad);
      c.fail("an ideal element has an inverse");
    } catch (const NotAUnit&) {
    }
  }

  // Semidirect law through tau: (r1,t1)(r2,t2) = (r1 r2, t2 + tau(r2^-1)(t1)).
  for (int t = 0; t < 500; ++t) {
    const auto& comp = comps[static_cast<std::size_t>(t) % comps.size()];
    const MV x = rand_unit(alg, rng);
    const MV y = rand_unit(alg, rng);
    const auto ux = unit_decompose(x, comp);
    const auto uy = unit_decompose(y, comp);
    const auto uxy = unit_decompose(x * y, comp);
    c.require(uxy.r == ux.r * uy.r, "unit r-components do not multiply");
    c.require(uxy.tail == uy.tail + tau_action(inverse(uy.r), ux.tail),
              "unit tails do not follow the semidirect law");
  }

  // tau is multiplicative.
  for (int t = 0; t < 50; ++t) {
    const MV r1 = rand_unit(alg, rng);
    const MV r2 = rand_unit(alg, rng);
    const MV m = rand_mv(alg, rng);
    c.require(tau_action(r1 * r2, m) == tau_action(r1, tau_action(r2, m)),
              "tau(r1 r2) != tau(r1) o tau(r2)");
  }
  return c.done("unit-group");
}

CheckResult check_bivector_ideal(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();
  for (int t = 0; t < 200; ++t) {
    const auto comp = pga3::point_complement(rand_point(rng));
    const PlayfairFrame<R> frame(alg, comp);
    const MV b = rand_bivector(alg, rng);
    const auto split = bivector_split(b, comp);
    const MV we0 = MV::from_vector(alg, split.ideal_vector) * e0_mv(alg);
    c.require(split.rotational + we0 == b, "bivector split does not reconstruct");
    c.require(split.rotational.is_homogeneous(2) && frame.in_cl_w(split.rotational),
              "rotational part is not in Cl^2(W)");
    c.require(split.ideal_vector[0].is_zero(), "ideal vector kept an e0 component");
    c.require(frame.derivation(b) == we0, "D_W(B) != W e0");
  }
  return c.done("bivector-ideal");
}

CheckResult check_lie_split(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  const auto alg = Algebra<R>::pga3();

  // Grade preservation, exhaustive over blade pairs.
  for (BladeMask bm = 0; bm < alg->blade_count(); ++bm) {
    if (std::popcount(bm) != 2) continue;
    const MV b = MV::blade(alg, bm);
    for (BladeMask xm = 0; xm < alg->blade_count(); ++xm) {
      const MV r = commutator(b, MV::blade(alg, xm));
      c.require(r.is_zero() || r.is_homogeneous(static_cast<std::size_t>(std::popcount(xm))),
                "commutator changed the grade");
    }
  }

  // Jacobi identity on bivectors.
  for (int t = 0; t < 100; ++t) {
    const MV b1 = rand_bivector(alg, rng);
    const MV b2 = rand_bivector(alg, rng);
    const MV b3 = rand_bivector(alg, rng);
    const MV jac = commutator(b1, commutator(b2, b3)) + commutator(b2, commutator(b3, b1)) +
                   commutator(b3, commutator(b1, b2));
    c.require(jac.is_zero(), "Jacobi identity failed");
    c.require(commutator(b1, b2) == -commutator(b2, b1), "commutator is not antisymmetric");
  }

  // W e0 is an abelian ideal.
  for (BladeMask i = 1; i < 4; ++i)
    for (BladeMask j = 1; j < 4; ++j) {
      const MV wi = MV::blade(alg, (BladeMask{1} << i) | 1);
      const MV wj = MV::blade(alg, (BladeMask{1} << j) | 1);
      c.require(commutator(wi, wj).is_zero(), "translation bivectors do not commute");
    }

  // Semidirect action and the Lie tau homomorphism, on the coordinate W.
  for (int t = 0; t < 100; ++t) {
    MV b1(alg), b2(alg);
    for (BladeMask m : {BladeMask{0b0110}, BladeMask{0b1010}, BladeMask{0b1100}}) {
      b1.add_term(m, rand_rational(rng));
      b2.add_term(m, rand_rational(rng));
    }
    Vec<R> wv = rand_vec(4, rng);
    wv[0] = R(0);
    const MV w = MV::from_vector(alg, wv);
    const MV we0 = w * e0_mv(alg);
    c.require(commutator(b1, we0) == commutator(b1, w) * e0_mv(alg),
              "B x (W e0) != (B x W) e0");
    c.require(commutator(commutator(b1, b2), w) ==
                  commutator(b1, commutator(b2, w)) - commutator(b2, commutator(b1, w)),
              "tau is not a Lie homomorphism");
  }
  return c.done("lie-split");
}

CheckResult check_se3_table(std::uint64_t) {
  Ctx c;
  const auto alg = Algebra<R>::pga3();
  std::vector<Multivector<R>> basis;
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if (std::popcount(m) == 2) basis.push_back(MV::blade(alg, m));
  const auto table = lie_structure_table(basis);

  // Structure constants of se(3) in the basis e01, e02, e12, e03, e13, e23,
  // derived from the 4x4 matrix representation (translations E_{i3},
  // rotations -Lz, +Ly, -Lx).
  static const int kSe3[6][6][6] = {
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0}},
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}},
      {{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}},
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}},
      {{0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
       {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}},
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0},
       {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}};

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        c.require(table[i][j][k] == R(kSe3[i][j][k]),
                  "structure constant differs from se(3) at [" + std::to_string(i) + "][" +
                      std::to_string(j) + "][" + std::to_string(k) + "]");
  return c.done("se3-table");
}

CheckResult check_simple_bivectors(std::uint64_t seed) {
  Ctx c;
  Rng rng(seed);
  for (const auto& alg : {Algebra<R>::pga3(), Algebra<R>::from_signature(2, 2, 2)}) {
    for (int t = 0; t < 100; ++t) {
      const MV b = rand_bivector(alg, rng);
      const auto pairs = simple_bivector_decomposition(b);
      c.require(pairs.size() <= alg->dim() / 2, "too many simple factors");
      MV sum(alg);
      for (const auto& [u, v] : pairs) {
        c.require(alg->form().bilinear(u, v).is_zero(), "pair is not orthogonal");
        sum = sum + MV::from_vector(alg, u) * MV::from_vector(alg, v);
      }
      c.require(sum == b, "simple bivectors do not sum back");
    }
  }
  return c.done("simple-bivectors");
}

using CheckFn = CheckResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> kChecks = {
      {"quotient-form", check_quotient_form},
      {"orthogonal-complement", check_orthogonal_complement},
      {"playfair-vector", check_playfair_vector},
      {"playfair-axiom", check_playfair_axiom},
      {"cosine-law", check_cosine_law},
      {"commuting-e0", check_commuting_e0},
      {"playfair-decomposition", check_playfair_decomposition},
      {"ideal-equality", check_ideal_equality},
      {"derivation-laws", check_derivation_laws},
      {"quotient-algebra", check_quotient_algebra},
      {"ideal-properties", check_ideal_properties},
      {"derivation-correspondence", check_derivation_correspondence},
      {"right-mul-iso", check_right_mul_iso},
      {"algebra-isomorphisms", check_algebra_isomorphisms},
      {"twisted-extension", check_twisted_extension},
      {"even-odd-split", check_even_odd_split},
      {"unit-group", check_unit_group},
      {"bivector-ideal", check_bivector_ideal},
      {"lie-split", check_lie_split},
      {"se3-table", check_se3_table},
      {"simple-bivectors", check_simple_bivectors},
  };
  return kChecks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
  }();
  return kNames;
}

CheckResult run_check(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    try {
      return fn(seed);
    } catch (const std::exception& e) {
      return {name, false, std::string("exception: ") + e.what()};
    }
  }
  throw Error("unknown check suite '" + name + "'");
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(run_check(name, seed));
  return out;
}

}  // namespace gacalc::verify
