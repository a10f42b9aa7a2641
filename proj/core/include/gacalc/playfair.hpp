#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gacalc/algebra.hpp"
#include "gacalc/errors.hpp"
#include "gacalc/linear_endo.hpp"
#include "gacalc/multivector.hpp"
#include "gacalc/quadratic_space.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc {

// The unique split x = at_w + ideal_cofactor * e0 with both components in
// Cl(W).
template <ScalarField S>
struct PlayfairSplit {
  Multivector<S> at_w;
  Multivector<S> ideal_cofactor;
};

// Element (r, m) of the twisted trivial extension Cl(W) x Cl(W), with
// product (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 a(r2)) for the grade
// involution a.
template <ScalarField S>
struct TwistedPair {
  Multivector<S> r;
  Multivector<S> m;

  friend bool operator==(const TwistedPair& a, const TwistedPair& b) {
    return a.r == b.r && a.m == b.m;
  }
};

// x is in the two-sided square-zero ideal Cl(V) e0 exactly when its image in
// the quotient algebra vanishes; on the reference (coordinate) complement
// that is a mask test.
template <ScalarField S>
bool is_in_ideal(const Multivector<S>& x) {
  const BladeMask e0 = x.algebra()->e0_mask();
  for (const auto& [mask, c] : x.terms())
    if ((mask & e0) == 0) return false;
  return true;
}

// Cl(V / F e0): one dimension fewer, the e0 entry dropped from the metric.
template <ScalarField S>
typename Algebra<S>::Ptr quotient_algebra(const typename Algebra<S>::Ptr& alg) {
  const std::size_t e0 = alg->e0_index();
  Mat<S> g(alg->dim() - 1, alg->dim() - 1);
  std::size_t j = 0;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    if (i == e0) continue;
    g.at(j, j) = alg->metric(i);
    ++j;
  }
  return Algebra<S>::from_form(QuadraticForm<S>::from_gram(std::move(g)));
}

// Cl(pi): drops every blade containing e0 and re-indexes the rest onto the
// quotient algebra. An algebra homomorphism with kernel Cl(V) e0.
template <ScalarField S>
Multivector<S> quotient_project(const Multivector<S>& x,
                                const typename Algebra<S>::Ptr& quot) {
  const std::size_t e0 = x.algebra()->e0_index();
  const BladeMask e0_bit = BladeMask{1} << e0;
  const BladeMask low = e0_bit - 1;
  Multivector<S> out(quot);
  for (const auto& [mask, c] : x.terms()) {
    if ((mask & e0_bit) != 0) continue;
    const BladeMask dropped = (mask & low) | ((mask >> 1) & ~low);
    out.add_term(dropped, c);
  }
  return out;
}

template <ScalarField S>
Multivector<S> quotient_project(const Multivector<S>& x) {
  return quotient_project(x, quotient_algebra<S>(x.algebra()));
}

// Split-adapted frame for one complement W: the basis change L sending the
// coordinate basis to {e0} u {w_t}, extended to the algebra. Since the
// canonical W basis carries the same diagonal gram as the transversal, the
// split picture lives in the same Algebra object.
template <ScalarField S>
class PlayfairFrame {
 public:
  PlayfairFrame(typename Algebra<S>::Ptr alg, Complement<S> comp)
      : alg_(std::move(alg)), comp_(std::move(comp)) {
    if (comp_.dim() != alg_->dim() || !(comp_.form() == alg_->form()))
      throw AlgebraMismatch("complement was built on a different form");
    if (comp_.e0_index() != alg_->e0_index())
      throw AlgebraMismatch("complement uses a different degenerate generator");
    const std::size_t n = alg_->dim();
    Mat<S> basis_change(n, n);
    bool coordinate = true;
    Vec<S> e0(n, scalar_traits<S>::from_int(0));
    e0[comp_.e0_index()] = scalar_traits<S>::from_int(1);
    basis_change.set_col(comp_.e0_index(), e0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const std::size_t t = comp_.transversal_index(j);
      const Vec<S> w = comp_.canonical_section().col(j);
      basis_change.set_col(t, w);
      for (std::size_t i = 0; i < n; ++i) {
        const S expect = scalar_traits<S>::from_int(i == t ? 1 : 0);
        if (!(w[i] == expect)) coordinate = false;
      }
    }
    coordinate_ = coordinate;
    if (!coordinate_) {
      from_split_ = LinearEndo<S>::clifford_extension(alg_, basis_change);
      to_split_ = LinearEndo<S>::clifford_extension(alg_, *basis_change.inverse());
    }
  }

  const Complement<S>& complement() const { return comp_; }
  const typename Algebra<S>::Ptr& algebra() const { return alg_; }

  PlayfairSplit<S> decompose(const Multivector<S>& x) const {
    const Multivector<S> y = coordinate_ ? x : to_split_->apply(x);
    const BladeMask e0_bit = alg_->e0_mask();
    Multivector<S> at(alg_), cof(alg_);
    for (const auto& [mask, c] : y.terms()) {
      if ((mask & e0_bit) == 0) {
        at.add_term(mask, c);
      } else {
        // c * f_mask = y_b * f_b * e0 with b = mask \ e0; the blade product
        // supplies the +-1 relating the two.
        const BladeMask b = mask ^ e0_bit;
        auto [sign, back] = alg_->blade_product(b, e0_bit);
        cof.add_term(b, c * sign);
      }
    }
    if (coordinate_) return {std::move(at), std::move(cof)};
    return {from_split_->apply(at), from_split_->apply(cof)};
  }

  // D_W: x -> x - Cl(pi_W)(x); a Clifford algebra derivation fixing e0.
  Multivector<S> derivation(const Multivector<S>& x) const {
    return x - decompose(x).at_w;
  }

  Multivector<S> projection(const Multivector<S>& x) const { return decompose(x).at_w; }

  bool in_cl_w(const Multivector<S>& x) const {
    const Multivector<S> y = coordinate_ ? x : to_split_->apply(x);
    const BladeMask e0_bit = alg_->e0_mask();
    for (const auto& [mask, c] : y.terms())
      if ((mask & e0_bit) != 0) return false;
    return true;
  }

  // Rewrite between the coordinate basis and the split-adapted basis
  // {e0} u {w_t}; identity maps for the coordinate complement.
  Multivector<S> to_split_basis(const Multivector<S>& x) const {
    return coordinate_ ? x : to_split_->apply(x);
  }
  Multivector<S> from_split_basis(const Multivector<S>& x) const {
    return coordinate_ ? x : from_split_->apply(x);
  }

 private:
  typename Algebra<S>::Ptr alg_;
  Complement<S> comp_;
  bool coordinate_;
  std::optional<LinearEndo<S>> to_split_, from_split_;
};

template <ScalarField S>
PlayfairSplit<S> decompose(const Multivector<S>& x, const Complement<S>& comp) {
  return PlayfairFrame<S>(x.algebra(), comp).decompose(x);
}

template <ScalarField S>
Multivector<S> derivation_d(const Complement<S>& comp, const Multivector<S>& x) {
  return PlayfairFrame<S>(x.algebra(), comp).derivation(x);
}

template <ScalarField S>
TwistedPair<S> to_twisted_pair(const Multivector<S>& x, const Complement<S>& comp) {
  auto split = decompose(x, comp);
  return {std::move(split.at_w), std::move(split.ideal_cofactor)};
}

template <ScalarField S>
Multivector<S> from_twisted_pair(const TwistedPair<S>& p, const Complement<S>&) {
  const auto& alg = p.r.algebra();
  return p.r + p.m * Multivector<S>::blade(alg, alg->e0_mask());
}

template <ScalarField S>
TwistedPair<S> twisted_mul(const TwistedPair<S>& p, const TwistedPair<S>& q) {
  return {p.r * q.r, p.r * q.m + p.m * q.r.grade_involution()};
}

// lambda * x * e0; right-multiplication by a nonzero multiple of e0 is a
// linear isomorphism from Cl(W) onto the ideal.
template <ScalarField S>
Multivector<S> right_mul_e0(const Multivector<S>& x, const S& lambda) {
  if (scalar_traits<S>::is_zero(lambda)) throw ZeroScale("scale must be nonzero");
  const auto& alg = x.algebra();
  return lambda * (x * Multivector<S>::blade(alg, alg->e0_mask()));
}

// Recovers the complement W with D = D_W from a Clifford algebra derivation
// into the ideal fixing e0. Validates the Leibniz law exhaustively on blade
// pairs rather than trusting the caller.
template <ScalarField S>
Complement<S> complement_from_derivation(const LinearEndo<S>& d) {
  const auto& alg = d.algebra();
  const std::size_t n = alg->dim();
  const std::size_t e0 = alg->e0_index();
  const BladeMask blades = static_cast<BladeMask>(alg->blade_count());

  for (std::size_t i = 0; i < n; ++i)
    if (!d.image_of_blade(BladeMask{1} << i).is_homogeneous(1))
      throw NotADerivation("derivation must map vectors to vectors");
  for (BladeMask a = 0; a < blades; ++a) {
    const Multivector<S> ma = Multivector<S>::blade(alg, a);
    const Multivector<S> da = d.image_of_blade(a);
    for (BladeMask b = 0; b < blades; ++b) {
      const Multivector<S> mb = Multivector<S>::blade(alg, b);
      if (d.apply(ma * mb) != ma * d.image_of_blade(b) + da * mb)
        throw NotADerivation("Leibniz law fails on a blade pair");
    }
  }
  const BladeMask e0_bit = BladeMask{1} << e0;
  if (d.image_of_blade(e0_bit) != Multivector<S>::blade(alg, e0_bit))
    throw DoesNotFixE0("derivation must fix e0");
  for (BladeMask a = 0; a < blades; ++a)
    if (!is_in_ideal(d.image_of_blade(a)))
      throw ImageNotInIdeal("derivation image must lie in the ideal");

  // Omega_D = id - D restricted to V: w_t = e_t - D(e_t).
  std::vector<Vec<S>> w_basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == e0) continue;
    const Multivector<S> wi =
        Multivector<S>::basis_vector(alg, i) - d.image_of_blade(BladeMask{1} << i);
    w_basis.push_back(wi.vector_part());
  }
  Complement<S> comp =
      Complement<S>::from_subspace(alg->form(), e0, Subspace<S>::span(n, w_basis));

  PlayfairFrame<S> frame(alg, comp);
  for (BladeMask a = 0; a < blades; ++a)
    if (frame.derivation(Multivector<S>::blade(alg, a)) != d.image_of_blade(a))
      throw NotADerivation("derivation is not the projection of any complement");
  return comp;
}

}  // namespace gacalc
