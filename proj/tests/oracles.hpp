#pragma once

// Test-only oracles and generators. Both oracles are independent of the
// library's product implementation: the blade product is recomputed by
// explicit word rewriting, and the se(3) structure constants come from a
// 4x4 matrix representation.

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gacalc/multivector.hpp"
#include "gacalc/pga3.hpp"
#include "gacalc/scalar.hpp"

namespace gacalc::testing {

// Reduces the concatenated word of generator indices with the two tensor
// rewriting rules: e_p e_q = 2 B(e_p, e_q) - e_q e_p for p > q, and
// e_p e_p = B(e_p, e_p). Ascending words are basis blades.
template <ScalarField S>
Multivector<S> oracle_blade_product(const std::shared_ptr<const Algebra<S>>& alg, BladeMask a,
                                    BladeMask b) {
  struct Word {
    std::vector<int> letters;
    S coef;
  };
  Word init{{}, scalar_traits<S>::from_int(1)};
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if ((a >> i) & 1) init.letters.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if ((b >> i) & 1) init.letters.push_back(static_cast<int>(i));

  Multivector<S> result(alg);
  std::vector<Word> work{std::move(init)};
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
      const int p = w.letters[i];
      const int q = w.letters[i + 1];
      if (p > q) {
        Word swapped = w;
        std::swap(swapped.letters[i], swapped.letters[i + 1]);
        swapped.coef = -swapped.coef;
        const S bpq = alg->form().gram().at(static_cast<std::size_t>(p),
                                            static_cast<std::size_t>(q));
        if (!scalar_traits<S>::is_zero(bpq)) {
          Word contracted = w;
          contracted.letters.erase(contracted.letters.begin() + static_cast<long>(i),
                                   contracted.letters.begin() + static_cast<long>(i) + 2);
          contracted.coef = w.coef * scalar_traits<S>::from_int(2) * bpq;
          work.push_back(std::move(contracted));
        }
        work.push_back(std::move(swapped));
        rewritten = true;
        break;
      }
      if (p == q) {
        const S bpp = alg->form().gram().at(static_cast<std::size_t>(p),
                                            static_cast<std::size_t>(p));
        if (!scalar_traits<S>::is_zero(bpp)) {
          Word contracted = w;
          contracted.letters.erase(contracted.letters.begin() + static_cast<long>(i),
                                   contracted.letters.begin() + static_cast<long>(i) + 2);
          contracted.coef = w.coef * bpp;
          work.push_back(std::move(contracted));
        }
        rewritten = true;
        break;
      }
    }
    if (!rewritten) {
      BladeMask mask = 0;
      for (int letter : w.letters) mask |= BladeMask{1} << letter;
      result.add_term(mask, w.coef);
    }
  }
  return result;
}

// The se(3) oracle: integer 4x4 matrices for the canonical PGA3 bivector
// basis e01, e02, e12, e03, e13, e23, with translations as E_{i3} and
// rotations as -Lz, +Ly, -Lx. Brackets are plain matrix commutators.
class Se3Oracle {
 public:
  using M4 = std::array<std::array<int, 4>, 4>;

  Se3Oracle() {
    auto unit = [](int i, int j) {
      M4 m{};
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      return m;
    };
    const M4 lx = sub(unit(2, 1), unit(1, 2));
    const M4 ly = sub(unit(0, 2), unit(2, 0));
    const M4 lz = sub(unit(1, 0), unit(0, 1));
    basis_ = {unit(0, 3), unit(1, 3), neg(lz), unit(2, 3), ly, neg(lx)};
  }

  // Coefficients of [basis_i, basis_j] in the matrix basis; aborts the test
  // run via a thrown error when the bracket leaves the span.
  std::array<int, 6> bracket_coords(std::size_t i, std::size_t j) const {
    const M4 br = sub(mul(basis_[i], basis_[j]), mul(basis_[j], basis_[i]));
    // Each basis matrix has exactly one +1 in the strict upper triangle, at
    // a position unique to it; read the coefficients there, then cross-check
    // the full matrix.
    std::array<int, 6> c{};
    c[2] = br[0][1];
    c[4] = br[0][2];
    c[5] = br[1][2];
    c[0] = br[0][3];
    c[1] = br[1][3];
    c[3] = br[2][3];
    M4 acc{};
    for (std::size_t k = 0; k < 6; ++k)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +=
              c[k] * basis_[k][static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
    if (!(acc == br)) throw Error("se(3) bracket left the span of the basis");
    return c;
  }

 private:
  static M4 mul(const M4& a, const M4& b) {
    M4 c{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == 0) continue;
        for (int j = 0; j < 4; ++j)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    return c;
  }
  static M4 sub(const M4& a, const M4& b) {
    M4 c{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) c[i][j] = a[i][j] - b[i][j];
    return c;
  }
  static M4 neg(const M4& a) { return sub(M4{}, a); }

  std::array<M4, 6> basis_;
};

// Random data, seeded per test.
struct Gen {
  std::mt19937_64 g;
  explicit Gen(std::uint64_t seed) : g(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

  Rational rational() { return Rational(range(-9, 9), range(1, 9)); }

  Rational nonzero_rational() {
    Rational v = rational();
    while (v.is_zero()) v = rational();
    return v;
  }

  Multivector<Rational> mv(const Algebra<Rational>::Ptr& alg, int density = 3) {
    Multivector<Rational> out(alg);
    for (BladeMask m = 0; m < alg->blade_count(); ++m)
      if (range(1, density) == 1) out.add_term(m, rational());
    return out;
  }

  Multivector<double> mv_double(const Algebra<double>::Ptr& alg, int density = 3) {
    Multivector<double> out(alg);
    for (BladeMask m = 0; m < alg->blade_count(); ++m)
      if (range(1, density) == 1) out.add_term(m, real(-4, 4));
    return out;
  }

  Multivector<Rational> bivector(const Algebra<Rational>::Ptr& alg) {
    Multivector<Rational> out(alg);
    for (BladeMask m = 0; m < alg->blade_count(); ++m)
      if (std::popcount(m) == 2 && range(1, 2) == 1) out.add_term(m, rational());
    return out;
  }

  pga3::Point<Rational> point() { return {rational(), rational(), rational()}; }
};

}  // namespace gacalc::testing
