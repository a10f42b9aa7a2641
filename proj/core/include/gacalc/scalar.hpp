#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gacalc/errors.hpp"

namespace gacalc {

// Exact arbitrary-precision rational, a thin value wrapper around GMP's
// mpq_class. Always kept in canonical form (gcd 1, positive denominator).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design, mirrors double
  Rational(long n) { v_ = mpz_class(n); }
  Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with arbitrary-precision digits. No decimals.
  static std::optional<Rational> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::string num, den;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') num += s[i++];
    if (num.empty()) return std::nullopt;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') den += s[i++];
      if (den.empty()) return std::nullopt;
    }
    if (i != s.size()) return std::nullopt;
    mpq_class q(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
    if (!den.empty() && mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      return std::nullopt;  // p/0
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
  }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }

  // "p" or "p/q".
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

// Per-scalar-type glue: parsing, printing, and whether arithmetic is exact.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static const char* name() { return "rational"; }
  static Rational from_int(long n) { return Rational(n); }
  static std::optional<Rational> parse(std::string_view s) { return Rational::parse(s); }
  static std::string str(const Rational& v) { return v.str(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static int sgn(const Rational& v) { return v.sgn(); }
  static Rational abs(const Rational& v) { return v.abs(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static const char* name() { return "float"; }
  static double from_int(long n) { return static_cast<double>(n); }
  static std::optional<double> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  }
  // Shortest representation that round-trips.
  static std::string str(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static int sgn(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
  static double abs(double v) { return std::fabs(v); }
};

template <class S>
concept ScalarField = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a* b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { scalar_traits<S>::from_int(0) } -> std::convertible_to<S>;
  scalar_traits<S>::exact;
};

template <ScalarField S>
S scalar_half() {
  return scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
}

}  // namespace gacalc
