#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gacalc {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct AlgebraMismatch : Error {
  using Error::Error;
};

// Raised when a quotient is requested by a subspace that is not radical.
struct NotRadical : Error {
  using Error::Error;
};

struct NotAnIsometry : Error {
  using Error::Error;
};

struct NotAComplement : Error {
  using Error::Error;
};

// The algebra has no degenerate generator (its form is nondegenerate).
struct NoDegenerateGenerator : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct NotADerivation : Error {
  using Error::Error;
};

struct DoesNotFixE0 : Error {
  using Error::Error;
};

struct ImageNotInIdeal : Error {
  using Error::Error;
};

struct NotGrade2 : Error {
  using Error::Error;
};

struct NotSpanning : Error {
  using Error::Error;
};

struct ZeroScale : Error {
  using Error::Error;
};

struct NotAPlane : Error {
  using Error::Error;
};

struct GradeOutOfRange : Error {
  using Error::Error;
};

// Expression parse failure; carries the byte offset of the offending token
// and the set of tokens that would have been accepted there.
struct SyntaxError : Error {
  std::size_t offset;
  std::vector<std::string> expected;

  SyntaxError(const std::string& msg, std::size_t off, std::vector<std::string> exp = {})
      : Error(msg), offset(off), expected(std::move(exp)) {}
};

// Blade literal names a basis vector outside the algebra's dimension.
struct UnknownBlade : Error {
  using Error::Error;
};

}  // namespace gacalc
