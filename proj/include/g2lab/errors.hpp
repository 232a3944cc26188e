#pragma once

#include <stdexcept>
#include <string>

namespace g2lab {

/// Base class for all g2lab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad dimensions or grades, parse errors,
/// out-of-range parameters, structure equations violating Jacobi.
struct InputError : Error {
  using Error::Error;
};

/// A 3-form that is not a positive G2-structure, or not closed, where the
/// operation requires one.
struct GeometryError : Error {
  using Error::Error;
};

/// Numerical breakdown: singular solve, loss of positive definiteness,
/// cross-check disagreement.
struct NumericError : Error {
  using Error::Error;
};

/// d^2 != 0 on some covector: carries the first offending index (1-based)
/// and the residual sup-norm.
struct NotLieAlgebraError : InputError {
  int covector;
  double residual;
  NotLieAlgebraError(int k, double r)
      : InputError("not a Lie algebra: d^2 e" + std::to_string(k) +
                   " != 0 (residual " + std::to_string(r) + ")"),
        covector(k),
        residual(r) {}
};

}  // namespace g2lab
