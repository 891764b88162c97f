#pragma once

#include <stdexcept>
#include <string>

namespace wente {

// Argument outside the mathematical domain of an operation (k >= 1, a
// non-reduced fraction, tan(theta) tan(theta_bar) >= 1, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Numerical failure: quadrature ran out of subdivisions, a root was not
// bracketed, and similar. Never swallowed by the library.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureError : public NumericalError {
 public:
  explicit QuadratureError(const std::string& what) : NumericalError(what) {}
};

class NoRootError : public NumericalError {
 public:
  explicit NoRootError(const std::string& what) : NumericalError(what) {}
};

// Requested surface is not one of the eight with a tabulated eigenfunction
// selection.
class UnknownSurfaceError : public std::invalid_argument {
 public:
  explicit UnknownSurfaceError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace wente

namespace wente {

// A matrix formula referenced a basic integral that was not computed.
class MissingIntegralError : public std::out_of_range {
 public:
  explicit MissingIntegralError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace wente
