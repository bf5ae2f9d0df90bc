#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace becurv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed line in an edge-list document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(const std::string& label)
      : Error("self-loop at vertex '" + label + "'") {}
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& label)
      : Error("unknown vertex '" + label + "'") {}
};

// Curvature is undefined at a vertex without neighbours: Gamma(f)(x) vanishes
// identically and the quotient characterization is empty.
class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(const std::string& label)
      : Error("isolated vertex '" + label + "' (degree 0)") {}
};

/// Raised when a pointwise operator is asked for a vertex whose neighbourhood
/// is not fully contained in the ball.
class OutOfScopeVertexError : public Error {
 public:
  explicit OutOfScopeVertexError(const std::string& label)
      : Error("vertex '" + label + "' lies on the outer sphere of the ball") {}
};

class InvalidOrderError : public Error {
 public:
  explicit InvalidOrderError(int k)
      : Error("invalid tiling order " + std::to_string(k)) {}
};

class NonSymmetricError : public Error {
 public:
  explicit NonSymmetricError(double asymmetry)
      : Error("matrix is not symmetric (max |m - m^T| = " +
              std::to_string(asymmetry) + ")") {}
};

class SingularS2BlockError : public Error {
 public:
  explicit SingularS2BlockError(const std::string& label)
      : Error("outer-sphere block is singular at vertex '" + label + "'") {}
};

/// The Schur and bisection solvers disagree beyond the verification tolerance.
class MethodDisagreementError : public Error {
 public:
  MethodDisagreementError(double schur, double bisection)
      : Error("curvature methods disagree: schur " + std::to_string(schur) +
              ", bisection " + std::to_string(bisection)) {}
};

}  // namespace becurv
