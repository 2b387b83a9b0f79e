#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands of a binary matrix operation have different orders.
class OrderMismatchError : public Error {
 public:
  OrderMismatchError(std::size_t lhs, std::size_t rhs)
      : Error("order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// A NaN or infinity would have entered a matrix.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Input to a Hermitian-only routine is too far from Hermitian.
class HermitianViolationError : public Error {
 public:
  HermitianViolationError(double defect, double allowed)
      : Error("matrix is not Hermitian: ||H - H*||_F = " + std::to_string(defect) +
              " exceeds " + std::to_string(allowed)),
        defect_(defect) {}

  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Unknown gallery name (or similar keyed lookup).
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilcert
