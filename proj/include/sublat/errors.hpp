#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sublat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of the operands do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A square matrix that had to be invertible has determinant zero.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what, mpz_class det = 0)
      : Error(what), det_(std::move(det)) {}
  const mpz_class& det() const { return det_; }

 private:
  mpz_class det_;
};

/// Basis rows are linearly dependent.
class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds what the implementation supports (e.g. enumeration dimension).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix file or unknown catalog name.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// An identity that holds by construction failed; indicates a bug or corrupt data.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sublat
