#pragma once

#include <stdexcept>
#include <string>

namespace leib {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Raised when an operation requires an exhaustive finite-field sweep but the
/// algebra lives over the rationals (or another unsupported configuration).
struct UnsupportedBackendError : Error {
  using Error::Error;
};

/// Raised when an enumeration would exceed the configured subspace budget.
struct ResourceGuardError : Error {
  using Error::Error;
};

struct NotAnIdealError : Error {
  using Error::Error;
};

struct NotASubalgebraError : Error {
  using Error::Error;
};

struct NotSolvableError : Error {
  using Error::Error;
};

/// A structure-constant tensor that fails the defining identity.  Carries the
/// first offending basis triple (0-based, lexicographic order).
struct LeibnizViolationError : Error {
  LeibnizViolationError(int i, int j, int k)
      : Error("Leibniz identity fails on basis triple (" + std::to_string(i) +
              "," + std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

struct CertificateError : Error {
  using Error::Error;
};

struct FormatError : Error {
  FormatError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

}  // namespace leib
