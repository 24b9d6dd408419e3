#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "leibkit/errors.hpp"

namespace leib {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Ground field descriptor: the rationals, or GF(p) for a prime p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec gf(std::int64_t p);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::int64_t characteristic() const { return is_prime_field() ? p : 0; }

  bool operator==(const FieldSpec&) const = default;

  std::string to_string() const;
};

bool is_prime(std::int64_t n);

/// An exact field element: an arbitrary-precision rational, or a residue
/// in [0, p).  Immutable in practice; all arithmetic returns new values.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}  // rational zero

  static Scalar zero(const FieldSpec& f) { return of(f, 0); }
  static Scalar one(const FieldSpec& f) { return of(f, 1); }
  static Scalar of(const FieldSpec& f, std::int64_t value);
  static Scalar rational(const BigInt& num, const BigInt& den);
  static Scalar rational(const BigRat& q);
  static Scalar residue(const FieldSpec& f, std::int64_t r);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); PrimeField only.
  std::int64_t res() const { return r_; }
  /// Rational value; Rationals only.
  const BigRat& rat() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used for canonical forms: residues 0 < 1 < ... < p-1 over
  /// GF(p), the usual order over Q.
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

 private:
  Scalar(const FieldSpec& f, BigRat q) : field_(f), q_(std::move(q)) {}
  Scalar(const FieldSpec& f, std::int64_t r) : field_(f), r_(r) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  BigRat q_;             // Rationals only
  std::int64_t r_ = 0;   // PrimeField only
};

}  // namespace leib
