#include "leibkit/field.hpp"

namespace leib {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (!is_prime(p)) {
    throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
  }
  if (p >= (std::int64_t{1} << 31)) {
    throw Error("GF(p) modulus too large");
  }
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "Q";
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw Error("division by zero in GF(p)");
  return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::of(const FieldSpec& f, std::int64_t value) {
  if (f.is_prime_field()) return Scalar(f, mod_reduce(value, f.p));
  return Scalar(f, BigRat(value));
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Scalar(FieldSpec::rationals(), BigRat(num, den));
}

Scalar Scalar::rational(const BigRat& q) {
  return Scalar(FieldSpec::rationals(), q);
}

Scalar Scalar::residue(const FieldSpec& f, std::int64_t r) {
  if (!f.is_prime_field()) throw Error("residue requires a prime field");
  return Scalar(f, mod_reduce(r, f.p));
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? r_ == 1 : q_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatchError("scalar fields differ: " + field_.to_string() +
                             " vs " + o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_prime_field()) return Scalar(field_, mod_reduce(r_ + o.r_, field_.p));
  return Scalar(field_, q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_prime_field()) return Scalar(field_, mod_reduce(r_ - o.r_, field_.p));
  return Scalar(field_, q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_prime_field()) return Scalar(field_, mod_reduce(r_ * o.r_, field_.p));
  return Scalar(field_, q_ * o.q_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) return Scalar(field_, mod_reduce(-r_, field_.p));
  return Scalar(field_, -q_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (field_.is_prime_field()) return Scalar(field_, mod_inverse(r_, field_.p));
  return Scalar(field_, 1 / q_);
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
  require_same_field(o);
  return field_.is_prime_field() ? r_ < o.r_ : q_ < o.q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

}  // namespace leib
