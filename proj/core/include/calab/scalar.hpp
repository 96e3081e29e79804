#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "calab/errors.hpp"

namespace calab {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality by trial division; sufficient for p < 2^31.
bool is_prime_u32(uint32_t n);

/// Coefficient field: F_p for a word-sized prime p < 2^31, or Q when p == 0.
class Field {
 public:
  Field() : p_(0) {}
  explicit Field(uint32_t characteristic);

  uint32_t characteristic() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

 private:
  uint32_t p_;
};

/// Exact scalar: a residue in [0, p) when the field has characteristic p,
/// otherwise a reduced fraction. Operands of binary operations must come
/// from the same field.
class Scalar {
 public:
  Scalar() : p_(0), fp_(0), rat_(0) {}

  static Scalar from_int(const Field& k, long long v);
  static Scalar from_rational(Rational r);  // char 0 only
  static Scalar zero(const Field& k) { return from_int(k, 0); }
  static Scalar one(const Field& k) { return from_int(k, 1); }

  uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; Fermat powering in F_p. Error on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// True when the canonical display starts with a minus sign (char 0 only;
  /// residues print as-is).
  bool displays_negative() const;

  uint32_t fp_value() const;
  const Rational& rational() const;

  /// Canonical decimal text: "5", "-3", "2/3", "-1/6".
  std::string str() const;

 private:
  Scalar(uint32_t p, uint32_t v) : p_(p), fp_(v), rat_(0) {}
  void check_same_field(const Scalar& o) const;

  uint32_t p_;    // 0 means rational
  uint32_t fp_;   // residue when p_ != 0
  Rational rat_;  // value when p_ == 0
};

}  // namespace calab
