#include "calab/scalar.hpp"

namespace calab {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(uint32_t characteristic) : p_(characteristic) {
  if (p_ == 0) return;
  if (p_ >= (1u << 31)) {
    throw DomainError("characteristic " + std::to_string(p_) +
                      " does not fit the word-size residue representation");
  }
  if (!is_prime_u32(p_)) {
    throw DomainError("characteristic " + std::to_string(p_) +
                      " is not prime");
  }
}

namespace {

uint32_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

}  // namespace

Scalar Scalar::from_int(const Field& k, long long v) {
  if (k.characteristic() == 0) {
    Scalar s;
    s.rat_ = Rational(v);
    return s;
  }
  const int64_t p = k.characteristic();
  int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(k.characteristic(), static_cast<uint32_t>(r));
}

Scalar Scalar::from_rational(Rational r) {
  Scalar s;
  s.rat_ = std::move(r);
  return s;
}

bool Scalar::is_zero() const {
  return p_ != 0 ? fp_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
  return p_ != 0 ? fp_ == 1 : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw DomainError("scalar field mismatch: characteristic " +
                      std::to_string(p_) + " vs " + std::to_string(o.p_));
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (p_ != 0) {
    uint64_t s = static_cast<uint64_t>(fp_) + o.fp_;
    if (s >= p_) s -= p_;
    return Scalar(p_, static_cast<uint32_t>(s));
  }
  return from_rational(rat_ + o.rat_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (p_ != 0) {
    uint64_t s = static_cast<uint64_t>(fp_) + p_ - o.fp_;
    if (s >= p_) s -= p_;
    return Scalar(p_, static_cast<uint32_t>(s));
  }
  return from_rational(rat_ - o.rat_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (p_ != 0) {
    uint64_t s = static_cast<uint64_t>(fp_) * o.fp_ % p_;
    return Scalar(p_, static_cast<uint32_t>(s));
  }
  return from_rational(rat_ * o.rat_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    return Scalar(p_, fp_ == 0 ? 0 : p_ - fp_);
  }
  return from_rational(-rat_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  if (p_ != 0) return Scalar(p_, mod_pow(fp_, p_ - 2, p_));
  return from_rational(Rational(1) / rat_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ != 0 ? fp_ == o.fp_ : rat_ == o.rat_;
}

bool Scalar::displays_negative() const { return p_ == 0 && rat_ < 0; }

uint32_t Scalar::fp_value() const {
  if (p_ == 0) throw DomainError("fp_value on a rational scalar");
  return fp_;
}

const Rational& Scalar::rational() const {
  if (p_ != 0) throw DomainError("rational value on a prime-field scalar");
  return rat_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(fp_);
  std::string s = numerator(rat_).str();
  if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
  return s;
}

}  // namespace calab
