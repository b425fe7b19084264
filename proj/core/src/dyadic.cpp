#include "hoising/dyadic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hoising {

namespace {

constexpr int kMaxExponent = 62;

std::int64_t shift_left_checked(std::int64_t value, int bits) {
  if (bits >= kMaxExponent) throw std::overflow_error("dyadic overflow");
  const std::int64_t limit = std::int64_t{1} << (kMaxExponent - bits);
  if (value >= limit || value <= -limit) throw std::overflow_error("dyadic overflow");
  return value * (std::int64_t{1} << bits);
}

}  // namespace

Dyadic Dyadic::from_parts(std::int64_t numerator, int exponent) {
  Dyadic d;
  if (exponent < 0) {
    d.num_ = shift_left_checked(numerator, -exponent);
    d.exp_ = 0;
  } else {
    d.num_ = numerator;
    d.exp_ = exponent;
  }
  d.normalize();
  return d;
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2) == 0) {
    num_ /= 2;
    --exp_;
  }
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::scaled_pow2(int power) const { return from_parts(num_, exp_ - power); }

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  const int e = std::max(exp_, other.exp_);
  const std::int64_t a = shift_left_checked(num_, e - exp_);
  const std::int64_t b = shift_left_checked(other.num_, e - other.exp_);
  *this = from_parts(a + b, e);
  return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  const std::int64_t n = num_ * other.num_;
  if (num_ != 0 && n / num_ != other.num_) throw std::overflow_error("dyadic overflow");
  *this = from_parts(n, exp_ + other.exp_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& value) { return os << value.to_string(); }

}  // namespace hoising
