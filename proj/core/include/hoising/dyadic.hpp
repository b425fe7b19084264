#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hoising {

/// Exact rational of the form numerator / 2^exponent.
///
/// Clause expansions only ever produce coefficients of this shape, so keeping
/// them exact makes every indicator identity checkable with tolerance zero.
/// Values are kept normalized (odd numerator, or zero with exponent 0), which
/// makes structural equality coincide with numeric equality.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)

  static Dyadic from_parts(std::int64_t numerator, int exponent);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const;
  std::string to_string() const;

  /// Multiplies by 2^power (power may be negative).
  Dyadic scaled_pow2(int power) const;

  Dyadic operator-() const { return from_parts(-num_, exp_); }
  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other) { return *this += -other; }
  Dyadic& operator*=(const Dyadic& other);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

 private:
  void normalize();

  std::int64_t num_ = 0;
  int exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& value);

}  // namespace hoising
