#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace harbourne {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// The representation is canonical: the denominator is positive and
/// gcd(|num|, den) = 1 after every operation, so member-wise equality is
/// value equality.
class Rat {
 public:
  Rat() = default;
  Rat(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t value) : num_(value) {}       // NOLINT(google-explicit-constructor)
  Rat(int value) : num_(value) {}                // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p/q", or "p" when the value is an integer.
  std::string str() const;

  /// Decimal approximation with `places` digits after the point, rounded half
  /// away from zero using integer arithmetic only.
  std::string decimal(int places = 4) const;

  /// Inverse of str(): accepts "p", "-p", "p/q" with q != 0.
  static Rat parse(std::string_view text);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rat abs(const Rat& value);

std::ostream& operator<<(std::ostream& os, const Rat& value);

}  // namespace harbourne
