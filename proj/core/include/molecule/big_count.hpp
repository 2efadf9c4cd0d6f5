#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace molecule {

/// Arbitrary-precision nonnegative integer.
///
/// Holds component counts, totients and ordered Bell numbers, which outgrow
/// 64 bits quickly (M(2^k) = 3^(k-1)). Arithmetic that would produce a
/// negative value throws DomainError.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses a plain decimal string ("0", "22", ...). No sign, no whitespace.
  static BigCount from_string(std::string_view decimal);

  /// Wraps a GMP integer; throws DomainError if it is negative.
  static BigCount from_mpz(const mpz_class& value);

  std::string to_string() const;
  const mpz_class& mpz() const { return value_; }

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws OverflowError if !fits_u64()
  double to_double() const;

  BigCount& operator+=(const BigCount& rhs);
  BigCount& operator-=(const BigCount& rhs);  // throws if rhs > *this
  BigCount& operator*=(const BigCount& rhs);

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigCount pow(unsigned long exponent) const;

 private:
  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& value);

/// Exact nonnegative rational, always kept in lowest terms.
class Ratio {
 public:
  Ratio() = default;
  Ratio(const BigCount& numerator, const BigCount& denominator);

  BigCount numerator() const;
  BigCount denominator() const;

  /// "p/q" in lowest terms; integers keep the "/1" suffix.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Ratio& operator*=(const Ratio& rhs);
  friend Ratio operator*(Ratio lhs, const Ratio& rhs) { return lhs *= rhs; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Ratio& value);

}  // namespace molecule
