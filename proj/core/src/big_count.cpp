#include "molecule/big_count.hpp"

#include <ostream>

#include "molecule/errors.hpp"

namespace molecule {

BigCount::BigCount(std::uint64_t value) {
  // mpz_class has no portable uint64 constructor; go through two 32-bit halves.
  value_ = static_cast<unsigned long>(value >> 32);
  value_ <<= 32;
  value_ += static_cast<unsigned long>(value & 0xffffffffULL);
}

BigCount BigCount::from_string(std::string_view decimal) {
  if (decimal.empty()) throw DomainError("empty decimal string");
  for (char ch : decimal) {
    if (ch < '0' || ch > '9') {
      throw DomainError("invalid decimal digit in '" + std::string(decimal) + "'");
    }
  }
  BigCount out;
  out.value_.set_str(std::string(decimal), 10);
  return out;
}

BigCount BigCount::from_mpz(const mpz_class& value) {
  if (sgn(value) < 0) throw DomainError("BigCount cannot hold a negative value");
  BigCount out;
  out.value_ = value;
  return out;
}

std::string BigCount::to_string() const { return value_.get_str(10); }

bool BigCount::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw OverflowError("BigCount " + to_string() + " exceeds 64 bits");
  mpz_class high = value_ >> 32;
  mpz_class low = value_ - (high << 32);
  return (static_cast<std::uint64_t>(high.get_ui()) << 32) | low.get_ui();
}

double BigCount::to_double() const { return value_.get_d(); }

BigCount& BigCount::operator+=(const BigCount& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw DomainError("BigCount subtraction would go negative");
  value_ -= rhs.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigCount BigCount::pow(unsigned long exponent) const {
  BigCount out;
  mpz_pow_ui(out.value_.get_mpz_t(), value_.get_mpz_t(), exponent);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigCount& value) {
  return os << value.to_string();
}

Ratio::Ratio(const BigCount& numerator, const BigCount& denominator) {
  if (sgn(denominator.mpz()) == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

BigCount Ratio::numerator() const { return BigCount::from_mpz(value_.get_num()); }
BigCount Ratio::denominator() const { return BigCount::from_mpz(value_.get_den()); }

std::string Ratio::to_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Ratio& Ratio::operator*=(const Ratio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Ratio& value) { return os << value.to_string(); }

}  // namespace molecule
