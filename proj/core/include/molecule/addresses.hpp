#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molecule/big_count.hpp"
#include "molecule/counting.hpp"

namespace molecule {

/// Internal angle p/q of a satellite attachment, in lowest terms with 0 < p < q.
class RotationNumber {
 public:
  /// Throws DomainError unless 0 < p < q and gcd(p, q) = 1.
  RotationNumber(std::uint64_t p, std::uint64_t q);

  std::uint64_t numerator() const { return p_; }
  std::uint64_t denominator() const { return q_; }

  /// (q - p)/q: the angle of the complex-conjugate attachment.
  RotationNumber conjugate() const { return {q_ - p_, q_}; }

  friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
  // Orders by (q, p), the canonical enumeration order.
  friend auto operator<=>(const RotationNumber& a, const RotationNumber& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

/// Chain of satellite attachments read outward from the main cardioid.
/// The empty address is the main cardioid itself.
struct SatelliteAddress {
  std::vector<RotationNumber> rotations;

  std::uint64_t period() const;
  SatelliteAddress conjugate() const;
  SatelliteAddress prefix(std::size_t length) const;

  friend bool operator==(const SatelliteAddress&, const SatelliteAddress&) = default;
  friend auto operator<=>(const SatelliteAddress&, const SatelliteAddress&) = default;
};

/// Product of the denominators; 1 for the empty address.
std::uint64_t address_period(const SatelliteAddress& address);

/// One address per main-molecule component of period n, ordered
/// lexicographically in (q1, p1, q2, p2, ...).
std::vector<SatelliteAddress> enumerate_addresses(std::uint64_t n, EnumerationBudget budget = {});

/// Number of addresses of period n, computed without enumerating them.
BigCount address_count(std::uint64_t n);

/// Integer-pair array form, e.g. "[[1,2],[1,3]]".
std::string to_json(const SatelliteAddress& address);

/// Parses the integer-pair array form; throws DomainError on malformed input.
SatelliteAddress address_from_json(const std::string& text);

std::string to_string(const SatelliteAddress& address);  // "<1/2, 1/3>"

}  // namespace molecule
