#include "molecule/addresses.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "molecule/arithmetic.hpp"
#include "molecule/errors.hpp"

namespace molecule {

RotationNumber::RotationNumber(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (q < 2 || p == 0 || p >= q || gcd_u64(p, q) != 1) {
    throw DomainError("invalid rotation number " + std::to_string(p) + "/" + std::to_string(q));
  }
}

std::uint64_t SatelliteAddress::period() const { return address_period(*this); }

SatelliteAddress SatelliteAddress::conjugate() const {
  SatelliteAddress out;
  out.rotations.reserve(rotations.size());
  for (const auto& r : rotations) out.rotations.push_back(r.conjugate());
  return out;
}

SatelliteAddress SatelliteAddress::prefix(std::size_t length) const {
  SatelliteAddress out;
  const auto end = rotations.begin() + static_cast<std::ptrdiff_t>(std::min(length, rotations.size()));
  out.rotations.assign(rotations.begin(), end);
  return out;
}

std::uint64_t address_period(const SatelliteAddress& address) {
  std::uint64_t period = 1;
  for (const auto& r : address.rotations) period *= r.denominator();
  return period;
}

std::vector<SatelliteAddress> enumerate_addresses(std::uint64_t n, EnumerationBudget budget) {
  if (n == 0) throw DomainError("enumerate_addresses: n must be positive, got 0");
  if (address_count(n) > BigCount(budget.max_tuples)) {
    throw BudgetExceeded("addresses of period " + std::to_string(n) + " exceed the budget of " +
                         std::to_string(budget.max_tuples));
  }
  // Numerators coprime to each denominator, ascending.
  std::map<std::uint64_t, std::vector<RotationNumber>> spokes;
  for (std::uint64_t d : divisors(n)) {
    if (d == 1) continue;
    auto& list = spokes[d];
    for (std::uint64_t p = 1; p < d; ++p) {
      if (gcd_u64(p, d) == 1) list.emplace_back(p, d);
    }
  }

  std::vector<SatelliteAddress> out;
  for_each_ordered_factorization(
      n,
      [&](std::span<const std::uint64_t> parts) {
        // Odometer over the numerator choices at each link.
        std::vector<std::size_t> index(parts.size(), 0);
        while (true) {
          SatelliteAddress a;
          a.rotations.reserve(parts.size());
          for (std::size_t i = 0; i < parts.size(); ++i) a.rotations.push_back(spokes.at(parts[i])[index[i]]);
          out.push_back(std::move(a));
          std::size_t i = parts.size();
          while (i > 0) {
            --i;
            if (++index[i] < spokes.at(parts[i]).size()) break;
            index[i] = 0;
            if (i == 0) return;
          }
          if (parts.empty()) return;
        }
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

BigCount address_count(std::uint64_t n) {
  if (n == 0) throw DomainError("address_count: n must be positive, got 0");
  // Every address of period n is a first link of denominator d followed by an
  // address of period n/d.
  std::map<std::uint64_t, BigCount> count;
  const auto divs = divisors(n);
  for (std::uint64_t r : divs) {
    if (r == 1) {
      count[1] = BigCount(1);
      continue;
    }
    BigCount total;
    for (std::uint64_t d : divs) {
      if (d > r) break;
      if (d > 1 && r % d == 0) total += BigCount(euler_phi_u64(d)) * count.at(r / d);
    }
    count[r] = total;
  }
  return count.at(n);
}

std::string to_json(const SatelliteAddress& address) {
  std::string out = "[";
  for (std::size_t i = 0; i < address.rotations.size(); ++i) {
    if (i > 0) out += ",";
    out += "[" + std::to_string(address.rotations[i].numerator()) + "," +
           std::to_string(address.rotations[i].denominator()) + "]";
  }
  return out + "]";
}

SatelliteAddress address_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed address: ") + e.what());
  }
  if (!parsed.is_array()) throw DomainError("address must be a JSON array");
  SatelliteAddress out;
  for (const auto& pair : parsed) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      throw DomainError("address entries must be [p,q] pairs of nonnegative integers");
    }
    out.rotations.emplace_back(pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>());
  }
  return out;
}

std::string to_string(const SatelliteAddress& address) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < address.rotations.size(); ++i) {
    if (i > 0) os << ", ";
    os << address.rotations[i].numerator() << "/" << address.rotations[i].denominator();
  }
  os << ">";
  return os.str();
}

}  // namespace molecule
