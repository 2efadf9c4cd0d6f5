#include "cli/output.hpp"

#include "molecule/arithmetic.hpp"
#include "molecule/errors.hpp"

namespace molecule::cli {

CountMethod parse_method(const std::string& name) {
  if (name == "direct") return CountMethod::kDirect;
  if (name == "recursive") return CountMethod::kRecursive;
  if (name == "closed") return CountMethod::kClosed;
  throw DomainError("unknown method '" + name + "' (expected direct, recursive or closed)");
}

BigCount count_with_method(std::uint64_t n, CountMethod method, EnumerationBudget budget) {
  switch (method) {
    case CountMethod::kDirect:
      return molecule_count_direct(n, budget);
    case CountMethod::kRecursive:
      return molecule_count_recursive(n);
    case CountMethod::kClosed: {
      const PrimeFactorization f = factorize(n);
      if (f.is_prime_power()) return molecule_count_prime_power(f.pairs[0].prime, f.pairs[0].exponent);
      if (f.is_squarefree()) {
        std::vector<std::uint64_t> primes;
        for (const auto& pp : f.pairs) primes.push_back(pp.prime);
        return molecule_count_squarefree(primes);
      }
      throw DomainError("closed form needs a prime power or squarefree n, got " + std::to_string(n));
    }
  }
  throw DomainError("unknown method");
}

std::vector<TableRow> build_table(std::uint64_t max_n, CountMethod method, EnumerationBudget budget,
                                  std::vector<std::uint64_t>* fallbacks) {
  if (max_n == 0) throw DomainError("table needs max_n >= 1");
  std::vector<TableRow> rows;
  rows.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    BigCount m_n;
    try {
      m_n = method == CountMethod::kClosed ? molecule_count_recursive(n) : count_with_method(n, method, budget);
    } catch (const BudgetExceeded&) {
      if (fallbacks != nullptr) fallbacks->push_back(n);
      m_n = molecule_count_recursive(n);
    }
    BigCount nu = total_component_count(n);
    Ratio ratio(m_n, nu);
    rows.push_back({n, std::move(m_n), std::move(nu), std::move(ratio)});
  }
  return rows;
}

std::string table_csv(std::span<const TableRow> rows) {
  std::string out = "n,M,nu,ratio\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + row.m_n.to_string() + "," + row.nu_n.to_string() + "," +
           row.ratio.to_string() + "\n";
  }
  return out;
}

std::string table_json(std::span<const TableRow> rows) {
  // Written by hand so counts past 64 bits stay exact JSON integers.
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ",";
    out += "{\"n\":" + std::to_string(rows[i].n) + ",\"M\":" + rows[i].m_n.to_string() +
           ",\"nu\":" + rows[i].nu_n.to_string() + ",\"ratio\":\"" + rows[i].ratio.to_string() + "\"}";
  }
  return out + "]\n";
}

std::string addresses_json(std::span<const SatelliteAddress> addresses) {
  std::string out = "[";
  for (std::size_t i = 0; i < addresses.size(); ++i) {
    if (i > 0) out += ",";
    out += "{\"rotations\":" + to_json(addresses[i]) + ",\"period\":" + std::to_string(addresses[i].period()) + "}";
  }
  return out + "]\n";
}

nlohmann::ordered_json center_json(const Center& center) {
  nlohmann::ordered_json j;
  j["re"] = center.c.real();
  j["im"] = center.c.imag();
  j["period"] = center.period;
  if (center.address) {
    j["address"] = nlohmann::ordered_json::array();
    for (const auto& r : center.address->rotations) j["address"].push_back({r.numerator(), r.denominator()});
  } else {
    j["address"] = nullptr;
  }
  j["residual"] = center.residual;
  return j;
}

std::string centers_json(std::span<const Center> centers) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& center : centers) j.push_back(center_json(center));
  return j.dump() + "\n";
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["expected"] = report.expected.to_u64();
  j["located"] = report.located();
  j["verdict"] = report.verdict;
  j["centers"] = nlohmann::ordered_json::array();
  for (const auto& center : report.centers) j["centers"].push_back(center_json(center));
  j["failures"] = report.failures;
  j["distinct"] = report.distinct;
  if (report.sweep) {
    j["sweep_count"] = report.sweep->centers.size();
  } else {
    j["sweep_count"] = nullptr;
  }
  return j.dump() + "\n";
}

}  // namespace molecule::cli
