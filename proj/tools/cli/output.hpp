#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "molecule/addresses.hpp"
#include "molecule/big_count.hpp"
#include "molecule/continuation.hpp"
#include "molecule/counting.hpp"
#include "molecule/verify.hpp"

namespace molecule::cli {

enum class CountMethod { kDirect, kRecursive, kClosed };

/// "direct" | "recursive" | "closed"; throws DomainError otherwise.
CountMethod parse_method(const std::string& name);

/// M(n) by the requested method. `closed` needs a prime power or a squarefree
/// n and throws DomainError for anything else.
BigCount count_with_method(std::uint64_t n, CountMethod method, EnumerationBudget budget = {});

struct TableRow {
  std::uint64_t n;
  BigCount m_n;
  BigCount nu_n;
  Ratio ratio;  // m_n / nu_n
};

/// Rows 1..max_n. The direct method falls back to the recursive one when the
/// enumeration budget runs out; `fallbacks` collects the affected n.
std::vector<TableRow> build_table(std::uint64_t max_n, CountMethod method, EnumerationBudget budget,
                                  std::vector<std::uint64_t>* fallbacks = nullptr);

std::string table_csv(std::span<const TableRow> rows);
std::string table_json(std::span<const TableRow> rows);

std::string addresses_json(std::span<const SatelliteAddress> addresses);

nlohmann::ordered_json center_json(const Center& center);
std::string centers_json(std::span<const Center> centers);
std::string report_json(const VerificationReport& report);

}  // namespace molecule::cli
