#include "molecule/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "molecule/addresses.hpp"
#include "molecule/errors.hpp"

namespace molecule {

VerificationReport verify_molecule_count(unsigned n, const VerifyOptions& options) {
  if (n == 0) throw DomainError("verify_molecule_count: n must be positive");
  options.path.validate();
  if (options.sweep && n > options.sweep_config.sweep_limit) {
    throw DomainError("period " + std::to_string(n) + " above the sweep limit; disable the sweep or raise it");
  }

  VerificationReport report;
  report.n = n;
  report.expected = molecule_count_recursive(n);

  const std::vector<SatelliteAddress> addresses = enumerate_addresses(n, options.budget);
  std::vector<std::optional<Center>> located(addresses.size());
  std::vector<std::string> errors(addresses.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < addresses.size(); i += stride) {
      try {
        located[i] = locate_center(addresses[i], options.path);
      } catch (const Error& e) {
        errors[i] = to_string(addresses[i]) + ": " + e.what();
      }
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  for (std::size_t i = 0; i < addresses.size(); ++i) {
    if (located[i]) {
      report.centers.push_back(*located[i]);
    } else {
      report.failures.push_back(errors[i]);
    }
  }
  sort_centers(report.centers);

  for (const Center& center : report.centers) {
    if (!(center.residual <= options.path.newton_tol)) {
      report.failures.push_back(to_string(*center.address) + ": residual above newton_tol");
    }
    if (primitive_period(center.c, n, options.path.match_tol) != n) {
      report.failures.push_back(to_string(*center.address) + ": primitive period differs from " + std::to_string(n));
    }
  }

  report.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.centers.size(); ++i) {
    for (std::size_t j = i + 1; j < report.centers.size(); ++j) {
      report.min_separation = std::min(report.min_separation, std::abs(report.centers[i].c - report.centers[j].c));
    }
  }
  report.distinct = report.min_separation > options.path.distinct_tol;
  if (!report.distinct) report.failures.push_back("located centers are not pairwise distinct");

  if (options.sweep) {
    SweepConfig sweep_config = options.sweep_config;
    sweep_config.distinct_tol = std::min(sweep_config.distinct_tol, options.path.distinct_tol);
    report.sweep = all_centers_sweep(n, sweep_config);
    for (const std::string& failure : report.sweep->failures) report.failures.push_back("sweep: " + failure);
    for (const Center& center : report.centers) {
      const auto matches = std::count_if(report.sweep->centers.begin(), report.sweep->centers.end(),
                                         [&](const Center& root) {
                                           return std::abs(root.c - center.c) <= options.path.match_tol;
                                         });
      if (matches != 1) {
        report.failures.push_back(to_string(*center.address) + ": matches " + std::to_string(matches) +
                                  " sweep roots instead of exactly one");
      }
    }
  }

  if (BigCount(report.centers.size()) != report.expected) {
    report.failures.push_back("located " + std::to_string(report.centers.size()) + " centers, expected " +
                              report.expected.to_string());
  }
  report.verdict = report.failures.empty();
  return report;
}

}  // namespace molecule
