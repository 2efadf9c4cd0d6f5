#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molecule/big_count.hpp"
#include "molecule/continuation.hpp"
#include "molecule/counting.hpp"
#include "molecule/sweep.hpp"

namespace molecule {

struct VerifyOptions {
  PathFollowConfig path;
  bool sweep = true;
  SweepConfig sweep_config;
  EnumerationBudget budget;
  unsigned workers = 1;
};

struct VerificationReport {
  unsigned n = 1;
  BigCount expected;             // M(n) from the counting methods
  std::vector<Center> centers;   // located by address, sorted by (re, im)
  bool distinct = false;         // pairwise separation > distinct_tol
  double min_separation = 0.0;
  std::optional<SweepResult> sweep;
  std::vector<std::string> failures;
  bool verdict = false;

  std::size_t located() const { return centers.size(); }
};

/// Locates the center of every address of period n, checks residuals,
/// primitive periods, pairwise distinctness and (optionally) that each
/// located center matches exactly one sweep root. Location errors are
/// recorded as failures; the verdict is true only when every check passes
/// and the located count equals M(n).
VerificationReport verify_molecule_count(unsigned n, const VerifyOptions& options = {});

}  // namespace molecule
