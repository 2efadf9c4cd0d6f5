#pragma once

#include <string>
#include <vector>

#include "molecule/big_count.hpp"
#include "molecule/continuation.hpp"

namespace molecule {

struct SweepConfig {
  unsigned sweep_limit = 14;
  unsigned max_iterations = 5000;
  // Aberth correction size (relative to max(1, |c|)) at which a root is frozen.
  double root_tol = 1e-14;
  // |Q_d(c)| bound used to decide that a root of Q_n has period d | n.
  double classify_tol = 1e-8;
  // Stored centers must satisfy |Q_n(c)| <= residual_tol.
  double residual_tol = 1e-8;
  double distinct_tol = 1e-6;
  unsigned workers = 1;
};

struct SweepResult {
  unsigned n = 1;
  std::vector<Center> centers;  // exact period n, sorted by (re, im)
  BigCount expected;            // total_component_count(n)
  std::size_t roots_found = 0;  // all roots of Q_n, every period
  unsigned iterations = 0;
  double min_separation = 0.0;  // over all roots of Q_n
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// All 2^(n-1) roots of Q_n by Aberth-Ehrlich simultaneous iteration started
/// on |c| = 2, classified by primitive period; keeps the exact-period-n ones.
/// Count or distinctness problems are listed in `failures`; only
/// non-convergence of the iteration itself throws ConvergenceError.
SweepResult all_centers_sweep(unsigned n, const SweepConfig& cfg = {});

/// Sorts by (re, im) lexicographically.
void sort_centers(std::vector<Center>& centers);

}  // namespace molecule
