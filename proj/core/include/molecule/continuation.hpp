#pragma once

#include <optional>

#include "molecule/addresses.hpp"
#include "molecule/dynamics.hpp"

namespace molecule {

/// Tolerances and step counts for multiplier path-following.
struct PathFollowConfig {
  unsigned multiplier_steps = 64;
  double newton_tol = 1e-12;
  unsigned newton_max_iter = 64;
  // Radial overshoot of the parent multiplier past |lambda| = 1 when stepping
  // from a satellite root into the child component.
  double entry_offset = 1e-3;
  double match_tol = 1e-8;
  double distinct_tol = 1e-6;

  /// Throws DomainError unless 0 < newton_tol < entry_offset < 1,
  /// distinct_tol > 2 match_tol and the counts are positive.
  void validate() const;
};

/// A superattracting parameter: Q_period(c) = 0 with exact period `period`.
struct Center {
  ComplexParam c;
  unsigned period = 1;
  std::optional<SatelliteAddress> address;  // absent for sweep-found centers
  double residual = 0.0;                    // |Q_period(c)|
};

/// The main cardioid center, c = 0.
Center main_cardioid_center();

struct CyclePoint {
  ComplexParam z;
  ComplexParam multiplier;
};

/// Newton on f_c^period(z) - z from `seed`; returns the periodic point and
/// the multiplier of its orbit. Throws ConvergenceError after
/// cfg.newton_max_iter iterations without convergence.
CyclePoint cycle_point_and_multiplier(ComplexParam c, unsigned period, ComplexParam seed,
                                      const PathFollowConfig& cfg = {});

/// Where a parent cycle's multiplier reaches exp(2 pi i p/q).
struct SatelliteRoot {
  ComplexParam c;  // the root parameter
  ComplexParam z;  // a point of the parent cycle at the root (parabolic)
};

/// Continues the parent cycle from its center along multiplier t exp(2 pi i p/q),
/// t from 0 to 1, to the root of the p/q satellite.
SatelliteRoot follow_to_root(const Center& parent, const RotationNumber& r, const PathFollowConfig& cfg = {});

/// Walks the address from the main cardioid, following each link to its
/// satellite root, stepping into the child and continuing the child cycle
/// multiplier down to 0. The empty address yields c = 0.
/// Throws ConvergenceError (with chain depth and step) or PeriodMismatch.
Center locate_center(const SatelliteAddress& address, const PathFollowConfig& cfg = {});

}  // namespace molecule
