#include "molecule/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "molecule/errors.hpp"

namespace molecule {

void PathFollowConfig::validate() const {
  if (multiplier_steps == 0) throw DomainError("multiplier_steps must be positive");
  if (newton_max_iter == 0) throw DomainError("newton_max_iter must be positive");
  if (!(newton_tol > 0.0 && newton_tol < entry_offset && entry_offset < 1.0)) {
    throw DomainError("require 0 < newton_tol < entry_offset < 1");
  }
  if (!(match_tol > 0.0 && distinct_tol > 2.0 * match_tol)) {
    throw DomainError("require match_tol > 0 and distinct_tol > 2 * match_tol");
  }
}

Center main_cardioid_center() { return Center{0.0, 1, SatelliteAddress{}, 0.0}; }

namespace {

// Perturbation applied when a Newton derivative vanishes exactly.
const ComplexParam kKick = std::polar(1e-3, 0.75 * std::numbers::pi);

CyclePoint solve_cycle(ComplexParam c, unsigned period, ComplexParam z, const PathFollowConfig& cfg,
                       std::size_t depth) {
  for (unsigned iter = 0; iter < cfg.newton_max_iter; ++iter) {
    OrbitJet jet = orbit_jet(z, c, period);
    ComplexParam g = jet.value - z;
    ComplexParam dg = jet.dz - 1.0;
    if (std::abs(dg) <= std::numeric_limits<double>::min()) {
      z += kKick * std::max(1.0, std::abs(z));
      continue;
    }
    ComplexParam delta = g / dg;
    const double cap = 1.0 + std::abs(z);
    if (std::abs(delta) > cap) delta *= cap / std::abs(delta);
    z -= delta;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    if (std::abs(delta) <= cfg.newton_tol) {
      jet = orbit_jet(z, c, period);
      if (std::abs(jet.value - z) <= cfg.newton_tol) return {z, jet.dz};
    }
  }
  throw ConvergenceError("periodic point Newton iteration did not converge", depth, 0);
}

// Unknowns (z, c) of a cycle whose multiplier is pinned to a moving target.
//   F1 = f^period(z) - z, or (f^period(z) - z) / (f^deflate(z) - z) when deflate > 0,
//   F2 = (f^period)'(z) - target(t).
// Deflation removes the parent cycle so the solver cannot slide back onto it.
struct CycleSystem {
  unsigned period;
  unsigned deflate;
  std::function<ComplexParam(double)> target;
};

struct Point {
  ComplexParam z;
  ComplexParam c;
};

std::optional<Point> newton_solve(const CycleSystem& sys, double t, Point x, unsigned max_iter, double tol) {
  const ComplexParam target = sys.target(t);
  for (unsigned iter = 0; iter < max_iter; ++iter) {
    ComplexParam r1;
    ComplexParam j11;
    ComplexParam j12;
    ComplexParam multiplier;
    ComplexParam j21;
    ComplexParam j22;
    if (sys.deflate > 0) {
      const OrbitJetPair pair = orbit_jet_pair(x.z, x.c, sys.deflate, sys.period);
      const ComplexParam num = pair.outer.value - x.z;
      const ComplexParam den = pair.inner.value - x.z;
      if (std::abs(den) == 0.0) return std::nullopt;
      r1 = num / den;
      j11 = ((pair.outer.dz - 1.0) * den - num * (pair.inner.dz - 1.0)) / (den * den);
      j12 = (pair.outer.dc * den - num * pair.inner.dc) / (den * den);
      multiplier = pair.outer.dz;
      j21 = pair.outer.multiplier_dz;
      j22 = pair.outer.multiplier_dc;
    } else {
      const OrbitJet jet = orbit_jet(x.z, x.c, sys.period);
      r1 = jet.value - x.z;
      j11 = jet.dz - 1.0;
      j12 = jet.dc;
      multiplier = jet.dz;
      j21 = jet.multiplier_dz;
      j22 = jet.multiplier_dc;
    }
    const ComplexParam r2 = multiplier - target;
    const ComplexParam det = j11 * j22 - j12 * j21;
    if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) return std::nullopt;
    const ComplexParam dz = (r1 * j22 - j12 * r2) / det;
    const ComplexParam dc = (j11 * r2 - j21 * r1) / det;
    x.z -= dz;
    x.c -= dc;
    if (!std::isfinite(std::abs(x.z)) || !std::isfinite(std::abs(x.c))) return std::nullopt;
    if (std::abs(dz) + std::abs(dc) <= tol) return x;
  }
  return std::nullopt;
}

// Tracks a solution of `sys` from t0 to t1 in `steps` nominal increments,
// halving the increment when the corrector fails and using a secant predictor.
Point track(const CycleSystem& sys, Point x, double t0, double t1, const PathFollowConfig& cfg,
            std::size_t depth) {
  constexpr unsigned kCorrectorIter = 10;
  constexpr int kMaxHalvings = 24;
  const double nominal = (t1 - t0) / cfg.multiplier_steps;
  double h = nominal;
  double t = t0;
  std::optional<Point> previous;
  double previous_h = 0.0;
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  int halvings = 0;
  const unsigned corrector_iter = std::min(kCorrectorIter, cfg.newton_max_iter);
  while (t1 - t > 1e-15 * std::abs(t1 - t0)) {
    if (++attempts > 32 * static_cast<std::size_t>(cfg.multiplier_steps)) {
      throw ConvergenceError("multiplier continuation needed too many steps", depth, accepted);
    }
    const double step = std::min(h, t1 - t);
    Point guess = x;
    if (previous) {
      const double ratio = step / previous_h;
      guess.z += (x.z - previous->z) * ratio;
      guess.c += (x.c - previous->c) * ratio;
    }
    const bool last = step >= t1 - t;
    const auto solved = newton_solve(sys, t + step, guess, last ? cfg.newton_max_iter : corrector_iter, cfg.newton_tol);
    if (!solved) {
      h *= 0.5;
      if (++halvings > kMaxHalvings) {
        throw ConvergenceError("multiplier continuation stalled", depth, accepted);
      }
      continue;
    }
    previous = x;
    previous_h = step;
    x = *solved;
    t = last ? t1 : t + step;
    ++accepted;
    halvings = std::max(0, halvings - 1);
    h = std::min(nominal, 2.0 * h);
  }
  return x;
}

ComplexParam rotation_multiplier(const RotationNumber& r) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r.numerator()) /
                             static_cast<double>(r.denominator()));
}

CycleSystem parent_system(unsigned period, const RotationNumber& r) {
  const ComplexParam direction = rotation_multiplier(r);
  return {period, 0, [direction](double t) { return t * direction; }};
}

void check_parent(const Center& parent, const PathFollowConfig& cfg) {
  const double residual = std::abs(critical_poly(parent.period, parent.c).value);
  if (!(residual <= std::max(cfg.newton_tol, 1e3 * std::numeric_limits<double>::epsilon()))) {
    throw DomainError("parent is not a center: |Q_" + std::to_string(parent.period) +
                      "(c)| = " + std::to_string(residual));
  }
}

SatelliteRoot follow_to_root_at(const Center& parent, const RotationNumber& r, const PathFollowConfig& cfg,
                                std::size_t depth) {
  check_parent(parent, cfg);
  // At a center the critical point 0 lies on the cycle and the multiplier is 0.
  const Point end = track(parent_system(parent.period, r), {0.0, parent.c}, 0.0, 1.0, cfg, depth);
  return {end.c, end.z};
}

// Newton on Q_n(c) = 0 in c alone, until the correction stops shrinking.
ComplexParam polish_center(unsigned n, ComplexParam c, const PathFollowConfig& cfg) {
  double last = std::numeric_limits<double>::infinity();
  for (unsigned iter = 0; iter < cfg.newton_max_iter; ++iter) {
    const CriticalValue q = critical_poly(n, c);
    if (q.value == 0.0) break;
    const ComplexParam delta = q.value / q.derivative;
    const double size = std::abs(delta);
    if (size >= last) break;
    c -= delta;
    last = size;
    if (size <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(c))) break;
  }
  return c;
}

// The attracting cycle at c found by following the critical orbit.
ComplexParam attracting_cycle_seed(ComplexParam c, unsigned period, std::size_t depth) {
  constexpr unsigned kMaxRounds = 1'000'000;
  ComplexParam z = 0.0;
  for (unsigned round = 0; round < kMaxRounds; ++round) {
    ComplexParam w = z;
    for (unsigned j = 0; j < period; ++j) w = w * w + c;
    if (!std::isfinite(std::abs(w))) break;
    const double moved = std::abs(w - z);
    z = w;
    if (moved < 1e-9) return z;
  }
  throw ConvergenceError("critical orbit did not settle on an attracting cycle", depth, 0);
}

}  // namespace

CyclePoint cycle_point_and_multiplier(ComplexParam c, unsigned period, ComplexParam seed,
                                      const PathFollowConfig& cfg) {
  if (period == 0) throw DomainError("cycle_point_and_multiplier: period must be positive");
  return solve_cycle(c, period, seed, cfg, 0);
}

SatelliteRoot follow_to_root(const Center& parent, const RotationNumber& r, const PathFollowConfig& cfg) {
  cfg.validate();
  return follow_to_root_at(parent, r, cfg, 0);
}

Center locate_center(const SatelliteAddress& address, const PathFollowConfig& cfg) {
  cfg.validate();
  Center current = main_cardioid_center();
  for (std::size_t depth = 0; depth < address.rotations.size(); ++depth) {
    const RotationNumber& r = address.rotations[depth];
    const unsigned parent_period = current.period;
    const unsigned child_period = parent_period * static_cast<unsigned>(r.denominator());

    const SatelliteRoot root = follow_to_root_at(current, r, cfg, depth);

    // Push the parent multiplier just outside the unit circle; to first order
    // the child multiplier there is 1 - q^2 entry_offset, well inside the child.
    const CycleSystem parent = parent_system(parent_period, r);
    const Point entry = track(parent, {root.z, root.c}, 1.0, 1.0 + cfg.entry_offset, cfg, depth);

    const ComplexParam orbit_point = attracting_cycle_seed(entry.c, child_period, depth);
    const CyclePoint child = solve_cycle(entry.c, child_period, orbit_point, cfg, depth);
    const ComplexParam parent_image = orbit_jet(child.z, entry.c, parent_period).value;
    if (std::abs(parent_image - child.z) <= cfg.match_tol || !(std::abs(child.multiplier) < 1.0)) {
      throw ConvergenceError("entry point did not land in the satellite component", depth, 0);
    }

    const ComplexParam start_multiplier = child.multiplier;
    const CycleSystem inward{child_period, parent_period,
                             [start_multiplier](double t) { return (1.0 - t) * start_multiplier; }};
    const Point end = track(inward, {child.z, entry.c}, 0.0, 1.0, cfg, depth);

    Center next;
    next.c = polish_center(child_period, end.c, cfg);
    next.period = child_period;
    next.address = address.prefix(depth + 1);
    next.residual = std::abs(critical_poly(child_period, next.c).value);
    if (!(next.residual <= cfg.newton_tol)) {
      throw ConvergenceError("center residual " + std::to_string(next.residual) + " above tolerance", depth,
                             cfg.multiplier_steps);
    }
    const unsigned found = primitive_period(next.c, child_period, cfg.match_tol);
    if (found != child_period) {
      throw PeriodMismatch("located " + to_string(*next.address) + " at a center of period " +
                               std::to_string(found) + " instead of " + std::to_string(child_period),
                           child_period, found);
    }
    current = next;
  }
  return current;
}

}  // namespace molecule
