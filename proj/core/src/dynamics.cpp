#include "molecule/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "molecule/arithmetic.hpp"
#include "molecule/errors.hpp"

namespace molecule {

CriticalValue critical_poly(unsigned n, ComplexParam c) {
  if (n == 0) throw DomainError("critical_poly: n must be positive");
  ComplexParam q = c;
  ComplexParam dq = 1.0;
  for (unsigned j = 1; j < n; ++j) {
    dq = 2.0 * q * dq + 1.0;
    q = q * q + c;
    if (!(std::abs(q) <= kOrbitOverflow) || !(std::abs(dq) <= kOrbitOverflow)) {
      throw OverflowError("critical orbit overflow at step " + std::to_string(j + 1) + " of " +
                          std::to_string(n));
    }
  }
  return {q, dq};
}

ComplexParam critical_newton_ratio(unsigned n, ComplexParam c) {
  if (n == 0) throw DomainError("critical_newton_ratio: n must be positive");
  constexpr double kTail = 1e100;
  ComplexParam q = c;
  ComplexParam dq = 1.0;
  for (unsigned j = 1; j < n; ++j) {
    if (std::abs(q) > kTail) {
      // Q_{j+1} / Q'_{j+1} = (Q^2 + c) / (2 Q Q' + 1) = (Q / Q') / 2 to working precision.
      return std::ldexp(1.0, -static_cast<int>(n - j)) * (q / dq);
    }
    dq = 2.0 * q * dq + 1.0;
    q = q * q + c;
  }
  return q / dq;
}

ComplexParam cardioid_boundary_point(const RotationNumber& r) {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  const ComplexParam lambda = std::polar(1.0, angle);
  return lambda / 2.0 - lambda * lambda / 4.0;
}

namespace {

struct JetState {
  ComplexParam z;
  ComplexParam a{1.0};  // d z_j / d z
  ComplexParam b{0.0};  // d z_j / d c
  ComplexParam da{0.0};  // d a_j / d z
  ComplexParam db{0.0};  // d a_j / d c

  void step(ComplexParam c) {
    const ComplexParam two_z = 2.0 * z;
    da = 2.0 * a * a + two_z * da;
    db = 2.0 * b * a + two_z * db;
    a = two_z * a;
    b = two_z * b + 1.0;
    z = z * z + c;
  }

  OrbitJet jet() const { return {z, a, b, da, db}; }
};

}  // namespace

OrbitJet orbit_jet(ComplexParam z, ComplexParam c, unsigned period) {
  JetState s{z};
  for (unsigned j = 0; j < period; ++j) s.step(c);
  return s.jet();
}

OrbitJetPair orbit_jet_pair(ComplexParam z, ComplexParam c, unsigned inner, unsigned outer) {
  JetState s{z};
  OrbitJetPair out{s.jet(), s.jet()};
  for (unsigned j = 0; j < outer; ++j) {
    if (j == inner) out.inner = s.jet();
    s.step(c);
  }
  if (inner >= outer) out.inner = s.jet();
  out.outer = s.jet();
  return out;
}

unsigned primitive_period(ComplexParam c, unsigned n, double tol) {
  if (n == 0) throw DomainError("primitive_period: n must be positive");
  for (std::uint64_t d : divisors(n)) {
    ComplexParam value = c;
    bool blown = false;
    for (std::uint64_t j = 1; j < d; ++j) {
      value = value * value + c;
      if (std::abs(value) > kOrbitOverflow) {
        blown = true;
        break;
      }
    }
    if (!blown && std::abs(value) <= tol) return static_cast<unsigned>(d);
  }
  return n;
}

}  // namespace molecule
