#pragma once

#include <complex>
#include <cstdint>

#include "molecule/addresses.hpp"

namespace molecule {

/// A point of the parameter plane (or the dynamic plane) of z -> z^2 + c.
using ComplexParam = std::complex<double>;

/// Q_n(c) = f_c^n(0) and its derivative in c.
struct CriticalValue {
  ComplexParam value;
  ComplexParam derivative;
};

/// |Q_j| above this bound aborts critical_poly with OverflowError.
inline constexpr double kOrbitOverflow = 1e150;

/// Q_1 = c, Q_{j+1} = Q_j^2 + c, with dQ/dc carried by the chain rule.
/// Throws DomainError for n = 0 and OverflowError if the orbit blows up.
CriticalValue critical_poly(unsigned n, ComplexParam c);

/// Q_n(c) / Q_n'(c) without overflow: once |Q_j| is huge the ratio halves at
/// every further step, so the tail is applied in closed form.
ComplexParam critical_newton_ratio(unsigned n, ComplexParam c);

/// The parameter on the main cardioid where the fixed point has multiplier
/// exp(2 pi i p/q): c = lambda/2 - lambda^2/4.
ComplexParam cardioid_boundary_point(const RotationNumber& r);

/// f_c^period evaluated at z together with the derivatives needed for
/// Newton on cycles: F = f^period(z), dF/dz (the multiplier when z is
/// periodic), dF/dc, and the derivatives of the multiplier in z and c.
struct OrbitJet {
  ComplexParam value;
  ComplexParam dz;
  ComplexParam dc;
  ComplexParam multiplier_dz;
  ComplexParam multiplier_dc;
};

OrbitJet orbit_jet(ComplexParam z, ComplexParam c, unsigned period);

/// Jets after `inner` and `outer` iterations of the same orbit (inner <= outer).
struct OrbitJetPair {
  OrbitJet inner;
  OrbitJet outer;
};

OrbitJetPair orbit_jet_pair(ComplexParam z, ComplexParam c, unsigned inner, unsigned outer);

/// Smallest divisor d of n with |Q_d(c)| <= tol; n when no divisor qualifies.
unsigned primitive_period(ComplexParam c, unsigned n, double tol);

}  // namespace molecule
