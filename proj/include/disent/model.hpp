#pragma once

#include <complex>

namespace disent {

// All quantities share one caller-chosen consistent unit system; the library
// performs no unit conversion. The CLI and the test suite default to natural
// units hbar = m = k = 1.
//
// The core works in extended precision. The determinant invariants extracted
// downstream are exactly conserved under free evolution, but recovering them
// from evolved moments costs ~ t^2 * <p^2>/<x^2> in units of the rounding
// error; 80-bit arithmetic keeps that below 1e-12 out to t ~ 1e3 where
// doubles would drift above 1e-10.
using Real = long double;

/// Shape parameters of the symmetric two-particle Gaussian
///   psi(x1,x2) ~ exp{ -(a11 x1^2 + 2 a12 x1 x2 + a11 x2^2)/4
///                     + i m (v1 x1 + v2 x2)/hbar }.
/// Square integrability requires a11 > 0 and a11^2 - a12^2 > 0.
struct GaussianParams {
    Real a11;  ///< self coefficient (inverse length squared)
    Real a12;  ///< cross coefficient (inverse length squared)
};

/// Checks positivity and square-integrability. Throws std::domain_error
/// naming the violated condition, std::invalid_argument on non-finite input.
GaussianParams validate_params(Real a11, Real a12);

struct PhysicalConstants {
    Real mass = 1;
    Real hbar = 1;
    Real boltzmann = 1;
};

/// Deterministic drift velocities of the two particles.
struct VelocityPair {
    Real v1 = 0;
    Real v2 = 0;
};

/// The ten second moments of (x1, p1, x2, p2), reduced to six independent
/// entries by exchange symmetry; the type cannot represent an asymmetric
/// state. Moments are raw (about zero); the thermal ensemble has zero mean,
/// so raw and central moments coincide after averaging.
struct MomentSet {
    Real xx;         ///< <x1^2> = <x2^2>
    Real x1x2;       ///< <x1 x2>
    Real pp;         ///< <p1^2> = <p2^2>
    Real p1p2;       ///< <p1 p2>
    Real xp_sym;     ///< <x1 p1 + p1 x1>/2 = <x2 p2 + p2 x2>/2
    Real x_cross_p;  ///< <x2 p1> = <x1 p2>
};

/// Initial-state amplitude, normalization prefactor and drift phase included.
std::complex<Real> wavefunction_amplitude(const GaussianParams& params,
                                          const VelocityPair& v,
                                          const PhysicalConstants& consts,
                                          Real x1, Real x2);

/// Raw second moments of the initial state with deterministic drifts.
/// The symmetric MomentSet can only hold them when v1^2 == v2^2; anything
/// else throws (thermal averaging is the supported route to asymmetry).
/// Drift enters as m^2 v1^2 in pp and m^2 v1 v2 in p1p2.
MomentSet initial_moments(const GaussianParams& params, const VelocityPair& v,
                          const PhysicalConstants& consts);

/// Moments averaged over a thermal drift ensemble: v1, v2 independent with
/// <v^2> = kT/m, so pp = m k T + hbar^2 a11/4 and the cross drift term
/// averages away. Throws on negative temperature.
MomentSet thermal_moments(const GaussianParams& params, Real temperature,
                          const PhysicalConstants& consts);

/// Free-flight propagation x(t) = x(0) + p(0) t/m, p(t) = p(0), applied to
/// all ten moments. Exact for any real t, negative included.
MomentSet evolve_moments(const MomentSet& m0, Real t,
                         const PhysicalConstants& consts);

}  // namespace disent
