#pragma once

#include "noncentral/errors.hpp"

namespace noncentral {

/// Parameters of the Coulomb plus ring-shaped potential family
///
///   V(r, theta) = -Z e^2 / r + B hbar^2 / (2 m r^2 sin^2 theta)
///                 + C hbar^2 cos(theta) / (2 m r^2 sin^2 theta)
///
/// Atomic units (hbar = m = e^2 = 1) are the default; the constants are
/// carried explicitly so other unit systems remain usable.
struct PotentialParams {
  double Z = 1.0;  ///< effective nuclear charge, > 0
  double B = 0.0;  ///< ring-shaped strength (dimensionless)
  double C = 0.0;  ///< cos(theta)-coupling strength (dimensionless)
  double m = 1.0;
  double hbar = 1.0;
  double e2 = 1.0;

  // Derived couplings a, b, c. Recomputed on demand, never stored.
  double coulomb_strength() const { return Z * e2; }
  double ring_strength() const { return B * hbar * hbar / (2.0 * m); }
  double polar_strength() const { return C * hbar * hbar / (2.0 * m); }

  /// Throws DomainError unless Z > 0, m > 0, hbar > 0, e2 > 0.
  void validate() const;
};

struct SphericalPoint {
  double r;            ///< radius, > 0
  double theta;        ///< polar angle in (0, pi)
  double phi = 0.0;    ///< azimuth
};

struct ParabolicPoint {
  double xi;           ///< >= 0
  double eta;          ///< >= 0, xi + eta > 0
  double phi = 0.0;
};

/// Coordinates of the lifted description: u = 2 sqrt(xi), v = 2 sqrt(eta).
/// At the coordinate level phi1 = phi2 = phi; the two angles become
/// independent only in the four-dimensional oscillator picture.
struct UVPoint {
  double u;
  double v;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

inline constexpr double kDefaultAxisEpsilon = 1e-12;

/// V(r, theta). Throws DomainError for r <= 0 and AxisSingularityError when
/// |sin theta| <= axis_epsilon (the potential genuinely diverges on the axis).
double eval_potential_spherical(const PotentialParams& params, const SphericalPoint& p,
                                double axis_epsilon = kDefaultAxisEpsilon);

/// V(xi, eta) = -a/(xi+eta) + b/(4 xi eta) + c (eta-xi)/(4 eta xi (eta+xi)).
/// Throws DomainError on the ring singularity xi = 0 or eta = 0.
double eval_potential_parabolic(const PotentialParams& params, const ParabolicPoint& p);

/// xi = (r - z)/2, eta = (r + z)/2 with z = r cos(theta); xi + eta = r.
ParabolicPoint spherical_to_parabolic(const SphericalPoint& p);

/// Inverse map: r = xi + eta, cos(theta) = (eta - xi)/(xi + eta).
SphericalPoint parabolic_to_spherical(const ParabolicPoint& p);

/// u = 2 sqrt(xi), v = 2 sqrt(eta) (the xi = u^2/4 convention).
UVPoint parabolic_to_uv(const ParabolicPoint& p);

ParabolicPoint uv_to_parabolic(const UVPoint& p);

}  // namespace noncentral
