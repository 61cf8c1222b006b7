#include "noncentral/potential.hpp"

#include <cmath>
#include <string>

namespace noncentral {

void PotentialParams::validate() const {
  if (!(Z > 0.0))
    throw DomainError("PotentialParams: Z must be > 0 (attractive Coulomb term required), got Z=" +
                      std::to_string(Z));
  if (!(m > 0.0) || !(hbar > 0.0) || !(e2 > 0.0))
    throw DomainError("PotentialParams: m, hbar, e2 must all be > 0");
  if (!std::isfinite(B) || !std::isfinite(C))
    throw DomainError("PotentialParams: B and C must be finite");
}

double eval_potential_spherical(const PotentialParams& params, const SphericalPoint& p,
                                double axis_epsilon) {
  params.validate();
  if (!(p.r > 0.0)) throw DomainError("eval_potential_spherical: r must be > 0");
  const double s = std::sin(p.theta);
  if (!(s > axis_epsilon))
    throw AxisSingularityError("eval_potential_spherical: sin(theta) <= " +
                               std::to_string(axis_epsilon) + "; potential diverges on the axis");
  const double a = params.coulomb_strength();
  const double b = params.ring_strength();
  const double c = params.polar_strength();
  const double r2s2 = p.r * p.r * s * s;
  return -a / p.r + b / r2s2 + c * std::cos(p.theta) / r2s2;
}

double eval_potential_parabolic(const PotentialParams& params, const ParabolicPoint& p) {
  params.validate();
  if (!(p.xi > 0.0) || !(p.eta > 0.0))
    throw DomainError("eval_potential_parabolic: xi and eta must be > 0 (ring singularity)");
  const double a = params.coulomb_strength();
  const double b = params.ring_strength();
  const double c = params.polar_strength();
  return -a / (p.xi + p.eta) + b / (4.0 * p.xi * p.eta) +
         c * (p.eta - p.xi) / (4.0 * p.eta * p.xi * (p.eta + p.xi));
}

ParabolicPoint spherical_to_parabolic(const SphericalPoint& p) {
  if (!(p.r > 0.0)) throw DomainError("spherical_to_parabolic: r must be > 0");
  // z = r cos(theta); sqrt(rho^2 + z^2) = r exactly, so
  // xi = r (1 - cos theta)/2 and eta = r (1 + cos theta)/2.
  const double ct = std::cos(p.theta);
  return ParabolicPoint{0.5 * p.r * (1.0 - ct), 0.5 * p.r * (1.0 + ct), p.phi};
}

SphericalPoint parabolic_to_spherical(const ParabolicPoint& p) {
  if (p.xi < 0.0 || p.eta < 0.0 || !(p.xi + p.eta > 0.0))
    throw DomainError("parabolic_to_spherical: need xi, eta >= 0 and xi + eta > 0");
  const double r = p.xi + p.eta;
  double ct = (p.eta - p.xi) / r;
  ct = std::fmin(1.0, std::fmax(-1.0, ct));
  return SphericalPoint{r, std::acos(ct), p.phi};
}

UVPoint parabolic_to_uv(const ParabolicPoint& p) {
  if (p.xi < 0.0 || p.eta < 0.0)
    throw DomainError("parabolic_to_uv: xi and eta must be >= 0");
  return UVPoint{2.0 * std::sqrt(p.xi), 2.0 * std::sqrt(p.eta), p.phi, p.phi};
}

ParabolicPoint uv_to_parabolic(const UVPoint& p) {
  if (p.u < 0.0 || p.v < 0.0) throw DomainError("uv_to_parabolic: u and v must be >= 0");
  return ParabolicPoint{0.25 * p.u * p.u, 0.25 * p.v * p.v, p.phi1};
}

}  // namespace noncentral
