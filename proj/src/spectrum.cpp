#include "noncentral/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace noncentral {

namespace {

// (sqrt(nu^2+B+C) + sqrt(nu^2+B-C))/2, the lambda/(2 hbar) quantum defect.
double half_lambda_over_hbar(const PotentialParams& params, int nu) {
  const double nu2 = static_cast<double>(nu) * nu;
  const double plus = nu2 + params.B + params.C;
  const double minus = nu2 + params.B - params.C;
  if (plus < 0.0 || minus < 0.0)
    throw InvalidChannelError("channel nu=" + std::to_string(nu) +
                              " invalid: nu^2+B+C=" + std::to_string(plus) +
                              ", nu^2+B-C=" + std::to_string(minus) +
                              " (lambda would be complex)");
  return 0.5 * (std::sqrt(plus) + std::sqrt(minus));
}

Level make_level(const PotentialParams& params, const QuantumNumbers& qn, int degeneracy) {
  params.validate();
  qn.validate();
  const double s = half_lambda_over_hbar(params, qn.nu);
  const double a = params.coulomb_strength();
  const double n_eff = qn.n_sum() + 1 + s;
  const double lambda = params.hbar * 2.0 * s;
  Level lv;
  lv.qn = qn;
  lv.lambda = lambda;
  lv.n_eff = n_eff;
  lv.energy = -(params.m * a * a) / (2.0 * params.hbar * params.hbar * n_eff * n_eff);
  lv.omega = a / (2.0 * (qn.n_sum() + 1) * params.hbar + lambda);
  lv.degeneracy = degeneracy;
  return lv;
}

}  // namespace

void QuantumNumbers::validate() const {
  if (n2 < 0 || n2_tilde < 0 || nu < 0)
    throw DomainError("QuantumNumbers: n2, n2_tilde, nu must be non-negative");
}

bool channel_valid(const PotentialParams& params, int nu) noexcept {
  if (nu < 0) return false;
  const double nu2 = static_cast<double>(nu) * nu;
  return nu2 + params.B + params.C >= 0.0 && nu2 + params.B - params.C >= 0.0;
}

double lambda_value(const PotentialParams& params, int nu) {
  params.validate();
  if (nu < 0) throw DomainError("lambda_value: nu must be non-negative");
  return params.hbar * 2.0 * half_lambda_over_hbar(params, nu);
}

Level energy_level(const PotentialParams& params, const QuantumNumbers& qn) {
  return make_level(params, qn, qn.n_sum() + 1);
}

double quantization_omega(const PotentialParams& params, const QuantumNumbers& qn) {
  params.validate();
  qn.validate();
  const double lambda = lambda_value(params, qn.nu);
  return params.coulomb_strength() / (2.0 * (qn.n_sum() + 1) * params.hbar + lambda);
}

std::vector<Level> enumerate_levels(const PotentialParams& params, int n_sum_max, int nu_max) {
  params.validate();
  if (n_sum_max < 0 || nu_max < 0)
    throw DomainError("enumerate_levels: n_sum_max and nu_max must be non-negative");
  std::vector<Level> out;
  for (int nu = 0; nu <= nu_max; ++nu) {
    if (!channel_valid(params, nu)) continue;
    for (int n_sum = 0; n_sum <= n_sum_max; ++n_sum) {
      out.push_back(make_level(params, QuantumNumbers{n_sum, 0, nu}, n_sum + 1));
    }
  }
  std::sort(out.begin(), out.end(), [](const Level& x, const Level& y) {
    return std::make_tuple(x.energy, x.qn.nu, x.qn.n_sum()) <
           std::make_tuple(y.energy, y.qn.nu, y.qn.n_sum());
  });
  return out;
}

void HartmannParams::validate() const {
  if (!(gamma > 0.0) || !(sigma > 0.0))
    throw DomainError("HartmannParams: gamma and sigma must be > 0");
}

PotentialParams HartmannParams::as_potential() const {
  validate();
  PotentialParams p;
  p.Z = gamma * sigma * sigma;
  p.B = gamma * gamma * sigma * sigma;
  p.C = 0.0;
  return p;
}

Level hartmann_energy(const HartmannParams& h, const QuantumNumbers& qn) {
  return energy_level(h.as_potential(), qn);
}

void ABParams::validate() const {
  if (!(Z > 0.0)) throw DomainError("ABParams: Z must be > 0");
  if (!std::isfinite(alpha)) throw DomainError("ABParams: alpha must be finite");
}

ABLevel ab_energy(const ABParams& ab, const QuantumNumbers& qn) {
  ab.validate();
  qn.validate();
  PotentialParams p;  // atomic units
  p.Z = ab.Z;
  const double m_abs = std::abs(static_cast<double>(qn.nu) - ab.alpha);
  const double n_eff = qn.n_sum() + 1 + m_abs;
  const double a = p.coulomb_strength();
  Level lv;
  lv.qn = qn;
  lv.lambda = 2.0 * p.hbar * m_abs;
  lv.n_eff = n_eff;
  lv.energy = -(p.m * a * a) / (2.0 * p.hbar * p.hbar * n_eff * n_eff);
  lv.omega = a / (2.0 * p.hbar * n_eff);
  lv.degeneracy = qn.n_sum() + 1;
  const bool coulombian = std::abs(m_abs - std::round(m_abs)) <= 1e-12;
  return ABLevel{lv, m_abs, coulombian};
}

}  // namespace noncentral
