#pragma once

#include <vector>

#include "noncentral/potential.hpp"

namespace noncentral {

/// Bound-state labels (n2, n2~, nu); all non-negative integers.
struct QuantumNumbers {
  int n2 = 0;
  int n2_tilde = 0;
  int nu = 0;

  int n_sum() const { return n2 + n2_tilde; }
  void validate() const;
};

/// One bound level. Energies are in hartree when params are in atomic units.
struct Level {
  double energy;      ///< < 0
  QuantumNumbers qn;
  double lambda;      ///< hbar [sqrt(nu^2+B+C) + sqrt(nu^2+B-C)], >= 0
  double n_eff;       ///< n2 + n2~ + 1 + lambda/(2 hbar)
  double omega;       ///< root of 2(n2+n2~+1) hbar w + w lambda - a = 0
  int degeneracy;     ///< number of (n2, n2~) splittings at fixed n2+n2~
};

/// True iff nu^2 + B - C >= 0 and nu^2 + B + C >= 0.
bool channel_valid(const PotentialParams& params, int nu) noexcept;

/// lambda = hbar [sqrt(nu^2+B+C) + sqrt(nu^2+B-C)].
/// Throws InvalidChannelError when either radicand is negative.
double lambda_value(const PotentialParams& params, int nu);

/// E = -m Z^2 e^4 / (2 hbar^2 n_eff^2) with
/// n_eff = n2 + n2~ + 1 + (sqrt(nu^2+B+C) + sqrt(nu^2+B-C))/2.
Level energy_level(const PotentialParams& params, const QuantumNumbers& qn);

/// omega = a / (2 (n2+n2~+1) hbar + lambda); satisfies omega^2 = -E/(2m).
double quantization_omega(const PotentialParams& params, const QuantumNumbers& qn);

/// All levels with n2+n2~ <= n_sum_max and nu <= nu_max, one entry per
/// (n_sum, nu) pair with degeneracy n_sum+1, sorted by ascending energy with
/// ties broken by (nu, n_sum). Invalid channels are skipped; the result is
/// empty when every channel is invalid.
std::vector<Level> enumerate_levels(const PotentialParams& params, int n_sum_max, int nu_max);

/// Hartmann ring-shaped potential, C = 0, B = gamma^2 sigma^2, Z = gamma sigma^2.
struct HartmannParams {
  double gamma;  ///< > 0
  double sigma;  ///< > 0

  PotentialParams as_potential() const;
  void validate() const;
};

/// Substitution identity of the general formula, not an approximation.
Level hartmann_energy(const HartmannParams& h, const QuantumNumbers& qn);

/// Coulomb plus Aharonov-Bohm flux: alpha = Z e F / (2 pi hbar c).
struct ABParams {
  double Z;      ///< > 0
  double alpha;  ///< flux ratio

  void validate() const;
};

struct ABLevel {
  Level level;
  double m_abs;        ///< |M| = |nu - alpha|
  bool is_coulombian;  ///< |M| within 1e-12 of an integer
};

/// E = -m Z^2 e^4 / (2 hbar^2 [n2+n2~+1+|M|]^2), |M| = |nu - alpha|.
ABLevel ab_energy(const ABParams& ab, const QuantumNumbers& qn);

}  // namespace noncentral
