#pragma once

#include <vector>

#include "gibbs_partition/model.hpp"
#include "gibbs_partition/schedule.hpp"

namespace gibbs {

// Closed-form quantities of the estimators, evaluated by enumeration. All
// functions take a precomputed spectrum so audits over many schedules stay
// cheap. Intended for validation on small models.

/// Z(b) Z(a) / Z(m)^2 - 1 with m the midpoint: relvar of W_i and of V_i.
double interval_relvar_exact(const EnergySpectrum& spectrum, double a, double b);

/// Midpoint gap in z-space: (z(a) + z(b)) / 2 - z((a + b) / 2). Nonnegative
/// because z is convex.
double midpoint_gap(const EnergySpectrum& spectrum, double a, double b);

/// E[W_i] = Z(m_i)/Z(beta_i) and E[V_i] = Z(m_i)/Z(beta_{i+1}).
struct FactorMeans {
  double w = 1.0;
  double v = 1.0;
};
FactorMeans paired_factor_means(const EnergySpectrum& spectrum, double a, double b);

/// relvar(W) = relvar(V) = exp(sum_i 2 delta_i) - 1 over the schedule.
double paired_relvar_exact(const EnergySpectrum& spectrum, const CoolingSchedule& schedule);

/// |z(beta_{i+1}) - z(beta_i)| for every interval.
std::vector<double> z_gaps(const EnergySpectrum& spectrum, const CoolingSchedule& schedule);

/// Z(2 beta) Z(0) / Z(beta)^2 - 1: relvar of exp(-beta H(X)), X ~ pi_0.
double single_shot_relvar_exact(const EnergySpectrum& spectrum, double beta);

/// Relvar of exp(-(b - a) H(X)) with X ~ pi_a: Z(2b - a) Z(a) / Z(b)^2 - 1.
double product_stage_relvar_exact(const EnergySpectrum& spectrum, double a, double b);

/// z'(beta) = E[-H(X)] for X ~ pi_beta.
double z_slope(const EnergySpectrum& spectrum, double beta);

}  // namespace gibbs
