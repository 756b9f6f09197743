#include "gibbs_partition/exact_analysis.hpp"

#include <cmath>

namespace gibbs {

double interval_relvar_exact(const EnergySpectrum& spectrum, double a, double b) {
  return std::expm1(2.0 * midpoint_gap(spectrum, a, b));
}

double midpoint_gap(const EnergySpectrum& spectrum, double a, double b) {
  return 0.5 * (log_partition(spectrum, a) + log_partition(spectrum, b)) - log_partition(spectrum, 0.5 * (a + b));
}

FactorMeans paired_factor_means(const EnergySpectrum& spectrum, double a, double b) {
  const double zm = log_partition(spectrum, 0.5 * (a + b));
  return {std::exp(zm - log_partition(spectrum, a)), std::exp(zm - log_partition(spectrum, b))};
}

double paired_relvar_exact(const EnergySpectrum& spectrum, const CoolingSchedule& schedule) {
  double total = 0.0;
  const auto& betas = schedule.betas();
  for (std::size_t i = 0; i < schedule.intervals(); ++i) total += 2.0 * midpoint_gap(spectrum, betas[i], betas[i + 1]);
  return std::expm1(total);
}

std::vector<double> z_gaps(const EnergySpectrum& spectrum, const CoolingSchedule& schedule) {
  const auto& betas = schedule.betas();
  std::vector<double> gaps;
  gaps.reserve(schedule.intervals());
  double prev = log_partition(spectrum, betas[0]);
  for (std::size_t i = 1; i < betas.size(); ++i) {
    const double cur = log_partition(spectrum, betas[i]);
    gaps.push_back(std::abs(cur - prev));
    prev = cur;
  }
  return gaps;
}

double single_shot_relvar_exact(const EnergySpectrum& spectrum, double beta) {
  return product_stage_relvar_exact(spectrum, 0.0, beta);
}

double product_stage_relvar_exact(const EnergySpectrum& spectrum, double a, double b) {
  return std::expm1(log_partition(spectrum, 2.0 * b - a) + log_partition(spectrum, a) -
                    2.0 * log_partition(spectrum, b));
}

double z_slope(const EnergySpectrum& spectrum, double beta) { return -mean_energy(spectrum, beta); }

}  // namespace gibbs
