#include "gibbs_partition/bounds.hpp"

#include <cmath>

namespace gibbs {

double integer_regime_draw_bound(double q, int n, double epsilon) {
  const double spread = 2.0 + std::log(2.0 * n);
  return (q + 1.0) *
         (5.0 + spread * (14.9 * std::log(100.0 * spread * (q + 1.0)) + 48.2 / (epsilon * epsilon)));
}

double shifted_regime_draw_bound(double q, int n, double beta, double epsilon) {
  const double span = q + 2.0 * n * beta + 1.0;
  return span * (5.0 + 10.7 * std::log(69.4 * span) + 16.7 / (epsilon * epsilon));
}

double svv_draw_bound(double q, int n, double epsilon) {
  return 1e8 * q * std::pow(std::log(static_cast<double>(n)) + std::log(q), 5) / (epsilon * epsilon);
}

double paired_relvar_ceiling(double eta, double z_slope_at_beta) {
  return 2.0 * std::exp(eta) * std::pow(2.0 * z_slope_at_beta, eta / 2.0);
}

}  // namespace gibbs
