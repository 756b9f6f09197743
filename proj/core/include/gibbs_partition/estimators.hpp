#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gibbs_partition/sampler.hpp"
#include "gibbs_partition/schedule.hpp"

namespace gibbs {

/// One replicate of the paired product estimator, kept in log space.
struct PairSample {
  double log_w = 0.0;
  double log_v = 0.0;
  double w() const;
  double v() const;
};

/// Draws X_i ~ pi_{beta_i} for every schedule point (l + 1 draws) and forms
///   ln W = -sum_i delta_i H(X_i),   ln V = sum_i delta_i H(X_{i+1}),
/// with delta_i the parameter half length of interval i.
PairSample paired_replicate(const CoolingSchedule& schedule, const SamplerOracle& oracle, Engine& rng);

/// ceil(2 e sqrt(10) ((1 + eps)^(1/2) - 1)^(-2)).
std::uint64_t paired_replicate_count(double epsilon);

/// ln of the sample mean of exp(values), with a max shift and pairwise
/// summation so the result does not depend on evaluation order.
double log_mean_exp(std::span<const double> values);

/// Expert overrides of the automatically selected parameters. Overriding d or
/// eta without k recomputes k = (4/3) d / eta.
struct PairedOverrides {
  std::optional<int> d;
  std::optional<double> k;
  std::optional<double> eta;
  std::optional<std::uint64_t> replicates;
};

struct PairedOptions {
  PairedOverrides overrides;
  QHatConvention q_hat_convention = QHatConvention::per_run_mean;
  int initial_runs = 5;
  /// When set, steps 1 and 2 are skipped and this schedule is used.
  std::optional<CoolingSchedule> schedule;
  const TraceSink* trace = nullptr;
};

/// Regime the paired estimator uses for a model, and the shift it applies.
struct RegimeChoice {
  Regime regime = Regime::integer_nonpositive;
  double shift = 0.0;  // c in H'(x) = H(x) + c
  int n = 1;           // bound on |H| of the unshifted model
  bool guaranteed = true;
};

/// Smallest bound n used in the integer regimes.
inline constexpr int kMinIntegerRegimeBound = 4;

/// Integral models of constant sign run unshifted with n = max(4, max |H|).
/// Mixed-sign models are shifted by c = -2n (n = max |H|) and use the shifted
/// parameters. Non-integral models of constant sign run unshifted with
/// guaranteed = false.
RegimeChoice choose_regime(const GibbsModel& model);

struct PairedEstimate {
  double w_bar = 1.0;
  double v_bar = 1.0;
  double log_w_bar = 0.0;
  double log_v_bar = 0.0;
  /// Estimate of Z(beta)/Z(0) for the caller's (unshifted) model.
  double ratio_estimate = 1.0;
  double log_ratio_estimate = 0.0;
  std::uint64_t replicates = 0;
  std::uint64_t draws_total = 0;
  double epsilon = 0.0;

  RegimeChoice regime;
  std::optional<ScheduleParams> params;
  CoolingSchedule schedule{std::vector<double>{0.0, 1.0}};
  bool schedule_degenerate = false;
  std::optional<InitialEstimate> initial;
  std::uint64_t schedule_draws = 0;
  std::uint64_t replicate_draws = 0;
  std::vector<std::string> warnings;
};

/// Full paired product approximation: initial estimate of q, well-balanced
/// schedule, replicated paired factors, and the ratio of their means.
/// Streams are derived from `seed`; the result does not depend on the number
/// of workers. Throws std::invalid_argument for beta <= 0 or epsilon outside
/// (0, 1]; epsilon above 1/10 adds a warning.
PairedEstimate paired_product_estimate(const SamplerOracle& oracle, double beta, double epsilon, std::uint64_t seed,
                                       const PairedOptions& options = {});

/// Median of `boost` (odd) independent paired estimates on streams
/// (seed, j, boost). The returned record is the median run; draws_total
/// covers all runs.
PairedEstimate boosted_paired_estimate(const SamplerOracle& oracle, double beta, double epsilon, std::uint64_t seed,
                                       int boost, const PairedOptions& options = {});

struct BaselineEstimate {
  double estimate = 1.0;
  double log_estimate = 0.0;
  std::uint64_t draws = 0;
};

/// Sample mean of exp(-beta H(X)) over X ~ pi_0.
BaselineEstimate single_shot_estimate(const SamplerOracle& oracle, double beta, std::uint64_t num_draws,
                                      std::uint64_t seed);

/// Multistage product estimator: stage i averages exp(-(beta_{i+1} - beta_i) H(X))
/// over X ~ pi_{beta_i}; the stage means are multiplied.
BaselineEstimate product_estimate(const CoolingSchedule& schedule, const SamplerOracle& oracle,
                                  std::uint64_t draws_per_stage, std::uint64_t seed);

/// Two-piece fixed schedule 0, 1/n, ..., k/n, k g/n, k g^2/n, ... with
/// k = ceil(q), g = 1 + 1/q, clipped below beta and closed with beta.
CoolingSchedule bezakova_schedule(double q, int n, double beta);

}  // namespace gibbs
