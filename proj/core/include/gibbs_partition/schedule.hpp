#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gibbs_partition/sampler.hpp"
#include "gibbs_partition/tpa.hpp"

namespace gibbs {

enum class Regime { integer_nonpositive, integer_nonnegative, shifted_mixed };

const char* to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// How the initial estimate is normalized. per_run_mean divides the merged
/// point count by the number of runs so it estimates q itself; raw_count
/// keeps the merged count.
enum class QHatConvention { per_run_mean, raw_count };

struct ScheduleParams {
  double eta = 1.0;  // target bound on every z-gap
  int d = 1;         // keep every d-th point
  double k = 1.0;    // point-process rate
  double q_hat1 = 0.0;
  Regime regime = Regime::integer_nonpositive;
};

struct InitialEstimate {
  double q_hat1 = 0.0;
  std::uint64_t draws_used = 0;
  std::size_t points = 0;
};

/// Runs TPA `runs` times on streams (seed, i, initial_estimate) and merges.
InitialEstimate initial_estimate(const SamplerOracle& oracle, double beta, int runs, std::uint64_t seed,
                                 QHatConvention convention = QHatConvention::per_run_mean,
                                 const TraceSink* trace = nullptr);

/// Parameter choice for the paired product algorithm.
///
/// Integer regimes, with L = 2 + ln(2n):
///   eta = 2 / L,  d = ceil(22 ln(100 L (q_hat1 + 1/2))),  k = (2/3) d L.
/// Shifted regime (n is the bound of the unshifted model):
///   eta = 2 / ln 2,  d = ceil(22 ln(200 (q_hat1 + 2 n beta + 1) / ln 2)),
///   k = (2/3) d ln 2.
/// Both satisfy k = (4/3) d / eta.
ScheduleParams select_params(double q_hat1, int n, Regime regime, double beta);

/// 2 (pi mu)^(-1/2) (2/e)^(mu/2), an upper bound on P(X < mu/2) for
/// X ~ Poisson(mu).
double poisson_lower_tail_bound(double mu);

/// 0 = beta_0 < beta_1 < ... < beta_l = beta.
class CoolingSchedule {
 public:
  /// Throws std::invalid_argument unless betas starts at exactly 0, is
  /// strictly increasing, and has at least two entries.
  explicit CoolingSchedule(std::vector<double> betas);

  const std::vector<double>& betas() const { return betas_; }
  /// Number of intervals l.
  std::size_t intervals() const { return betas_.size() - 1; }
  double beta() const { return betas_.back(); }
  double midpoint(std::size_t i) const { return 0.5 * (betas_[i] + betas_[i + 1]); }
  /// Parameter-space half length of interval i.
  double half_length(std::size_t i) const { return 0.5 * (betas_[i + 1] - betas_[i]); }

  friend bool operator==(const CoolingSchedule&, const CoolingSchedule&) = default;

 private:
  std::vector<double> betas_;
};

/// Keeps every d-th point counting from the end the process started at (beta
/// for downward runs, 0 for upward runs), then adds 0 and beta. Kept points
/// within 1e-12 of either endpoint are dropped. The leftover partial block
/// joins the interval at the far end.
CoolingSchedule keep_every_dth(const PointProcess& process, int d);

struct ScheduleBuild {
  CoolingSchedule schedule;
  std::uint64_t draws_used = 0;
  std::size_t process_points = 0;
  /// True when no point survived and the schedule is {0, beta}.
  bool degenerate = false;
};

/// Builds a rate-k process from ceil(k) runs on streams (seed, i,
/// schedule_runs), thins it, and keeps every d-th point.
ScheduleBuild well_balanced_schedule(const SamplerOracle& oracle, double beta, const ScheduleParams& params,
                                     std::uint64_t seed, const TraceSink* trace = nullptr);

/// {"betas": [...], "params": {...}}; params is omitted when absent.
nlohmann::json schedule_to_json(const CoolingSchedule& schedule,
                                const std::optional<ScheduleParams>& params = std::nullopt);
CoolingSchedule schedule_from_json(const nlohmann::json& doc);
std::optional<ScheduleParams> schedule_params_from_json(const nlohmann::json& doc);

}  // namespace gibbs
