#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gibbs_partition/rng.hpp"
#include "gibbs_partition/sampler.hpp"

namespace gibbs {

/// downward: runs start at beta and move toward 0 (H <= 0).
/// upward: runs start at 0 and move toward beta (H >= 0).
enum class Direction { downward, upward };

/// Parameter values b in (0, beta_max) whose images z(b) form a Poisson
/// point process of the given rate on the z-interval.
struct PointProcess {
  std::vector<double> points;  // ascending
  double rate = 1.0;
  double beta_max = 0.0;
  Direction direction = Direction::downward;
};

/// One step of a TPA run, for tracing.
struct TpaStep {
  std::uint64_t run_id = 0;
  double b = 0.0;       // value after the step
  double energy = 0.0;  // H(X) of the draw
  double u = 0.0;
};

using TraceSink = std::function<void(const TpaStep&)>;

/// Direction TPA must use for the model's sign class; throws for mixed.
Direction tpa_direction(const GibbsModel& model);

/// Rate-1 run for H <= 0. Starting at b = beta, draws X ~ pi_b and
/// U ~ U(0,1), sets b <- b - ln(U)/H(X) (b <- -inf when H(X) = 0) and records
/// b while it stays positive. Uses |points| + 1 draws.
PointProcess tpa_run_nonpositive(const SamplerOracle& oracle, double beta, Engine& rng,
                                 const TraceSink* trace = nullptr, std::uint64_t run_id = 0);

/// Rate-1 run for H >= 0, moving upward from 0 and recording b while b < beta.
PointProcess tpa_run_nonnegative(const SamplerOracle& oracle, double beta, Engine& rng,
                                 const TraceSink* trace = nullptr, std::uint64_t run_id = 0);

/// Dispatches on the model's sign class.
PointProcess tpa_run(const SamplerOracle& oracle, double beta, Engine& rng,
                     const TraceSink* trace = nullptr, std::uint64_t run_id = 0);

/// Sorted union of runs; rates add. Throws on mismatched beta_max or direction.
PointProcess merge_runs(std::span<const PointProcess> runs);

/// Keeps each point independently with probability target_rate / rate.
PointProcess thin(const PointProcess& process, double target_rate, Engine& rng);

/// Process of arbitrary positive rate: ceil(rate) independent runs on
/// streams (seed, i, tag), merged, then thinned on stream (seed, 0, thinning)
/// when rate is fractional.
struct RatedProcess {
  PointProcess process;
  std::uint64_t draws_used = 0;
  std::uint64_t runs = 0;
};
RatedProcess tpa_process(const SamplerOracle& oracle, double beta, double rate, std::uint64_t seed,
                         StageTag tag, const TraceSink* trace = nullptr);

}  // namespace gibbs
