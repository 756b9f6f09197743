#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "gibbs_partition/model.hpp"
#include "gibbs_partition/rng.hpp"

namespace gibbs {

enum class SamplerKind { exact_enumeration, mcmc };

const char* to_string(SamplerKind k);

/// Thread-safe tally of draws served, overall and by b-value bucket.
class DrawCounter {
 public:
  static constexpr std::size_t kBuckets = 64;
  static constexpr double kBucketWidth = 0.125;

  void record(double b) {
    total_.fetch_add(1, std::memory_order_relaxed);
    buckets_[bucket_of(b)].fetch_add(1, std::memory_order_relaxed);
  }
  std::uint64_t total() const { return total_.load(std::memory_order_relaxed); }
  std::uint64_t bucket(std::size_t i) const { return buckets_.at(i).load(std::memory_order_relaxed); }

  /// Bucket i holds b in [i, i+1) * kBucketWidth; the last bucket also takes
  /// everything above.
  static std::size_t bucket_of(double b);

 private:
  std::atomic<std::uint64_t> total_{0};
  std::array<std::atomic<std::uint64_t>, kBuckets> buckets_{};
};

/// Source of draws from pi_b for any b. Copies share the draw counter.
class SamplerOracle {
 public:
  /// Exact sampling by inversion over the enumerated energy spectrum.
  /// Throws OracleInfeasible for non-enumerable models.
  static SamplerOracle exact(GibbsModel model);

  /// Restart single-site Metropolis: each draw starts from a uniform state and
  /// applies `sweeps` systematic-scan sweeps. `tv_budget_per_draw` is the
  /// caller's declared bound on the total-variation error of one draw.
  /// Requires an Ising model.
  static SamplerOracle mcmc(GibbsModel model, int sweeps, double tv_budget_per_draw);

  SamplerKind kind() const { return kind_; }
  const GibbsModel& model() const { return model_; }
  double tv_budget_per_draw() const { return tv_budget_; }
  int mcmc_steps() const { return sweeps_; }

  /// Dispatches to draw_exact or draw_mcmc.
  StateIndex draw(double b, Engine& rng) const;

  const DrawCounter& counter() const { return *counter_; }
  std::uint64_t draws() const { return counter_->total(); }

  /// Oracle for `shifted`, which must be a shift of this oracle's model. The
  /// sampled distributions are identical and the draw counter is shared.
  SamplerOracle rebased(const GibbsModel& shifted) const;

  /// Same sampler with a new zeroed counter.
  SamplerOracle with_fresh_counter() const;

 private:
  friend StateIndex draw_exact(const SamplerOracle&, double, Engine&);
  friend StateIndex draw_mcmc(const SamplerOracle&, double, Engine&);

  struct Levels {
    std::vector<double> energies;
    std::vector<double> log_counts;
    std::vector<std::size_t> offsets;  // level l holds states[offsets[l] .. offsets[l+1])
    std::vector<StateIndex> states;
  };

  explicit SamplerOracle(GibbsModel model) : model_(std::move(model)) {}

  GibbsModel model_;
  SamplerKind kind_ = SamplerKind::exact_enumeration;
  double tv_budget_ = 0.0;
  int sweeps_ = 0;
  std::shared_ptr<const Levels> levels_;
  std::shared_ptr<DrawCounter> counter_;
};

/// X ~ pi_b exactly; increments the counter.
StateIndex draw_exact(const SamplerOracle& oracle, double b, Engine& rng);

/// Approximate draw after mcmc_steps sweeps; increments the counter.
StateIndex draw_mcmc(const SamplerOracle& oracle, double b, Engine& rng);

/// Exact distribution of one restart-Metropolis draw, by propagating the
/// uniform start through `sweeps` enumerated sweeps. Ising models only.
std::vector<double> mcmc_draw_distribution(const GibbsModel& model, double b, int sweeps);

/// Exact pi_b as a probability vector over all states.
std::vector<double> gibbs_distribution(const GibbsModel& model, double b);

/// Total-variation distance between a restart-Metropolis draw and pi_b.
double mcmc_total_variation(const GibbsModel& model, double b, int sweeps);

/// min(1, total_draws * tv_budget_per_draw): extra failure probability from
/// coupling every approximate draw with a perfect one.
double coupling_failure_bound(double tv_budget_per_draw, std::uint64_t total_draws);

}  // namespace gibbs
