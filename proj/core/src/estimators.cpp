#include "gibbs_partition/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gibbs_partition/parallel.hpp"

namespace gibbs {

namespace {

// Draws per stream in the single-shot baseline.
constexpr std::size_t kBaselineBlock = 4096;

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and positive");
}

}  // namespace

double PairSample::w() const { return std::exp(log_w); }
double PairSample::v() const { return std::exp(log_v); }

PairSample paired_replicate(const CoolingSchedule& schedule, const SamplerOracle& oracle, Engine& rng) {
  const auto& betas = schedule.betas();
  const GibbsModel& model = oracle.model();
  PairSample s;
  double prev_energy = model.energy(oracle.draw(betas[0], rng));
  for (std::size_t i = 0; i < schedule.intervals(); ++i) {
    const double next_energy = model.energy(oracle.draw(betas[i + 1], rng));
    const double delta = schedule.half_length(i);
    s.log_w -= delta * prev_energy;
    s.log_v += delta * next_energy;
    prev_energy = next_energy;
  }
  return s;
}

std::uint64_t paired_replicate_count(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double eps_tilde = std::sqrt(1.0 + epsilon) - 1.0;
  return static_cast<std::uint64_t>(
      std::ceil(2.0 * std::numbers::e * std::sqrt(10.0) / (eps_tilde * eps_tilde)));
}

double log_mean_exp(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("log_mean_exp of an empty sample");
  const double top = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(top)) return top;
  std::vector<double> scaled(values.size());
  std::transform(values.begin(), values.end(), scaled.begin(), [top](double x) { return std::exp(x - top); });
  return top + std::log(pairwise_sum(scaled)) - std::log(static_cast<double>(values.size()));
}

RegimeChoice choose_regime(const GibbsModel& model) {
  RegimeChoice c;
  c.n = model.n_bound();
  switch (model.sign_class()) {
    case SignClass::nonpositive:
      c.regime = Regime::integer_nonpositive;
      c.guaranteed = model.integral();
      break;
    case SignClass::nonnegative:
      c.regime = Regime::integer_nonnegative;
      c.guaranteed = model.integral();
      break;
    case SignClass::mixed:
      c.regime = Regime::shifted_mixed;
      c.shift = -2.0 * c.n;
      c.guaranteed = model.integral();
      break;
  }
  // Any n >= max |H| is a valid bound; the integer-regime guarantees need n >= 4.
  if (c.regime != Regime::shifted_mixed) c.n = std::max(c.n, kMinIntegerRegimeBound);
  return c;
}

PairedEstimate paired_product_estimate(const SamplerOracle& oracle, double beta, double epsilon, std::uint64_t seed,
                                       const PairedOptions& options) {
  check_beta(beta);
  if (!(epsilon > 0.0) || epsilon > 1.0) throw std::invalid_argument("epsilon must lie in (0, 1]");

  PairedEstimate out;
  out.epsilon = epsilon;
  out.regime = choose_regime(oracle.model());
  if (epsilon > 0.1) out.warnings.emplace_back("epsilon above 1/10: the 3/4 guarantee is not claimed");
  if (!out.regime.guaranteed) out.warnings.emplace_back("non-integer Hamiltonian: the 3/4 guarantee is not claimed");

  const SamplerOracle working = out.regime.shift == 0.0
                                    ? oracle
                                    : oracle.rebased(shift_hamiltonian(oracle.model(), out.regime.shift));

  if (options.schedule) {
    if (std::abs(options.schedule->beta() - beta) > 1e-12 * std::max(1.0, beta))
      throw std::invalid_argument("supplied schedule does not end at beta");
    out.schedule = *options.schedule;
  } else {
    const InitialEstimate init =
        initial_estimate(working, beta, options.initial_runs, seed, options.q_hat_convention, options.trace);
    ScheduleParams params = select_params(init.q_hat1, out.regime.n, out.regime.regime, beta);
    if (options.overrides.d) params.d = *options.overrides.d;
    if (options.overrides.eta) params.eta = *options.overrides.eta;
    // Keep k = (4/3) d / eta unless the rate itself is overridden.
    if (options.overrides.k) {
      params.k = *options.overrides.k;
    } else if (options.overrides.d || options.overrides.eta) {
      params.k = 4.0 / 3.0 * params.d / params.eta;
    }
    const ScheduleBuild build = well_balanced_schedule(working, beta, params, seed, options.trace);
    out.initial = init;
    out.params = params;
    out.schedule = build.schedule;
    out.schedule_degenerate = build.degenerate;
    out.schedule_draws = build.draws_used;
  }

  out.replicates = options.overrides.replicates.value_or(paired_replicate_count(epsilon));
  if (out.replicates == 0) throw std::invalid_argument("replicate count must be positive");

  std::vector<double> log_w(out.replicates);
  std::vector<double> log_v(out.replicates);
  parallel_for(out.replicates, [&](std::size_t j) {
    Engine rng = derive_stream(seed, j, StageTag::replicates);
    const PairSample s = paired_replicate(out.schedule, working, rng);
    log_w[j] = s.log_w;
    log_v[j] = s.log_v;
  });
  out.replicate_draws = out.replicates * (out.schedule.intervals() + 1);

  out.log_w_bar = log_mean_exp(log_w);
  out.log_v_bar = log_mean_exp(log_v);
  out.w_bar = std::exp(out.log_w_bar);
  out.v_bar = std::exp(out.log_v_bar);
  // ln Z(beta) = ln Z'(beta) + beta c for the shifted model Z'.
  out.log_ratio_estimate = out.log_w_bar - out.log_v_bar + beta * out.regime.shift;
  out.ratio_estimate = std::exp(out.log_ratio_estimate);
  out.draws_total = (out.initial ? out.initial->draws_used : 0) + out.schedule_draws + out.replicate_draws;
  return out;
}

PairedEstimate boosted_paired_estimate(const SamplerOracle& oracle, double beta, double epsilon, std::uint64_t seed,
                                       int boost, const PairedOptions& options) {
  if (boost < 1 || boost % 2 == 0) throw std::invalid_argument("boost count must be odd and positive");
  if (boost == 1) return paired_product_estimate(oracle, beta, epsilon, seed, options);
  std::vector<PairedEstimate> runs;
  runs.reserve(static_cast<std::size_t>(boost));
  std::uint64_t draws = 0;
  for (int j = 0; j < boost; ++j) {
    runs.push_back(paired_product_estimate(oracle, beta, epsilon,
                                           derive_seed(seed, static_cast<std::uint64_t>(j), StageTag::boost), options));
    draws += runs.back().draws_total;
  }
  std::vector<std::size_t> order(runs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return runs[a].log_ratio_estimate < runs[b].log_ratio_estimate;
  });
  PairedEstimate median = runs[order[order.size() / 2]];
  median.draws_total = draws;
  return median;
}

BaselineEstimate single_shot_estimate(const SamplerOracle& oracle, double beta, std::uint64_t num_draws,
                                      std::uint64_t seed) {
  check_beta(beta);
  if (num_draws == 0) throw std::invalid_argument("single-shot estimate needs at least one draw");
  std::vector<double> logs(num_draws);
  const std::size_t blocks = (num_draws + kBaselineBlock - 1) / kBaselineBlock;
  parallel_for(blocks, [&](std::size_t blk) {
    Engine rng = derive_stream(seed, blk, StageTag::baseline);
    const std::size_t end = std::min<std::size_t>(num_draws, (blk + 1) * kBaselineBlock);
    for (std::size_t j = blk * kBaselineBlock; j < end; ++j)
      logs[j] = -beta * oracle.model().energy(oracle.draw(0.0, rng));
  });
  BaselineEstimate out;
  out.log_estimate = log_mean_exp(logs);
  out.estimate = std::exp(out.log_estimate);
  out.draws = num_draws;
  return out;
}

BaselineEstimate product_estimate(const CoolingSchedule& schedule, const SamplerOracle& oracle,
                                  std::uint64_t draws_per_stage, std::uint64_t seed) {
  if (draws_per_stage == 0) throw std::invalid_argument("product estimate needs at least one draw per stage");
  const auto& betas = schedule.betas();
  const std::size_t stages = schedule.intervals();
  std::vector<double> stage_logs(stages);
  parallel_for(stages, [&](std::size_t i) {
    const double step = betas[i + 1] - betas[i];
    std::vector<double> logs(draws_per_stage);
    Engine rng = derive_stream(seed, i, StageTag::baseline);
    for (auto& l : logs) l = -step * oracle.model().energy(oracle.draw(betas[i], rng));
    stage_logs[i] = log_mean_exp(logs);
  });
  BaselineEstimate out;
  out.log_estimate = pairwise_sum(stage_logs);
  out.estimate = std::exp(out.log_estimate);
  out.draws = draws_per_stage * stages;
  return out;
}

CoolingSchedule bezakova_schedule(double q, int n, double beta) {
  if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("bezakova schedule needs q > 0");
  if (n < 1) throw std::invalid_argument("bezakova schedule needs n >= 1");
  check_beta(beta);
  const double k = std::ceil(q);
  const double gamma = 1.0 + 1.0 / q;
  const double limit = beta - 1e-12;
  std::vector<double> betas{0.0};
  for (double j = 1.0; j <= k; j += 1.0) {
    const double b = j / n;
    if (b >= limit) break;
    betas.push_back(b);
  }
  if (betas.size() == static_cast<std::size_t>(k) + 1) {
    for (double b = k * gamma / n; b < limit; b *= gamma) betas.push_back(b);
  }
  betas.push_back(beta);
  return CoolingSchedule(std::move(betas));
}

}  // namespace gibbs
