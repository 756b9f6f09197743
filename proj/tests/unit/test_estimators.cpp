#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "brute_force.hpp"
#include "gibbs_partition/bounds.hpp"
#include "gibbs_partition/estimators.hpp"
#include "gibbs_partition/exact_analysis.hpp"
#include "gibbs_partition/model_io.hpp"
#include "stats.hpp"

namespace gibbs {
namespace {

using testing::mean_of;
using testing::relvar_of;
using testing::standard_error_of;

constexpr double kK2Ratio = 1.8591409142295225;  // (2e + 2) / 4

struct Samples {
  std::vector<double> w;
  std::vector<double> v;
};

Samples paired_samples(const CoolingSchedule& s, const SamplerOracle& oracle, std::size_t n, std::uint64_t seed) {
  Engine rng(seed);
  Samples out;
  for (std::size_t j = 0; j < n; ++j) {
    const auto p = paired_replicate(s, oracle, rng);
    out.w.push_back(p.w());
    out.v.push_back(p.v());
  }
  return out;
}

// Random strictly increasing schedule on [0, beta] with `inner` interior points.
CoolingSchedule random_schedule(std::mt19937_64& gen, double beta, int inner) {
  std::uniform_real_distribution<double> u(0.0, beta);
  std::vector<double> pts(static_cast<std::size_t>(inner));
  for (auto& p : pts) p = u(gen);
  std::sort(pts.begin(), pts.end());
  std::vector<double> betas{0.0};
  for (double p : pts)
    if (p > betas.back() + 1e-9 && p < beta - 1e-9) betas.push_back(p);
  betas.push_back(beta);
  return CoolingSchedule(betas);
}

TEST(ReplicateCount, TenPercent) {
  EXPECT_EQ(paired_replicate_count(0.1), 7217U);
  EXPECT_GT(paired_replicate_count(0.05), paired_replicate_count(0.1));
  EXPECT_THROW(paired_replicate_count(0.0), std::invalid_argument);
}

TEST(LogMeanExp, MatchesDirectMean) {
  const std::vector<double> xs{0.0, std::log(2.0), std::log(3.0), std::log(6.0)};
  EXPECT_NEAR(log_mean_exp(xs), std::log(3.0), 1e-15);
  const std::vector<double> big{1000.0, 1000.0 + std::log(3.0)};
  EXPECT_NEAR(log_mean_exp(big), 1000.0 + std::log(2.0), 1e-12);
  EXPECT_THROW(log_mean_exp(std::vector<double>{}), std::invalid_argument);
}

TEST(LogMeanExp, OrderIndependent) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd(0.0, 3.0);
  std::vector<double> xs(5000);
  for (auto& x : xs) x = nd(gen);
  const double a = log_mean_exp(xs);
  std::reverse(xs.begin(), xs.end());
  EXPECT_NEAR(log_mean_exp(xs), a, 1e-13);
}

TEST(PairedReplicate, ZeroHamiltonianIsExactlyOne) {
  const auto oracle = SamplerOracle::exact(constant_model(0.0, 4));
  Engine rng(1);
  const auto p = paired_replicate(CoolingSchedule({0.0, 0.3, 2.0}), oracle, rng);
  EXPECT_EQ(p.w(), 1.0);
  EXPECT_EQ(p.v(), 1.0);
}

TEST(PairedReplicate, UsesOneDrawPerSchedulePoint) {
  const auto oracle = SamplerOracle::exact(resolve_model("cycle-4"));
  Engine rng(2);
  const CoolingSchedule s({0.0, 0.2, 0.5, 0.9, 1.0});
  for (int i = 0; i < 10; ++i) paired_replicate(s, oracle, rng);
  EXPECT_EQ(oracle.draws(), 50U);
}

TEST(PairedFactors, K2ClosedForms) {
  const auto spec = energy_spectrum(resolve_model("k2"));
  const auto means = paired_factor_means(spec, 0.0, 1.0);
  EXPECT_NEAR(means.w, 1.3243606, 1e-6);
  EXPECT_NEAR(means.v, 0.7123509, 1e-6);
  EXPECT_NEAR(interval_relvar_exact(spec, 0.0, 1.0), 0.0599852, 1e-6);
  EXPECT_NEAR(means.w / means.v, kK2Ratio, 1e-12);
}

TEST(PairedFactors, K2EmpiricalMatchesClosedForms) {
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  const auto s = paired_samples(CoolingSchedule({0.0, 1.0}), oracle, 100000, 3);
  EXPECT_NEAR(mean_of(s.w), 1.3243606, 3 * standard_error_of(s.w));
  EXPECT_NEAR(mean_of(s.v), 0.7123509, 3 * standard_error_of(s.v));
  EXPECT_NEAR(relvar_of(s.w), 0.0599852, 0.1 * 0.0599852);
  EXPECT_NEAR(relvar_of(s.v), 0.0599852, 0.1 * 0.0599852);
}

TEST(PairedFactors, MeansAgreeWithDirectTilt) {
  for (const char* name : {"k2", "path-3", "cycle-4", "grid-2x2"}) {
    const auto m = resolve_model(name);
    const auto spec = energy_spectrum(m);
    for (auto [a, b] : {std::pair{0.0, 0.5}, std::pair{0.4, 1.3}, std::pair{1.0, 2.0}}) {
      const auto means = paired_factor_means(spec, a, b);
      const double delta = 0.5 * (b - a);
      EXPECT_NEAR(means.w, testing::brute_tilt_mean(m, a, delta), 1e-12) << name;
      EXPECT_NEAR(means.v, testing::brute_tilt_mean(m, b, -delta), 1e-12) << name;
    }
  }
}

// Each W_i = exp(-delta_i H(X_i)) with X_i ~ pi_{beta_i} is unbiased for
// Z(m_i)/Z(beta_i); V_i for Z(m_i)/Z(beta_{i+1}).
TEST(PairedFactors, PerIntervalUnbiasedWithRelvarIdentity) {
  const auto m = resolve_model("cycle-4");
  const auto spec = energy_spectrum(m);
  const auto oracle = SamplerOracle::exact(m);
  const CoolingSchedule s({0.0, 0.35, 0.8, 1.5});
  Engine rng(4);
  for (std::size_t i = 0; i < s.intervals(); ++i) {
    const double a = s.betas()[i];
    const double b = s.betas()[i + 1];
    const double delta = s.half_length(i);
    std::vector<double> w(100000);
    std::vector<double> v(100000);
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] = std::exp(-delta * m.energy(oracle.draw(a, rng)));
      v[j] = std::exp(delta * m.energy(oracle.draw(b, rng)));
    }
    const auto means = paired_factor_means(spec, a, b);
    EXPECT_NEAR(mean_of(w), means.w, 3 * standard_error_of(w)) << i;
    EXPECT_NEAR(mean_of(v), means.v, 3 * standard_error_of(v)) << i;
    const double relvar = interval_relvar_exact(spec, a, b);
    EXPECT_NEAR(relvar, std::expm1(2.0 * midpoint_gap(spec, a, b)), 1e-12);
    EXPECT_NEAR(relvar_of(w), relvar, 0.1 * relvar) << i;
    EXPECT_NEAR(relvar_of(v), relvar, 0.1 * relvar) << i;
  }
}

TEST(PairedFactors, ProductOverScheduleMatchesComposition) {
  const auto m = resolve_model("cycle-4");
  const auto spec = energy_spectrum(m);
  const auto oracle = SamplerOracle::exact(m);
  const CoolingSchedule s({0.0, 0.3, 0.7, 1.0});
  const auto samples = paired_samples(s, oracle, 100000, 5);
  double ew = 1.0;
  double ev = 1.0;
  for (std::size_t i = 0; i < s.intervals(); ++i) {
    const auto means = paired_factor_means(spec, s.betas()[i], s.betas()[i + 1]);
    ew *= means.w;
    ev *= means.v;
  }
  EXPECT_NEAR(mean_of(samples.w), ew, 3 * standard_error_of(samples.w));
  EXPECT_NEAR(mean_of(samples.v), ev, 3 * standard_error_of(samples.v));
  const double relvar = paired_relvar_exact(spec, s);
  EXPECT_NEAR(relvar_of(samples.w), relvar, 0.1 * relvar);
}

// relvar of a product of independent factors is -1 + prod(1 + v_i); for the
// paired factors this equals exp(sum 2 delta_i^z) - 1 and E[W]/E[V] telescopes
// to Z(beta)/Z(0).
TEST(PairedFactors, AnalyticCompositionOnTinyModels) {
  std::mt19937_64 gen(6);
  for (const char* name : {"k2", "path-3", "cycle-4", "grid-2x2", "const-1", "const-0"}) {
    const auto m = resolve_model(name);
    const auto spec = energy_spectrum(m);
    for (int t = 0; t < 20; ++t) {
      const double beta = 0.5 + 2.0 * t / 20.0;
      const auto s = random_schedule(gen, beta, 3);
      double prod = 1.0;
      double gap_sum = 0.0;
      double ew = 1.0;
      double ev = 1.0;
      for (std::size_t i = 0; i < s.intervals(); ++i) {
        prod *= 1.0 + interval_relvar_exact(spec, s.betas()[i], s.betas()[i + 1]);
        gap_sum += midpoint_gap(spec, s.betas()[i], s.betas()[i + 1]);
        const auto means = paired_factor_means(spec, s.betas()[i], s.betas()[i + 1]);
        ew *= means.w;
        ev *= means.v;
      }
      EXPECT_NEAR(prod - 1.0, std::expm1(2.0 * gap_sum), 1e-10) << name;
      EXPECT_NEAR(paired_relvar_exact(spec, s), prod - 1.0, 1e-10) << name;
      EXPECT_NEAR(std::log(ew / ev), log_partition(spec, beta) - log_partition(spec, 0.0), 1e-10) << name;
    }
  }
}

// z'(beta_{i+1}) / z'(beta_i) >= exp(4 delta_i^z / eta_i^z), with eta_i^z the
// interval's z-gap and z' by central differences.
TEST(PairedFactors, MidpointSlopeInequality) {
  std::mt19937_64 gen(7);
  for (const char* name : {"k2", "path-3", "cycle-4", "grid-2x2"}) {
    const auto spec = energy_spectrum(resolve_model(name));
    const auto slope = [&](double b) {
      const double h = 1e-5;
      return (log_partition(spec, b + h) - log_partition(spec, b - h)) / (2 * h);
    };
    for (int t = 0; t < 10; ++t) {
      const auto s = random_schedule(gen, 2.0, 4);
      for (std::size_t i = 0; i < s.intervals(); ++i) {
        const double a = s.betas()[i];
        const double b = s.betas()[i + 1];
        const double gap = log_partition(spec, b) - log_partition(spec, a);
        EXPECT_NEAR(slope(a), z_slope(spec, a), 1e-7);
        EXPECT_GE(slope(b) / slope(a) * (1 + 1e-9), std::exp(4.0 * midpoint_gap(spec, a, b) / gap)) << name;
      }
    }
  }
}

TEST(PairedFactors, RelvarCeilingOnWellBalancedSchedules) {
  const auto m = resolve_model("cycle-4");
  const auto spec = energy_spectrum(m);
  const auto oracle = SamplerOracle::exact(m);
  const double ceiling = 2.0 * std::exp(1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto init = initial_estimate(oracle, 1.0, 5, seed);
    const auto params = select_params(init.q_hat1, m.n_bound(), Regime::integer_nonpositive, 1.0);
    const auto built = well_balanced_schedule(oracle, 1.0, params, seed);
    const auto gaps = z_gaps(spec, built.schedule);
    if (*std::max_element(gaps.begin(), gaps.end()) > params.eta) continue;
    const double exact = paired_relvar_exact(spec, built.schedule);
    EXPECT_LE(exact, paired_relvar_ceiling(params.eta, z_slope(spec, 1.0)));
    EXPECT_LE(paired_relvar_ceiling(params.eta, z_slope(spec, 1.0)), ceiling);
    if (seed < 3) {
      const auto samples = paired_samples(built.schedule, oracle, 20000, seed);
      EXPECT_LE(relvar_of(samples.w), ceiling * 1.25);
      EXPECT_LE(relvar_of(samples.v), ceiling * 1.25);
    }
  }
}

TEST(PairedEstimate, ZeroHamiltonianIsExactlyOne) {
  for (double beta : {0.1, 1.0, 7.0}) {
    const auto oracle = SamplerOracle::exact(constant_model(0.0, 16));
    const auto est = paired_product_estimate(oracle, beta, 0.1, 3);
    EXPECT_EQ(est.ratio_estimate, 1.0);
    EXPECT_EQ(est.log_ratio_estimate, 0.0);
    EXPECT_TRUE(est.schedule_degenerate);
    EXPECT_EQ(est.replicates, 7217U);
  }
}

TEST(PairedEstimate, ConstantHamiltonianIsExact) {
  const auto oracle = SamplerOracle::exact(constant_model(-2.0, 4));
  const auto est = paired_product_estimate(oracle, 1.5, 0.1, 4);
  EXPECT_NEAR(est.log_ratio_estimate, 3.0, 1e-12);
}

TEST(PairedEstimate, K2WithinEpsilon) {
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto est = paired_product_estimate(oracle, 1.0, 0.1, seed);
    inside += est.ratio_estimate >= kK2Ratio / 1.1 && est.ratio_estimate <= kK2Ratio * 1.1;
    EXPECT_EQ(est.regime.regime, Regime::integer_nonpositive);
    EXPECT_TRUE(est.warnings.empty());
  }
  EXPECT_GE(inside, 6);
}

TEST(PairedEstimate, DrawsTotalMatchesCounter) {
  const auto oracle = SamplerOracle::exact(resolve_model("grid-2x2"));
  const auto est = paired_product_estimate(oracle, 1.0, 0.3, 5);
  EXPECT_EQ(est.draws_total, oracle.draws());
  ASSERT_TRUE(est.initial.has_value());
  EXPECT_EQ(est.draws_total, est.initial->draws_used + est.schedule_draws + est.replicate_draws);
  EXPECT_EQ(est.replicate_draws, est.replicates * (est.schedule.intervals() + 1));
}

TEST(PairedEstimate, ShiftedRegimeForMixedSign) {
  const auto m = GibbsModel::from_table({-2, -1, 0, 1, 2, -2, 1, 0});
  const auto choice = choose_regime(m);
  EXPECT_EQ(choice.regime, Regime::shifted_mixed);
  EXPECT_EQ(choice.shift, -4.0);
  EXPECT_EQ(choice.n, 2);
  const auto oracle = SamplerOracle::exact(m);
  const auto truth = log_partition_exact(m, 1.0).value - log_partition_exact(m, 0.0).value;
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto before = oracle.draws();
    const auto est = paired_product_estimate(oracle, 1.0, 0.1, seed);
    EXPECT_EQ(est.draws_total, oracle.draws() - before);
    EXPECT_EQ(est.params->regime, Regime::shifted_mixed);
    inside += std::abs(est.log_ratio_estimate - truth) <= std::log(1.1);
  }
  EXPECT_GE(inside, 6);
}

TEST(PairedEstimate, RegimeChoice) {
  EXPECT_EQ(choose_regime(resolve_model("k2")).regime, Regime::integer_nonpositive);
  EXPECT_EQ(choose_regime(resolve_model("k2")).n, 4);
  EXPECT_EQ(choose_regime(resolve_model("grid-2x3")).n, 7);
  EXPECT_EQ(choose_regime(GibbsModel::from_table({0, 1, 3})).regime, Regime::integer_nonnegative);
  const auto frac = choose_regime(GibbsModel::from_table({0.0, 0.5}));
  EXPECT_EQ(frac.regime, Regime::integer_nonnegative);
  EXPECT_FALSE(frac.guaranteed);
  EXPECT_EQ(frac.shift, 0.0);
}

TEST(PairedEstimate, FractionalModelWarns) {
  const auto oracle = SamplerOracle::exact(GibbsModel::from_table({0.0, 0.5, 1.5}));
  PairedOptions opt;
  opt.overrides.replicates = 100;
  const auto est = paired_product_estimate(oracle, 1.0, 0.1, 1, opt);
  EXPECT_EQ(est.warnings.size(), 1U);
}

TEST(PairedEstimate, EpsilonValidation) {
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  EXPECT_THROW(paired_product_estimate(oracle, 1.0, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(paired_product_estimate(oracle, 1.0, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(paired_product_estimate(oracle, 1.0, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(paired_product_estimate(oracle, 0.0, 0.1, 1), std::invalid_argument);
  EXPECT_EQ(paired_product_estimate(oracle, 1.0, 0.5, 1).warnings.size(), 1U);
}

TEST(PairedEstimate, OverridesApply) {
  const auto oracle = SamplerOracle::exact(resolve_model("cycle-4"));
  PairedOptions opt;
  opt.overrides.d = 3;
  opt.overrides.eta = 1.0;
  opt.overrides.replicates = 250;
  const auto est = paired_product_estimate(oracle, 1.0, 0.1, 2, opt);
  ASSERT_TRUE(est.params.has_value());
  EXPECT_EQ(est.params->d, 3);
  EXPECT_EQ(est.params->eta, 1.0);
  EXPECT_EQ(est.params->k, 4.0);
  EXPECT_EQ(est.replicates, 250U);
  opt.overrides.k = 2.5;
  EXPECT_EQ(paired_product_estimate(oracle, 1.0, 0.1, 2, opt).params->k, 2.5);
  opt.overrides.replicates = 0;
  EXPECT_THROW(paired_product_estimate(oracle, 1.0, 0.1, 2, opt), std::invalid_argument);
}

TEST(PairedEstimate, SuppliedScheduleSkipsConstruction) {
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  PairedOptions opt;
  opt.schedule = CoolingSchedule({0.0, 0.5, 1.0});
  opt.overrides.replicates = 100;
  const auto est = paired_product_estimate(oracle, 1.0, 0.1, 3, opt);
  EXPECT_EQ(est.schedule, *opt.schedule);
  EXPECT_FALSE(est.initial.has_value());
  EXPECT_EQ(est.draws_total, 300U);
  EXPECT_THROW(paired_product_estimate(oracle, 2.0, 0.1, 3, opt), std::invalid_argument);
}

TEST(PairedEstimate, IndependentOfThreadCount) {
  const auto oracle = SamplerOracle::exact(resolve_model("grid-2x2"));
  setenv("GIBBS_PARTITION_THREADS", "1", 1);
  const auto serial = paired_product_estimate(oracle, 1.0, 0.2, 77);
  setenv("GIBBS_PARTITION_THREADS", "4", 1);
  const auto wide = paired_product_estimate(oracle, 1.0, 0.2, 77);
  unsetenv("GIBBS_PARTITION_THREADS");
  EXPECT_EQ(serial.log_ratio_estimate, wide.log_ratio_estimate);
  EXPECT_EQ(serial.schedule, wide.schedule);
  EXPECT_EQ(serial.draws_total, wide.draws_total);
}

TEST(BoostedEstimate, MedianOfRuns) {
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  PairedOptions opt;
  opt.overrides.replicates = 200;
  EXPECT_THROW(boosted_paired_estimate(oracle, 1.0, 0.1, 1, 2, opt), std::invalid_argument);
  EXPECT_THROW(boosted_paired_estimate(oracle, 1.0, 0.1, 1, 0, opt), std::invalid_argument);
  const auto single = boosted_paired_estimate(oracle, 1.0, 0.1, 9, 1, opt);
  EXPECT_EQ(single.log_ratio_estimate, paired_product_estimate(oracle, 1.0, 0.1, 9, opt).log_ratio_estimate);
  std::vector<double> logs;
  std::uint64_t draws = 0;
  for (std::uint64_t j = 0; j < 5; ++j) {
    const auto e = paired_product_estimate(oracle, 1.0, 0.1, derive_seed(9, j, StageTag::boost), opt);
    logs.push_back(e.log_ratio_estimate);
    draws += e.draws_total;
  }
  std::sort(logs.begin(), logs.end());
  const auto boosted = boosted_paired_estimate(oracle, 1.0, 0.1, 9, 5, opt);
  EXPECT_EQ(boosted.log_ratio_estimate, logs[2]);
  EXPECT_EQ(boosted.draws_total, draws);
}

TEST(SingleShot, ZeroHamiltonianIsExactlyOne) {
  const auto oracle = SamplerOracle::exact(constant_model(0.0, 4));
  EXPECT_EQ(single_shot_estimate(oracle, 2.0, 1000, 1).estimate, 1.0);
}

TEST(SingleShot, K2WithinThreeStandardErrors) {
  const auto m = resolve_model("k2");
  const auto spec = energy_spectrum(m);
  const auto oracle = SamplerOracle::exact(m);
  const std::uint64_t n = 100000;
  const auto est = single_shot_estimate(oracle, 1.0, n, 2);
  EXPECT_EQ(est.draws, n);
  EXPECT_EQ(oracle.draws(), n);
  const double relvar = single_shot_relvar_exact(spec, 1.0);
  EXPECT_NEAR(relvar, 0.2135523, 1e-6);
  EXPECT_NEAR(est.estimate, kK2Ratio, 3 * kK2Ratio * std::sqrt(relvar / n));
}

TEST(SingleShot, EmpiricalRelvar) {
  const auto m = resolve_model("k2");
  const auto oracle = SamplerOracle::exact(m);
  Engine rng(3);
  std::vector<double> w(100000);
  for (auto& x : w) x = std::exp(-m.energy(oracle.draw(0.0, rng)));
  EXPECT_NEAR(relvar_of(w), 0.2135523, 0.1 * 0.2135523);
  EXPECT_THROW(single_shot_estimate(oracle, 1.0, 0, 1), std::invalid_argument);
}

TEST(Product, OneStageIsSingleShot) {
  const auto oracle = SamplerOracle::exact(resolve_model("cycle-4"));
  for (std::uint64_t n : {1U, 100U, 4096U}) {
    EXPECT_EQ(product_estimate(CoolingSchedule({0.0, 1.3}), oracle, n, 5).estimate,
              single_shot_estimate(oracle, 1.3, n, 5).estimate);
  }
}

TEST(Product, ZeroHamiltonianAndAccounting) {
  const auto zero = SamplerOracle::exact(constant_model(0.0, 4));
  EXPECT_EQ(product_estimate(CoolingSchedule({0.0, 0.4, 1.0}), zero, 10, 1).estimate, 1.0);
  const auto oracle = SamplerOracle::exact(resolve_model("k2"));
  const auto est = product_estimate(CoolingSchedule({0.0, 0.4, 0.7, 1.0}), oracle, 10, 1);
  EXPECT_EQ(est.draws, 30U);
  EXPECT_EQ(oracle.draws(), 30U);
  EXPECT_THROW(product_estimate(CoolingSchedule({0.0, 1.0}), oracle, 0, 1), std::invalid_argument);
}

TEST(Product, RelvarComposition) {
  const auto m = resolve_model("cycle-4");
  const auto spec = energy_spectrum(m);
  const auto oracle = SamplerOracle::exact(m);
  const CoolingSchedule s({0.0, 0.4, 1.0});
  double prod = 1.0;
  for (std::size_t i = 0; i < s.intervals(); ++i)
    prod *= 1.0 + product_stage_relvar_exact(spec, s.betas()[i], s.betas()[i + 1]);
  const double predicted = prod - 1.0;
  std::vector<double> est;
  for (std::uint64_t seed = 0; seed < 40000; ++seed) est.push_back(product_estimate(s, oracle, 1, seed).estimate);
  const double truth = std::exp(log_partition(spec, 1.0) - log_partition(spec, 0.0));
  EXPECT_NEAR(mean_of(est), truth, 3 * standard_error_of(est));
  EXPECT_NEAR(relvar_of(est), predicted, 0.15 * predicted);
}

TEST(Bezakova, Examples) {
  EXPECT_EQ(bezakova_schedule(1.0, 2, 1.0).betas(), (std::vector<double>{0.0, 0.5, 1.0}));
  const auto s = bezakova_schedule(2.5, 4, 3.0).betas();
  const std::vector<double> expected{0.0, 0.25, 0.5, 0.75, 1.05, 1.47, 2.058, 2.8812, 3.0};
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i], expected[i], 1e-12);
  EXPECT_THROW(bezakova_schedule(0.0, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(bezakova_schedule(-1.0, 2, 1.0), std::invalid_argument);
}

TEST(Bezakova, StrictlyIncreasing) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> qd(0.01, 50.0);
  std::uniform_real_distribution<double> bd(0.01, 20.0);
  for (int t = 0; t < 500; ++t) {
    const double beta = bd(gen);
    const auto s = bezakova_schedule(qd(gen), 1 + t % 9, beta);
    EXPECT_EQ(s.beta(), beta);
    for (std::size_t i = 0; i + 1 < s.betas().size(); ++i) EXPECT_LT(s.betas()[i], s.betas()[i + 1]);
  }
}

TEST(Bounds, DrawBoundValues) {
  EXPECT_NEAR(integer_regime_draw_bound(0.62, 4, 0.1), 32501.43, 0.01);
  EXPECT_NEAR(integer_regime_draw_bound(0.6201145, 1, 0.1), 21433.92, 0.01);
  EXPECT_GT(shifted_regime_draw_bound(0.62, 1, 1.0, 0.1), 0.0);
  EXPECT_GT(svv_draw_bound(3.0, 4, 0.1), integer_regime_draw_bound(3.0, 4, 0.1));
}

}  // namespace
}  // namespace gibbs
