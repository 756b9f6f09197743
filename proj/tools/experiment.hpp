#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gibbs_partition/gibbs_partition.hpp"

namespace gibbs {

enum class Method { paired, product, single, exact };
enum class OutputFormat { csv, json };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

struct ExperimentConfig {
  std::string model = "k2";
  double beta = 1.0;
  double epsilon = 0.1;
  Method method = Method::paired;
  SamplerKind sampler = SamplerKind::exact_enumeration;
  int mcmc_steps = 50;
  double tv_budget = 0.0;
  std::uint64_t seed = 1;
  int reps = 1;
  int boost = 1;
  /// Draw budget per repetition for the baselines. When unset, each
  /// repetition first runs the paired method and matches its draw count.
  std::optional<std::uint64_t> draws;
  std::optional<std::string> schedule_in;
  std::optional<std::string> schedule_out;
  std::optional<std::string> trace;
  PairedOverrides overrides;
  QHatConvention q_hat_convention = QHatConvention::per_run_mean;
  std::vector<Method> methods{Method::paired, Method::product, Method::single};  // compare only
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::csv;
};

/// Throws std::invalid_argument on an inconsistent configuration.
void validate(const ExperimentConfig& config);

nlohmann::json config_to_json(const ExperimentConfig& config);

struct ResultRow {
  int rep = 0;
  Method method = Method::paired;
  std::uint64_t seed = 0;
  double estimate = 1.0;
  double log_estimate = 0.0;
  double epsilon = 0.0;
  std::uint64_t replicates = 0;
  std::uint64_t draws_total = 0;
  std::size_t schedule_length = 0;  // number of intervals
  std::optional<double> true_log_ratio;
  std::optional<double> coupling_bound;
  double wall_time = 0.0;  // seconds; JSON output only
};

/// Runs `reps` independent estimates (one row for method = exact).
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

struct MethodSummary {
  Method method = Method::paired;
  int reps = 0;
  std::optional<double> coverage;  // fraction within a factor 1 + epsilon
  double mean_draws = 0.0;
  std::optional<double> mean_abs_log_error;
};

struct Comparison {
  std::vector<ResultRow> rows;
  std::vector<MethodSummary> summary;
  double q = 0.0;  // exact when enumerable, else the mean initial estimate
  bool q_exact = false;
  Regime regime = Regime::integer_nonpositive;
  double draw_bound = 0.0;
  double svv_bound = 0.0;
};

/// Runs every method in config.methods at matched draw budgets.
Comparison compare_methods(const ExperimentConfig& config);

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows);
nlohmann::json rows_to_json(const std::vector<ResultRow>& rows);
void write_comparison_csv(std::ostream& os, const Comparison& comparison);
nlohmann::json comparison_to_json(const Comparison& comparison);

/// Exit codes: 0 success, 1 runtime failure, 2 invalid configuration,
/// 3 exact oracle infeasible.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gibbs
