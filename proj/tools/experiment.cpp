#include "experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

namespace gibbs {

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json opt_json(const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

const char* format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

// Everything derived from the config once and shared by all repetitions.
struct Context {
  GibbsModel model;
  SamplerOracle oracle;
  std::optional<double> true_log_ratio;
  std::optional<CoolingSchedule> schedule_in;
  RegimeChoice regime;
};

GibbsModel load_model(const ExperimentConfig& c) { return resolve_model(c.model); }

SamplerOracle make_oracle(const ExperimentConfig& c, const GibbsModel& model) {
  if (c.sampler == SamplerKind::mcmc) return SamplerOracle::mcmc(model, c.mcmc_steps, c.tv_budget);
  return SamplerOracle::exact(model);
}

Context make_context(const ExperimentConfig& c) {
  GibbsModel model = load_model(c);
  std::optional<double> truth;
  if (model.enumerable()) truth = log_partition_exact(model, c.beta).value - log_partition_exact(model, 0.0).value;
  std::optional<CoolingSchedule> sched;
  if (c.schedule_in) {
    std::ifstream in(*c.schedule_in);
    if (!in) throw std::invalid_argument("cannot open schedule file '" + *c.schedule_in + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed schedule file: ") + e.what());
    }
    sched = schedule_from_json(doc);
  }
  SamplerOracle oracle = make_oracle(c, model);
  const RegimeChoice regime = choose_regime(model);
  return Context{std::move(model), std::move(oracle), truth, std::move(sched), regime};
}

class TraceWriter {
 public:
  explicit TraceWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::invalid_argument("cannot open trace file '" + path + "'");
  }
  TraceSink sink_for(int rep) {
    return [this, rep](const TpaStep& s) {
      std::lock_guard lock(mu_);
      out_ << nlohmann::json{{"rep", rep}, {"seq", seq_++}, {"run", s.run_id},
                             {"b", s.b},   {"energy", s.energy}, {"u", s.u}}
                  .dump()
           << '\n';
    };
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
  std::uint64_t seq_ = 0;
};

PairedOptions paired_options(const ExperimentConfig& c, const Context& ctx, const TraceSink* trace) {
  PairedOptions opt;
  opt.overrides = c.overrides;
  opt.q_hat_convention = c.q_hat_convention;
  opt.schedule = ctx.schedule_in;
  opt.trace = trace;
  return opt;
}

struct PairedRun {
  ResultRow row;
  PairedEstimate estimate;
};

void finish_row(ResultRow& row, const ExperimentConfig& c, const Context& ctx, const SamplerOracle& oracle) {
  if (row.draws_total != oracle.draws()) throw std::logic_error("draw accounting mismatch");
  row.true_log_ratio = ctx.true_log_ratio;
  if (c.sampler == SamplerKind::mcmc) row.coupling_bound = coupling_failure_bound(c.tv_budget, row.draws_total);
}

PairedRun run_paired(const ExperimentConfig& c, const Context& ctx, std::uint64_t seed, const TraceSink* trace) {
  const SamplerOracle oracle = ctx.oracle.with_fresh_counter();
  PairedRun out{{}, boosted_paired_estimate(oracle, c.beta, c.epsilon, seed, c.boost, paired_options(c, ctx, trace))};
  const PairedEstimate& e = out.estimate;
  ResultRow& row = out.row;
  row.method = Method::paired;
  row.estimate = e.ratio_estimate;
  row.log_estimate = e.log_ratio_estimate;
  row.replicates = e.replicates;
  row.draws_total = e.draws_total;
  row.schedule_length = e.schedule.intervals();
  finish_row(row, c, ctx, oracle);
  return out;
}

ResultRow run_single(const ExperimentConfig& c, const Context& ctx, std::uint64_t seed, std::uint64_t budget) {
  const SamplerOracle oracle = ctx.oracle.with_fresh_counter();
  const BaselineEstimate e =
      single_shot_estimate(oracle, c.beta, std::max<std::uint64_t>(budget, 1), derive_seed(seed, 0, StageTag::baseline));
  ResultRow row;
  row.method = Method::single;
  row.estimate = e.estimate;
  row.log_estimate = e.log_estimate;
  row.replicates = e.draws;
  row.draws_total = e.draws;
  row.schedule_length = 1;
  finish_row(row, c, ctx, oracle);
  return row;
}

// Fixed two-piece schedule built from a TPA estimate of q, then the
// multistage product estimator with the remaining budget spread evenly.
ResultRow run_product(const ExperimentConfig& c, const Context& ctx, std::uint64_t seed, std::uint64_t budget) {
  const SamplerOracle oracle = ctx.oracle.with_fresh_counter();
  const std::uint64_t stream = derive_seed(seed, 0, StageTag::baseline);
  const SamplerOracle working =
      ctx.regime.shift == 0.0 ? oracle : oracle.rebased(shift_hamiltonian(ctx.model, ctx.regime.shift));
  const InitialEstimate init = initial_estimate(working, c.beta, 5, stream, c.q_hat_convention);
  const CoolingSchedule schedule = bezakova_schedule(init.q_hat1 + 0.5, ctx.regime.n, c.beta);
  const std::uint64_t remaining = budget > init.draws_used ? budget - init.draws_used : 0;
  const std::uint64_t per_stage = std::max<std::uint64_t>(1, remaining / schedule.intervals());
  const BaselineEstimate e = product_estimate(schedule, oracle, per_stage, stream);
  ResultRow row;
  row.method = Method::product;
  row.estimate = e.estimate;
  row.log_estimate = e.log_estimate;
  row.replicates = per_stage;
  row.draws_total = init.draws_used + e.draws;
  row.schedule_length = schedule.intervals();
  finish_row(row, c, ctx, oracle);
  return row;
}

ResultRow exact_row(const ExperimentConfig& c, const Context& ctx) {
  if (!ctx.true_log_ratio)
    throw OracleInfeasible("model has too many states for exact enumeration: " + ctx.model.describe());
  ResultRow row;
  row.method = Method::exact;
  row.seed = c.seed;
  row.log_estimate = *ctx.true_log_ratio;
  row.estimate = std::exp(row.log_estimate);
  row.true_log_ratio = ctx.true_log_ratio;
  return row;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One repetition of every requested method. Baselines get the paired run's
// draw count unless a budget is configured.
std::vector<ResultRow> run_repetition(const ExperimentConfig& c, const Context& ctx, const std::vector<Method>& methods,
                                      int rep, TraceWriter* trace, std::optional<PairedEstimate>* first_paired) {
  const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(rep), StageTag::repetition);
  std::optional<TraceSink> sink;
  if (trace) sink = trace->sink_for(rep);
  std::vector<ResultRow> rows;
  std::optional<std::uint64_t> budget = c.draws;
  for (Method m : methods) {
    const auto t0 = std::chrono::steady_clock::now();
    ResultRow row;
    switch (m) {
      case Method::paired: {
        PairedRun run = run_paired(c, ctx, seed, sink ? &*sink : nullptr);
        if (first_paired && rep == 0) *first_paired = run.estimate;
        if (!budget) budget = run.row.draws_total;
        row = run.row;
        break;
      }
      case Method::product:
      case Method::single:
        if (!budget) budget = run_paired(c, ctx, seed, nullptr).row.draws_total;
        row = m == Method::product ? run_product(c, ctx, seed, *budget) : run_single(c, ctx, seed, *budget);
        break;
      case Method::exact:
        row = exact_row(c, ctx);
        break;
    }
    row.rep = rep;
    row.seed = seed;
    row.epsilon = c.epsilon;
    row.wall_time = seconds_since(t0);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> run_all(const ExperimentConfig& c, const Context& ctx, const std::vector<Method>& methods) {
  std::unique_ptr<TraceWriter> trace;
  if (c.trace) trace = std::make_unique<TraceWriter>(*c.trace);
  std::optional<PairedEstimate> first;
  std::vector<std::vector<ResultRow>> per_rep(static_cast<std::size_t>(c.reps));
  const auto body = [&](std::size_t r) {
    per_rep[r] = run_repetition(c, ctx, methods, static_cast<int>(r), trace.get(), &first);
  };
  // A trace is written in repetition order.
  if (trace) {
    for (std::size_t r = 0; r < per_rep.size(); ++r) body(r);
  } else {
    parallel_for(per_rep.size(), body);
  }
  if (c.schedule_out && first) {
    std::ofstream out(*c.schedule_out);
    if (!out) throw std::invalid_argument("cannot write schedule file '" + *c.schedule_out + "'");
    out << schedule_to_json(first->schedule, first->params).dump(2) << '\n';
  }
  std::vector<ResultRow> rows;
  for (auto& v : per_rep) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

bool within_epsilon(const ResultRow& r) {
  return r.true_log_ratio && std::abs(r.log_estimate - *r.true_log_ratio) <= std::log1p(r.epsilon);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::paired: return "paired";
    case Method::product: return "product";
    case Method::single: return "single";
    case Method::exact: return "exact";
  }
  return "unknown";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::paired, Method::product, Method::single, Method::exact})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown method '" + s + "'");
}

void validate(const ExperimentConfig& c) {
  if (!(c.beta > 0.0) || !std::isfinite(c.beta)) throw std::invalid_argument("beta must be finite and positive");
  if (!(c.epsilon > 0.0) || c.epsilon > 1.0) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (c.reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (c.boost < 1 || c.boost % 2 == 0) throw std::invalid_argument("boost must be odd and positive");
  if (c.mcmc_steps < 0) throw std::invalid_argument("mcmc steps must be nonnegative");
  if (!(c.tv_budget >= 0.0) || c.tv_budget > 1.0) throw std::invalid_argument("tv budget must lie in [0, 1]");
  if (c.draws && *c.draws == 0) throw std::invalid_argument("draw budget must be positive");
  if (c.methods.empty()) throw std::invalid_argument("method list is empty");
  if (c.overrides.d && *c.overrides.d < 1) throw std::invalid_argument("override d must be at least 1");
  if (c.overrides.k && !(*c.overrides.k > 0.0)) throw std::invalid_argument("override k must be positive");
  if (c.overrides.eta && !(*c.overrides.eta > 0.0)) throw std::invalid_argument("override eta must be positive");
  if (c.overrides.replicates && *c.overrides.replicates == 0)
    throw std::invalid_argument("override r must be positive");
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json overrides = nlohmann::json::object();
  if (c.overrides.d) overrides["d"] = *c.overrides.d;
  if (c.overrides.k) overrides["k"] = *c.overrides.k;
  if (c.overrides.eta) overrides["eta"] = *c.overrides.eta;
  if (c.overrides.replicates) overrides["r"] = *c.overrides.replicates;
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : c.methods) methods.push_back(to_string(m));
  const auto opt_str = [](const std::optional<std::string>& s) { return s ? nlohmann::json(*s) : nlohmann::json(); };
  return {{"model", c.model},
          {"beta", c.beta},
          {"epsilon", c.epsilon},
          {"method", to_string(c.method)},
          {"sampler", c.sampler == SamplerKind::mcmc ? "mcmc" : "exact"},
          {"mcmc_steps", c.mcmc_steps},
          {"tv_budget", c.tv_budget},
          {"seed", c.seed},
          {"reps", c.reps},
          {"boost", c.boost},
          {"draws", c.draws ? nlohmann::json(*c.draws) : nlohmann::json()},
          {"schedule_in", opt_str(c.schedule_in)},
          {"schedule_out", opt_str(c.schedule_out)},
          {"trace", opt_str(c.trace)},
          {"overrides", overrides},
          {"q_hat", c.q_hat_convention == QHatConvention::per_run_mean ? "mean" : "raw"},
          {"methods", methods},
          {"out", opt_str(c.out)},
          {"format", format_name(c.format)}};
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  validate(config);
  const Context ctx = make_context(config);
  if (config.method == Method::exact) {
    ResultRow row = exact_row(config, ctx);
    row.epsilon = config.epsilon;
    return {row};
  }
  return run_all(config, ctx, {config.method});
}

Comparison compare_methods(const ExperimentConfig& config) {
  validate(config);
  const Context ctx = make_context(config);
  Comparison out;
  // Paired first so the baselines can match its draw count.
  std::vector<Method> methods = config.methods;
  std::stable_partition(methods.begin(), methods.end(), [](Method m) { return m == Method::paired; });
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  out.rows = run_all(config, ctx, methods);

  for (Method m : methods) {
    MethodSummary s;
    s.method = m;
    double draws = 0.0;
    double err = 0.0;
    int inside = 0;
    for (const auto& r : out.rows) {
      if (r.method != m) continue;
      ++s.reps;
      draws += static_cast<double>(r.draws_total);
      if (r.true_log_ratio) err += std::abs(r.log_estimate - *r.true_log_ratio);
      inside += within_epsilon(r);
    }
    s.mean_draws = draws / s.reps;
    if (ctx.true_log_ratio) {
      s.coverage = static_cast<double>(inside) / s.reps;
      s.mean_abs_log_error = err / s.reps;
    }
    out.summary.push_back(s);
  }

  out.regime = ctx.regime.regime;
  if (ctx.true_log_ratio) {
    out.q = std::abs(*ctx.true_log_ratio);
    out.q_exact = true;
  } else {
    const SamplerOracle fresh = ctx.oracle.with_fresh_counter();
    const SamplerOracle working =
        ctx.regime.shift == 0.0 ? fresh : fresh.rebased(shift_hamiltonian(ctx.model, ctx.regime.shift));
    const double q_hat = initial_estimate(working, config.beta, 5, config.seed).q_hat1;
    // The shifted process spans q + 2 n beta.
    out.q = ctx.regime.shift == 0.0 ? q_hat : std::abs(q_hat + ctx.regime.shift * config.beta);
  }
  out.draw_bound = out.regime == Regime::shifted_mixed
                       ? shifted_regime_draw_bound(out.q, ctx.regime.n, config.beta, config.epsilon)
                       : integer_regime_draw_bound(out.q, ctx.regime.n, config.epsilon);
  out.svv_bound = svv_draw_bound(std::max(out.q, 1.0), std::max(ctx.regime.n, 2), config.epsilon);
  return out;
}

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "rep,method,seed,estimate,log_estimate,epsilon,replicates,draws_total,schedule_length,true_log_ratio,"
        "within_epsilon,coupling_bound\n";
  for (const auto& r : rows) {
    os << r.rep << ',' << to_string(r.method) << ',' << r.seed << ',' << num(r.estimate) << ','
       << num(r.log_estimate) << ',' << num(r.epsilon) << ',' << r.replicates << ',' << r.draws_total << ','
       << r.schedule_length << ',' << (r.true_log_ratio ? num(*r.true_log_ratio) : "") << ','
       << (r.true_log_ratio ? (within_epsilon(r) ? "1" : "0") : "") << ','
       << (r.coupling_bound ? num(*r.coupling_bound) : "") << '\n';
  }
}

nlohmann::json rows_to_json(const std::vector<ResultRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"rep", r.rep},
                   {"method", to_string(r.method)},
                   {"seed", r.seed},
                   {"estimate", r.estimate},
                   {"log_estimate", r.log_estimate},
                   {"epsilon", r.epsilon},
                   {"replicates", r.replicates},
                   {"draws_total", r.draws_total},
                   {"schedule_length", r.schedule_length},
                   {"true_log_ratio", opt_json(r.true_log_ratio)},
                   {"coupling_bound", opt_json(r.coupling_bound)},
                   {"wall_time", r.wall_time}});
  }
  return arr;
}

void write_comparison_csv(std::ostream& os, const Comparison& c) {
  os << "method,reps,coverage,mean_draws,mean_abs_log_error,q,q_exact,regime,draw_bound,svv_bound\n";
  for (const auto& s : c.summary) {
    os << to_string(s.method) << ',' << s.reps << ',' << (s.coverage ? num(*s.coverage) : "") << ','
       << num(s.mean_draws) << ',' << (s.mean_abs_log_error ? num(*s.mean_abs_log_error) : "") << ',' << num(c.q)
       << ',' << (c.q_exact ? 1 : 0) << ',' << to_string(c.regime) << ',' << num(c.draw_bound) << ','
       << num(c.svv_bound) << '\n';
  }
}

nlohmann::json comparison_to_json(const Comparison& c) {
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : c.summary) {
    summary.push_back({{"method", to_string(s.method)},
                       {"reps", s.reps},
                       {"coverage", opt_json(s.coverage)},
                       {"mean_draws", s.mean_draws},
                       {"mean_abs_log_error", opt_json(s.mean_abs_log_error)}});
  }
  return {{"summary", summary},
          {"q", c.q},
          {"q_exact", c.q_exact},
          {"regime", to_string(c.regime)},
          {"draw_bound", c.draw_bound},
          {"svv_bound", c.svv_bound},
          {"rows", rows_to_json(c.rows)}};
}

namespace {

PairedOverrides parse_overrides(const std::string& spec) {
  PairedOverrides o;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("override '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "d") {
        o.d = std::stoi(value, &used);
      } else if (key == "k") {
        o.k = std::stod(value, &used);
      } else if (key == "eta") {
        o.eta = std::stod(value, &used);
      } else if (key == "r") {
        if (!value.empty() && value.front() == '-') throw std::invalid_argument(value);
        o.replicates = std::stoull(value, &used);
      } else {
        throw std::invalid_argument("unknown override key '" + key + "'");
      }
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad override '" + item + "'");
    }
  }
  return o;
}

void add_common_options(CLI::App& cmd, ExperimentConfig& c, std::string& sampler, std::string& format,
                        std::string& overrides, std::string& q_hat, std::optional<std::string>& out) {
  cmd.add_option("--model", c.model, "k2, path-N, cycle-N, grid-RxC, const-H[:S], table:FILE or FILE.json")
      ->capture_default_str();
  cmd.add_option("--beta", c.beta, "Inverse temperature")->capture_default_str();
  cmd.add_option("--epsilon", c.epsilon, "Relative accuracy target in (0, 1]")->capture_default_str();
  cmd.add_option("--sampler", sampler, "Sampling oracle")
      ->check(CLI::IsMember({"exact", "mcmc"}))
      ->capture_default_str();
  cmd.add_option("--mcmc-steps", c.mcmc_steps, "Metropolis sweeps per draw")->capture_default_str();
  cmd.add_option("--tv-budget", c.tv_budget, "Declared total-variation error per draw")->capture_default_str();
  cmd.add_option("--seed", c.seed, "Master seed")->capture_default_str();
  cmd.add_option("--reps", c.reps, "Independent repetitions")->capture_default_str();
  cmd.add_option("--boost", c.boost, "Median of this many (odd) paired runs")->capture_default_str();
  cmd.add_option("--draws", c.draws, "Draw budget per repetition for the baselines");
  cmd.add_option("--schedule-in", c.schedule_in, "Reuse a schedule JSON file");
  cmd.add_option("--schedule-out", c.schedule_out, "Write the first paired schedule as JSON");
  cmd.add_option("--trace", c.trace, "Write TPA steps as JSON lines");
  cmd.add_option("--expert-overrides", overrides, "d=..,k=..,eta=..,r=..");
  cmd.add_option("--q-hat", q_hat, "Initial estimate normalization")
      ->check(CLI::IsMember({"mean", "raw"}))
      ->capture_default_str();
  cmd.add_option("--out", out, "Output file (default stdout)");
  cmd.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void write_output(const ExperimentConfig& c, std::ostream& stdout_stream, const nlohmann::json& json_doc,
                  const std::function<void(std::ostream&)>& write_csv) {
  std::ofstream file;
  if (c.out) {
    file.open(*c.out);
    if (!file) throw std::invalid_argument("cannot write output file '" + *c.out + "'");
  }
  std::ostream& os = c.out ? static_cast<std::ostream&>(file) : stdout_stream;
  if (c.format == OutputFormat::json) {
    os << json_doc.dump(2) << '\n';
    return;
  }
  write_csv(os);
  if (c.out) {
    std::ofstream sidecar(*c.out + ".config.json");
    sidecar << config_to_json(c).dump(2) << '\n';
  }
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estimate Z(beta)/Z(0) with the paired product estimator and baselines"};
  app.require_subcommand(1);
  ExperimentConfig config;
  std::string sampler = "exact";
  std::string format = "csv";
  std::string overrides;
  std::string q_hat = "mean";
  std::string method = "paired";
  std::string methods = "paired,product,single";

  CLI::App* run = app.add_subcommand("run", "Run repeated estimates with one method");
  add_common_options(*run, config, sampler, format, overrides, q_hat, config.out);
  run->add_option("--method", method, "Estimator")
      ->check(CLI::IsMember({"paired", "product", "single", "exact"}))
      ->capture_default_str();
  CLI::App* compare = app.add_subcommand("compare", "Compare methods at matched draw budgets");
  add_common_options(*compare, config, sampler, format, overrides, q_hat, config.out);
  compare->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    config.sampler = sampler == "mcmc" ? SamplerKind::mcmc : SamplerKind::exact_enumeration;
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    config.q_hat_convention = q_hat == "raw" ? QHatConvention::raw_count : QHatConvention::per_run_mean;
    config.overrides = parse_overrides(overrides);
    config.method = method_from_string(method);
    config.methods.clear();
    std::stringstream ss(methods);
    for (std::string m; std::getline(ss, m, ',');)
      if (!m.empty()) config.methods.push_back(method_from_string(m));

    if (run->parsed()) {
      const auto rows = run_experiment(config);
      write_output(config, out, {{"config", config_to_json(config)}, {"results", rows_to_json(rows)}},
                   [&](std::ostream& os) { write_rows_csv(os, rows); });
    } else {
      const Comparison cmp = compare_methods(config);
      nlohmann::json doc = comparison_to_json(cmp);
      doc["config"] = config_to_json(config);
      write_output(config, out, doc, [&](std::ostream& os) {
        write_comparison_csv(os, cmp);
        if (config.out) {
          std::ofstream rows(*config.out + ".rows.csv");
          write_rows_csv(rows, cmp.rows);
        }
      });
    }
  } catch (const OracleInfeasible& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gibbs
