#include "gibbs_partition/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gibbs {

namespace {

constexpr double kEndpointGuard = 1e-12;

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::integer_nonpositive: return "integer-nonpositive";
    case Regime::integer_nonnegative: return "integer-nonnegative";
    case Regime::shifted_mixed: return "shifted-mixed";
  }
  return "unknown";
}

Regime regime_from_string(const std::string& s) {
  if (s == "integer-nonpositive") return Regime::integer_nonpositive;
  if (s == "integer-nonnegative") return Regime::integer_nonnegative;
  if (s == "shifted-mixed") return Regime::shifted_mixed;
  throw std::invalid_argument("unknown regime '" + s + "'");
}

InitialEstimate initial_estimate(const SamplerOracle& oracle, double beta, int runs, std::uint64_t seed,
                                 QHatConvention convention, const TraceSink* trace) {
  if (runs < 1) throw std::invalid_argument("initial estimate needs at least one TPA run");
  const RatedProcess merged =
      tpa_process(oracle, beta, static_cast<double>(runs), seed, StageTag::initial_estimate, trace);
  InitialEstimate out;
  out.points = merged.process.points.size();
  out.draws_used = merged.draws_used;
  out.q_hat1 = convention == QHatConvention::per_run_mean
                   ? static_cast<double>(out.points) / static_cast<double>(runs)
                   : static_cast<double>(out.points);
  return out;
}

ScheduleParams select_params(double q_hat1, int n, Regime regime, double beta) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(q_hat1 >= 0.0)) throw std::invalid_argument("q_hat1 must be nonnegative");
  ScheduleParams p;
  p.q_hat1 = q_hat1;
  p.regime = regime;
  if (regime == Regime::shifted_mixed) {
    const double ln2 = std::numbers::ln2;
    p.eta = 2.0 / ln2;
    p.d = static_cast<int>(std::ceil(22.0 * std::log(200.0 / ln2 * (q_hat1 + 2.0 * n * beta + 1.0))));
    p.k = (2.0 / 3.0) * ln2 * p.d;
  } else {
    const double spread = 2.0 + std::log(2.0 * n);
    p.eta = 2.0 / spread;
    p.d = static_cast<int>(std::ceil(22.0 * std::log(100.0 * spread * (q_hat1 + 0.5))));
    p.k = (2.0 / 3.0) * p.d * spread;
  }
  p.d = std::max(p.d, 1);
  return p;
}

double poisson_lower_tail_bound(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("Poisson mean must be positive");
  return 2.0 / std::sqrt(std::numbers::pi * mu) * std::pow(2.0 / std::numbers::e, mu / 2.0);
}

CoolingSchedule::CoolingSchedule(std::vector<double> betas) : betas_(std::move(betas)) {
  if (betas_.size() < 2) throw std::invalid_argument("a cooling schedule needs at least two values");
  if (betas_.front() != 0.0) throw std::invalid_argument("a cooling schedule must start at 0");
  for (std::size_t i = 0; i + 1 < betas_.size(); ++i) {
    if (!(betas_[i] < betas_[i + 1]) || !std::isfinite(betas_[i + 1]))
      throw std::invalid_argument("cooling schedule values must be finite and strictly increasing");
  }
}

CoolingSchedule keep_every_dth(const PointProcess& process, int d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const double beta = process.beta_max;
  const auto& pts = process.points;
  const auto step = static_cast<std::size_t>(d);
  std::vector<double> kept;
  if (process.direction == Direction::downward) {
    for (std::size_t taken = step; taken <= pts.size(); taken += step) kept.push_back(pts[pts.size() - taken]);
    std::reverse(kept.begin(), kept.end());
  } else {
    for (std::size_t idx = step - 1; idx < pts.size(); idx += step) kept.push_back(pts[idx]);
  }
  std::vector<double> betas{0.0};
  for (double b : kept) {
    if (b > kEndpointGuard && b < beta - kEndpointGuard && b > betas.back()) betas.push_back(b);
  }
  betas.push_back(beta);
  return CoolingSchedule(std::move(betas));
}

ScheduleBuild well_balanced_schedule(const SamplerOracle& oracle, double beta, const ScheduleParams& params,
                                     std::uint64_t seed, const TraceSink* trace) {
  if (params.d < 1 || !(params.k > 0.0)) throw std::invalid_argument("schedule parameters must be positive");
  const RatedProcess rated = tpa_process(oracle, beta, params.k, seed, StageTag::schedule_runs, trace);
  ScheduleBuild out{keep_every_dth(rated.process, params.d), rated.draws_used, rated.process.points.size(), false};
  out.degenerate = out.schedule.intervals() == 1;
  return out;
}

nlohmann::json schedule_to_json(const CoolingSchedule& schedule, const std::optional<ScheduleParams>& params) {
  nlohmann::json doc;
  doc["betas"] = schedule.betas();
  if (params) {
    doc["params"] = {{"eta", params->eta},
                     {"d", params->d},
                     {"k", params->k},
                     {"q_hat1", params->q_hat1},
                     {"regime", to_string(params->regime)}};
  }
  return doc;
}

CoolingSchedule schedule_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("betas")) throw std::invalid_argument("schedule document needs \"betas\"");
  try {
    return CoolingSchedule(doc.at("betas").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed schedule document: ") + e.what());
  }
}

std::optional<ScheduleParams> schedule_params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("params")) return std::nullopt;
  const auto& p = doc.at("params");
  try {
    ScheduleParams out;
    out.eta = p.at("eta").get<double>();
    out.d = p.at("d").get<int>();
    out.k = p.at("k").get<double>();
    out.q_hat1 = p.at("q_hat1").get<double>();
    out.regime = regime_from_string(p.at("regime").get<std::string>());
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed schedule params: ") + e.what());
  }
}

}  // namespace gibbs
