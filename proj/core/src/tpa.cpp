#include "gibbs_partition/tpa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gibbs_partition/parallel.hpp"

namespace gibbs {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("TPA needs a finite beta > 0");
}

// -ln(U)/H for H != 0; U is drawn on the open interval so the log is finite.
double tpa_increment(double u, double h) { return -std::log(u) / h; }

}  // namespace

Direction tpa_direction(const GibbsModel& model) {
  switch (model.sign_class()) {
    case SignClass::nonpositive: return Direction::downward;
    case SignClass::nonnegative: return Direction::upward;
    case SignClass::mixed: break;
  }
  throw std::invalid_argument("TPA needs a Hamiltonian of constant sign; shift the model first");
}

PointProcess tpa_run_nonpositive(const SamplerOracle& oracle, double beta, Engine& rng,
                                 const TraceSink* trace, std::uint64_t run_id) {
  check_beta(beta);
  if (oracle.model().max_energy() > 0.0) throw std::invalid_argument("tpa_run_nonpositive needs H <= 0");
  PointProcess out{{}, 1.0, beta, Direction::downward};
  double b = beta;
  for (;;) {
    const double h = oracle.model().energy(oracle.draw(b, rng));
    const double u = uniform_open(rng);
    const double next = h == 0.0 ? -std::numeric_limits<double>::infinity() : b + tpa_increment(u, h);
    if (next > b) throw std::logic_error("downward TPA step did not decrease b");
    b = next;
    if (trace && *trace) (*trace)({run_id, b, h, u});
    if (!(b > 0.0)) break;
    out.points.push_back(b);
  }
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

PointProcess tpa_run_nonnegative(const SamplerOracle& oracle, double beta, Engine& rng,
                                 const TraceSink* trace, std::uint64_t run_id) {
  check_beta(beta);
  if (oracle.model().min_energy() < 0.0) throw std::invalid_argument("tpa_run_nonnegative needs H >= 0");
  PointProcess out{{}, 1.0, beta, Direction::upward};
  double b = 0.0;
  for (;;) {
    const double h = oracle.model().energy(oracle.draw(b, rng));
    const double u = uniform_open(rng);
    const double next = h == 0.0 ? std::numeric_limits<double>::infinity() : b + tpa_increment(u, h);
    if (next < b) throw std::logic_error("upward TPA step did not increase b");
    b = next;
    if (trace && *trace) (*trace)({run_id, b, h, u});
    if (!(b < beta)) break;
    out.points.push_back(b);
  }
  return out;
}

PointProcess tpa_run(const SamplerOracle& oracle, double beta, Engine& rng, const TraceSink* trace,
                     std::uint64_t run_id) {
  return tpa_direction(oracle.model()) == Direction::downward
             ? tpa_run_nonpositive(oracle, beta, rng, trace, run_id)
             : tpa_run_nonnegative(oracle, beta, rng, trace, run_id);
}

PointProcess merge_runs(std::span<const PointProcess> runs) {
  if (runs.empty()) throw std::invalid_argument("merge_runs needs at least one run");
  PointProcess out{{}, 0.0, runs.front().beta_max, runs.front().direction};
  std::size_t total = 0;
  for (const auto& r : runs) {
    if (r.beta_max != out.beta_max) throw std::invalid_argument("merged runs must share beta_max");
    if (r.direction != out.direction) throw std::invalid_argument("merged runs must share direction");
    out.rate += r.rate;
    total += r.points.size();
  }
  out.points.reserve(total);
  for (const auto& r : runs) out.points.insert(out.points.end(), r.points.begin(), r.points.end());
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointProcess thin(const PointProcess& process, double target_rate, Engine& rng) {
  if (!(target_rate > 0.0)) throw std::invalid_argument("thinning rate must be positive");
  if (target_rate > process.rate) throw std::invalid_argument("thinning cannot raise the rate");
  PointProcess out{{}, target_rate, process.beta_max, process.direction};
  if (target_rate == process.rate) {
    out.points = process.points;
    return out;
  }
  const double keep = target_rate / process.rate;
  for (double p : process.points) {
    if (uniform_open(rng) < keep) out.points.push_back(p);
  }
  return out;
}

RatedProcess tpa_process(const SamplerOracle& oracle, double beta, double rate, std::uint64_t seed,
                         StageTag tag, const TraceSink* trace) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("process rate must be positive");
  const auto runs = static_cast<std::size_t>(std::ceil(rate));
  std::vector<PointProcess> outputs(runs);
  // A shared trace sink is not thread safe; tracing forces serial runs.
  auto one = [&](std::size_t i) {
    Engine rng = derive_stream(seed, i, tag);
    outputs[i] = tpa_run(oracle, beta, rng, trace, i);
  };
  if (trace && *trace) {
    for (std::size_t i = 0; i < runs; ++i) one(i);
  } else {
    parallel_for(runs, one);
  }

  RatedProcess out;
  out.runs = runs;
  for (const auto& r : outputs) out.draws_used += r.points.size() + 1;
  out.process = merge_runs(outputs);
  if (rate < out.process.rate) {
    Engine rng = derive_stream(seed, static_cast<std::uint64_t>(tag), StageTag::thinning);
    out.process = thin(out.process, rate, rng);
  }
  return out;
}

}  // namespace gibbs
