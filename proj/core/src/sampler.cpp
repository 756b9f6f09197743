#include "gibbs_partition/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gibbs {

namespace {

bool metropolis_accept(double b, double delta_h, Engine& rng) {
  if (delta_h <= 0.0) return true;
  return uniform_open(rng) < std::exp(-b * delta_h);
}

// Aligned minus misaligned neighbours of v; equals H(x with v flipped) - H(x).
int flip_delta(const IsingGraph& g, StateIndex x, int v) {
  const auto spin = (x >> v) & 1U;
  int delta = 0;
  for (int u : g.neighbors[static_cast<std::size_t>(v)]) delta += ((x >> u) & 1U) == spin ? 1 : -1;
  return delta;
}

}  // namespace

const char* to_string(SamplerKind k) {
  return k == SamplerKind::exact_enumeration ? "exact" : "mcmc";
}

std::size_t DrawCounter::bucket_of(double b) {
  if (!(b > 0.0)) return 0;
  const double slot = std::floor(b / kBucketWidth);
  if (slot >= static_cast<double>(kBuckets - 1)) return kBuckets - 1;
  return static_cast<std::size_t>(slot);
}

SamplerOracle SamplerOracle::exact(GibbsModel model) {
  SamplerOracle o(std::move(model));
  o.kind_ = SamplerKind::exact_enumeration;

  if (!o.model_.enumerable())
    throw OracleInfeasible("exact sampler needs an enumerable model (oracle only)");
  std::vector<std::pair<double, StateIndex>> by_energy(o.model_.num_states());
  for (StateIndex x = 0; x < o.model_.num_states(); ++x) by_energy[x] = {o.model_.energy(x), x};
  std::sort(by_energy.begin(), by_energy.end());

  auto levels = std::make_shared<Levels>();
  levels->states.reserve(by_energy.size());
  for (std::size_t i = 0; i < by_energy.size(); ++i) {
    if (i == 0 || by_energy[i].first != by_energy[i - 1].first) {
      levels->energies.push_back(by_energy[i].first);
      levels->offsets.push_back(i);
    }
    levels->states.push_back(by_energy[i].second);
  }
  levels->offsets.push_back(by_energy.size());
  for (std::size_t l = 0; l + 1 < levels->offsets.size(); ++l)
    levels->log_counts.push_back(std::log(static_cast<double>(levels->offsets[l + 1] - levels->offsets[l])));

  o.levels_ = std::move(levels);
  o.counter_ = std::make_shared<DrawCounter>();
  return o;
}

SamplerOracle SamplerOracle::mcmc(GibbsModel model, int sweeps, double tv_budget_per_draw) {
  if (model.ising_graph() == nullptr) throw std::invalid_argument("mcmc sampler requires an Ising model");
  if (sweeps < 0) throw std::invalid_argument("mcmc sweeps must be nonnegative");
  if (!(tv_budget_per_draw >= 0.0)) throw std::invalid_argument("tv budget must be nonnegative");
  SamplerOracle o(std::move(model));
  o.kind_ = SamplerKind::mcmc;
  o.sweeps_ = sweeps;
  o.tv_budget_ = tv_budget_per_draw;
  o.counter_ = std::make_shared<DrawCounter>();
  return o;
}

StateIndex SamplerOracle::draw(double b, Engine& rng) const {
  return kind_ == SamplerKind::exact_enumeration ? draw_exact(*this, b, rng) : draw_mcmc(*this, b, rng);
}

SamplerOracle SamplerOracle::rebased(const GibbsModel& shifted) const {
  if (!model_.same_family(shifted))
    throw std::invalid_argument("rebased oracle must wrap a shift of the same model");
  SamplerOracle o = *this;
  o.model_ = shifted;
  if (levels_) {
    auto levels = std::make_shared<Levels>(*levels_);
    const double c = shifted.offset() - model_.offset();
    for (double& e : levels->energies) e += c;
    o.levels_ = std::move(levels);
  }
  return o;
}

SamplerOracle SamplerOracle::with_fresh_counter() const {
  SamplerOracle o = *this;
  o.counter_ = std::make_shared<DrawCounter>();
  return o;
}

StateIndex draw_exact(const SamplerOracle& oracle, double b, Engine& rng) {
  if (oracle.kind_ != SamplerKind::exact_enumeration || !oracle.levels_)
    throw std::logic_error("draw_exact called on a non-exact oracle");
  if (!std::isfinite(b)) throw std::invalid_argument("sampling parameter must be finite");
  const auto& lv = *oracle.levels_;
  const std::size_t n = lv.energies.size();

  // Level weights counts_l * exp(-b E_l), normalized by the largest term.
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < n; ++l) top = std::max(top, lv.log_counts[l] - b * lv.energies[l]);
  thread_local std::vector<double> cdf;
  cdf.resize(n);
  double acc = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    acc += std::exp(lv.log_counts[l] - b * lv.energies[l] - top);
    cdf[l] = acc;
  }
  const double u = uniform_open(rng) * acc;
  std::size_t level = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  level = std::min(level, n - 1);

  const std::size_t lo = lv.offsets[level];
  const std::size_t size = lv.offsets[level + 1] - lo;
  std::size_t pick = 0;
  if (size > 1) pick = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  oracle.counter_->record(b);
  return lv.states[lo + pick];
}

StateIndex draw_mcmc(const SamplerOracle& oracle, double b, Engine& rng) {
  if (oracle.kind_ != SamplerKind::mcmc) throw std::logic_error("draw_mcmc called on a non-mcmc oracle");
  if (!std::isfinite(b)) throw std::invalid_argument("sampling parameter must be finite");
  const IsingGraph& g = *oracle.model_.ising_graph();
  StateIndex x = rng();
  if (g.num_vertices < 64) x &= (StateIndex{1} << g.num_vertices) - 1;
  for (int s = 0; s < oracle.sweeps_; ++s) {
    for (int v = 0; v < g.num_vertices; ++v) {
      if (metropolis_accept(b, flip_delta(g, x, v), rng)) x ^= StateIndex{1} << v;
    }
  }
  oracle.counter_->record(b);
  return x;
}

std::vector<double> gibbs_distribution(const GibbsModel& model, double b) {
  const double lz = log_partition_exact(model, b).value;
  std::vector<double> p(model.num_states());
  for (StateIndex x = 0; x < model.num_states(); ++x) p[x] = std::exp(-b * model.energy(x) - lz);
  return p;
}

std::vector<double> mcmc_draw_distribution(const GibbsModel& model, double b, int sweeps) {
  const IsingGraph* g = model.ising_graph();
  if (g == nullptr) throw std::invalid_argument("mcmc distribution requires an Ising model");
  if (!model.enumerable()) throw OracleInfeasible("mcmc distribution needs an enumerable model");
  const std::size_t states = model.num_states();
  std::vector<double> p(states, 1.0 / static_cast<double>(states));
  std::vector<double> next(states);
  for (int s = 0; s < sweeps; ++s) {
    for (int v = 0; v < g->num_vertices; ++v) {
      std::fill(next.begin(), next.end(), 0.0);
      for (StateIndex x = 0; x < states; ++x) {
        const int dh = flip_delta(*g, x, v);
        const double accept = dh <= 0 ? 1.0 : std::exp(-b * dh);
        next[x ^ (StateIndex{1} << v)] += p[x] * accept;
        next[x] += p[x] * (1.0 - accept);
      }
      p.swap(next);
    }
  }
  return p;
}

double mcmc_total_variation(const GibbsModel& model, double b, int sweeps) {
  const auto approx = mcmc_draw_distribution(model, b, sweeps);
  const auto target = gibbs_distribution(model, b);
  double tv = 0.0;
  for (std::size_t x = 0; x < approx.size(); ++x) tv += std::abs(approx[x] - target[x]);
  return 0.5 * tv;
}

double coupling_failure_bound(double tv_budget_per_draw, std::uint64_t total_draws) {
  if (!(tv_budget_per_draw >= 0.0)) throw std::invalid_argument("tv budget must be nonnegative");
  return std::min(1.0, static_cast<double>(total_draws) * tv_budget_per_draw);
}

}  // namespace gibbs
