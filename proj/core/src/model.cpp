#include "gibbs_partition/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace gibbs {

namespace {

constexpr int kMaxIsingVertices = 63;

bool is_integer(double v) { return std::isfinite(v) && std::nearbyint(v) == v; }

// ln sum_l counts[l] * exp(-beta * energies[l]) with a max shift.
double log_sum_exp_levels(const EnergySpectrum& s, double beta) {
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < s.energies.size(); ++l)
    top = std::max(top, std::log(s.counts[l]) - beta * s.energies[l]);
  double sum = 0.0;
  for (std::size_t l = 0; l < s.energies.size(); ++l)
    sum += std::exp(std::log(s.counts[l]) - beta * s.energies[l] - top);
  return top + std::log(sum);
}

}  // namespace

const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::nonpositive: return "nonpositive";
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::mixed: return "mixed";
  }
  return "unknown";
}

GibbsModel GibbsModel::from_table(std::vector<double> hamiltonian) {
  if (hamiltonian.empty()) throw std::invalid_argument("hamiltonian table is empty");
  GibbsModel m;
  m.num_states_ = hamiltonian.size();
  m.min_energy_ = std::numeric_limits<double>::infinity();
  m.max_energy_ = -std::numeric_limits<double>::infinity();
  for (double h : hamiltonian) {
    if (!std::isfinite(h)) throw std::invalid_argument("hamiltonian entries must be finite");
    m.min_energy_ = std::min(m.min_energy_, h);
    m.max_energy_ = std::max(m.max_energy_, h);
    m.base_integral_ = m.base_integral_ && is_integer(h);
  }
  m.table_ = std::make_shared<const std::vector<double>>(std::move(hamiltonian));
  return m;
}

GibbsModel GibbsModel::from_ising(IsingGraph graph) {
  if (graph.num_vertices < 1 || graph.num_vertices > kMaxIsingVertices)
    throw std::invalid_argument("ising model needs between 1 and 63 vertices");
  graph.neighbors.assign(static_cast<std::size_t>(graph.num_vertices), {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= graph.num_vertices || b >= graph.num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self loops are not allowed");
    if (!seen.insert(std::minmax(a, b)).second)
      throw std::invalid_argument("duplicate edge");
    graph.neighbors[static_cast<std::size_t>(a)].push_back(b);
    graph.neighbors[static_cast<std::size_t>(b)].push_back(a);
  }
  GibbsModel m;
  m.num_states_ = std::uint64_t{1} << graph.num_vertices;
  m.min_energy_ = -static_cast<double>(graph.edges.size());
  m.max_energy_ = 0.0;
  m.ising_ = std::make_shared<const IsingGraph>(std::move(graph));
  return m;
}

double GibbsModel::energy(StateIndex x) const {
  if (table_) return (*table_)[x] + offset_;
  int aligned = 0;
  for (auto [a, b] : ising_->edges)
    aligned += static_cast<int>(((x >> a) & 1U) == ((x >> b) & 1U));
  return -static_cast<double>(aligned) + offset_;
}

int GibbsModel::n_bound() const {
  const double extent = std::max(std::abs(min_energy()), std::abs(max_energy()));
  // Round away float noise before taking the ceiling.
  const double snapped = std::abs(extent - std::nearbyint(extent)) < 1e-9 ? std::nearbyint(extent) : extent;
  return std::max(1, static_cast<int>(std::ceil(snapped)));
}

SignClass GibbsModel::sign_class() const {
  if (max_energy() <= 0.0) return SignClass::nonpositive;
  if (min_energy() >= 0.0) return SignClass::nonnegative;
  return SignClass::mixed;
}

bool GibbsModel::integral() const { return base_integral_ && is_integer(offset_); }

std::string GibbsModel::describe() const {
  std::ostringstream os;
  if (ising_) {
    os << "ising(V=" << ising_->num_vertices << ", E=" << ising_->edges.size() << ")";
  } else {
    os << "table(states=" << num_states_ << ")";
  }
  if (offset_ != 0.0) os << " shifted by " << offset_;
  return os.str();
}

EnergySpectrum energy_spectrum(const GibbsModel& model) {
  if (!model.enumerable())
    throw OracleInfeasible("state space of " + std::to_string(model.num_states()) +
                           " states exceeds the enumeration guard (oracle only)");
  EnergySpectrum s;
  if (const IsingGraph* g = model.ising_graph()) {
    // Energies are -k + offset for k aligned edges.
    std::vector<double> by_aligned(g->edges.size() + 1, 0.0);
    for (StateIndex x = 0; x < model.num_states(); ++x) {
      std::size_t aligned = 0;
      for (auto [a, b] : g->edges) aligned += ((x >> a) & 1U) == ((x >> b) & 1U);
      by_aligned[aligned] += 1.0;
    }
    for (std::size_t k = by_aligned.size(); k-- > 0;) {
      if (by_aligned[k] == 0.0) continue;
      s.energies.push_back(-static_cast<double>(k) + model.offset());
      s.counts.push_back(by_aligned[k]);
    }
    return s;
  }
  std::vector<double> values(model.num_states());
  for (StateIndex x = 0; x < model.num_states(); ++x) values[x] = model.energy(x);
  std::sort(values.begin(), values.end());
  for (double v : values) {
    if (!s.energies.empty() && s.energies.back() == v) {
      s.counts.back() += 1.0;
    } else {
      s.energies.push_back(v);
      s.counts.push_back(1.0);
    }
  }
  return s;
}

double log_partition(const EnergySpectrum& spectrum, double beta) {
  return log_sum_exp_levels(spectrum, beta);
}

LogPartition log_partition_exact(const GibbsModel& model, double beta) {
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  return {beta, log_partition(energy_spectrum(model), beta)};
}

double mean_energy(const EnergySpectrum& spectrum, double beta) {
  const double lz = log_partition(spectrum, beta);
  double mean = 0.0;
  for (std::size_t l = 0; l < spectrum.energies.size(); ++l)
    mean += spectrum.energies[l] *
            std::exp(std::log(spectrum.counts[l]) - beta * spectrum.energies[l] - lz);
  return mean;
}

GibbsModel ising_model(const std::vector<std::pair<int, int>>& edges, int num_vertices) {
  IsingGraph g;
  g.num_vertices = num_vertices;
  g.edges = edges;
  return GibbsModel::from_ising(std::move(g));
}

GibbsModel path_graph_ising(int num_vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < num_vertices; ++v) edges.emplace_back(v, v + 1);
  return ising_model(edges, num_vertices);
}

GibbsModel cycle_graph_ising(int num_vertices) {
  if (num_vertices < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < num_vertices; ++v) edges.emplace_back(v, (v + 1) % num_vertices);
  return ising_model(edges, num_vertices);
}

GibbsModel grid_graph_ising(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return ising_model(edges, rows * cols);
}

GibbsModel constant_model(double h, std::uint64_t num_states) {
  if (num_states == 0) throw std::invalid_argument("constant model needs at least one state");
  if (num_states > kEnumerationLimit) throw std::invalid_argument("constant model is too large");
  return GibbsModel::from_table(std::vector<double>(num_states, h));
}

GibbsModel shift_hamiltonian(const GibbsModel& model, double c) {
  GibbsModel shifted = model;
  shifted.offset_ += c;
  return shifted;
}

double exact_q(const GibbsModel& model, double beta) {
  const EnergySpectrum s = energy_spectrum(model);
  return std::abs(log_partition(s, beta) - log_partition(s, 0.0));
}

}  // namespace gibbs
