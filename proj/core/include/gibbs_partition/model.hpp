#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gibbs {

/// Index of a configuration in 0..num_states()-1.
using StateIndex = std::uint64_t;

/// Largest state space the enumeration-based routines will touch.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

/// Thrown when an exact (enumeration) routine is asked to handle a state
/// space above kEnumerationLimit.
class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SignClass { nonpositive, nonnegative, mixed };

const char* to_string(SignClass s);

/// Ising interaction graph. Spin of vertex v in state x is +1 when bit v of
/// x is set and -1 otherwise.
struct IsingGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> neighbors;
};

/// A Gibbs family over a finite indexed state space. Cheap to copy; the
/// underlying energy data is shared and immutable.
class GibbsModel {
 public:
  /// Model with H(x) = hamiltonian[x]. Throws std::invalid_argument on an
  /// empty table or non-finite entries.
  static GibbsModel from_table(std::vector<double> hamiltonian);

  /// Ising model on `graph`, H(x) = -#{edges with equal spins}.
  static GibbsModel from_ising(IsingGraph graph);

  std::uint64_t num_states() const { return num_states_; }
  bool enumerable() const { return num_states_ <= kEnumerationLimit; }

  double energy(StateIndex x) const;

  /// Bounds on H over the state space. Exact for table models; for Ising
  /// models the range is [-|E|, 0] shifted by the offset.
  double min_energy() const { return min_energy_ + offset_; }
  double max_energy() const { return max_energy_ + offset_; }

  /// Smallest positive integer n with |H(x)| <= n for all x.
  int n_bound() const;
  SignClass sign_class() const;
  /// True when every H(x) is an integer.
  bool integral() const;

  /// Constant added to every energy by shift_hamiltonian.
  double offset() const { return offset_; }

  /// Non-null for models built by from_ising.
  const IsingGraph* ising_graph() const { return ising_.get(); }

  /// True when both models share energy data and differ at most by a shift.
  bool same_family(const GibbsModel& other) const {
    return table_ == other.table_ && ising_ == other.ising_;
  }

  std::string describe() const;

 private:
  friend GibbsModel shift_hamiltonian(const GibbsModel& model, double c);

  GibbsModel() = default;

  std::shared_ptr<const std::vector<double>> table_;
  std::shared_ptr<const IsingGraph> ising_;
  std::uint64_t num_states_ = 0;
  double min_energy_ = 0.0;
  double max_energy_ = 0.0;
  bool base_integral_ = true;
  double offset_ = 0.0;
};

/// ln Z at one parameter value.
struct LogPartition {
  double beta = 0.0;
  double value = 0.0;
};

/// Distinct energy levels with their multiplicities, ascending by energy.
struct EnergySpectrum {
  std::vector<double> energies;
  std::vector<double> counts;
};

/// Enumerates the model. Throws OracleInfeasible above kEnumerationLimit.
EnergySpectrum energy_spectrum(const GibbsModel& model);

/// ln sum_x exp(-beta H(x)), by log-sum-exp over the enumerated spectrum.
/// Throws OracleInfeasible above kEnumerationLimit.
LogPartition log_partition_exact(const GibbsModel& model, double beta);

/// Same as log_partition_exact but reuses a precomputed spectrum.
double log_partition(const EnergySpectrum& spectrum, double beta);

/// E[H(X)] for X ~ pi_beta.
double mean_energy(const EnergySpectrum& spectrum, double beta);

/// Ising model on an explicit edge list. Rejects self loops, duplicate and
/// out-of-range edges, and graphs with more than 63 vertices.
GibbsModel ising_model(const std::vector<std::pair<int, int>>& edges, int num_vertices);

GibbsModel path_graph_ising(int num_vertices);
GibbsModel cycle_graph_ising(int num_vertices);
GibbsModel grid_graph_ising(int rows, int cols);

/// H(x) = h on `num_states` states.
GibbsModel constant_model(double h, std::uint64_t num_states);

/// H'(x) = H(x) + c. pi_beta is unchanged and ln Z'(beta) = ln Z(beta) - beta c.
GibbsModel shift_hamiltonian(const GibbsModel& model, double c);

/// Nonnegative length of the z-interval: |ln Z(beta) - ln Z(0)|.
double exact_q(const GibbsModel& model, double beta);

}  // namespace gibbs
