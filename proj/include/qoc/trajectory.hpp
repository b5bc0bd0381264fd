#pragma once

#include "qoc/iso.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qoc {

/// N knot points of named real components. Each component stores one column
/// per knot (dim x N). Bounds and boundary conditions are attached by name.
/// The timestep is either a fixed scalar or the name of a component.
class NamedTrajectory {
 public:
  NamedTrajectory() = default;
  explicit NamedTrajectory(int N) : N_(N) {}

  int knots() const { return N_; }

  /// Adds (or replaces) a component; values must be dim x N.
  void set_component(const std::string& name, const RealMatrix& values);
  bool has_component(const std::string& name) const;
  const RealMatrix& component(const std::string& name) const;
  RealMatrix& component(const std::string& name);
  int dim_of(const std::string& name) const;
  /// Component names in insertion order.
  const std::vector<std::string>& names() const { return order_; }

  void set_bounds(const std::string& name, const RealVector& lower, const RealVector& upper);
  bool has_bounds(const std::string& name) const;
  std::pair<RealVector, RealVector> bounds(const std::string& name) const;

  void set_initial(const std::string& name, const RealVector& value);
  void set_final(const std::string& name, const RealVector& value);
  const std::map<std::string, RealVector>& initial_conditions() const { return initial_; }
  const std::map<std::string, RealVector>& final_conditions() const { return final_; }

  void set_fixed_timestep(double dt);
  void set_timestep_component(const std::string& name);
  bool has_free_timestep() const { return !timestep_name_.empty(); }
  const std::string& timestep_component() const { return timestep_name_; }
  double fixed_timestep() const { return fixed_dt_; }

  /// Timestep of interval k (k = 0..N-2).
  double timestep_at(int k) const;
  /// Cumulative knot times starting at 0; length N.
  std::vector<double> times() const;
  /// Total duration sum_k dt_k over the N-1 intervals.
  double duration() const;

  /// Lossless JSON round-trip of all components, bounds, and conditions.
  void save(const std::string& path) const;
  static NamedTrajectory load(const std::string& path);

 private:
  int N_ = 0;
  std::vector<std::string> order_;
  std::map<std::string, RealMatrix> comps_;
  std::map<std::string, std::pair<RealVector, RealVector>> bounds_;
  std::map<std::string, RealVector> initial_, final_;
  std::string timestep_name_;
  double fixed_dt_ = 0.0;
};

/// Geodesic on U(n) from the identity to U_goal: U_k = U_goal^{s_k} with
/// s_k = k/(N-1), computed through a Schur-based principal logarithm
/// (eigenphases in (-pi, pi]). An eigenvalue within 1e-12 of -1 nudges the
/// goal by a global phase e^{i 1e-8} first, which the trace loss ignores.
/// Returns N column-stacked iso unitaries.
std::vector<RealVector> unitary_geodesic(const ComplexMatrix& U_goal, int N);

/// Great-circle interpolation between two normalized states, with the goal
/// phase-aligned to the start. Returns N iso vectors.
std::vector<RealVector> state_geodesic(const ComplexVector& psi_init,
                                       const ComplexVector& psi_goal, int N);

/// Smooth random controls: d x N, zero at both endpoints, max |a| equal to
/// `amplitude` (zero signal stays zero). A low-frequency Fourier sine series
/// with seeded coefficients; deterministic given (d, N, amplitude, seed).
RealMatrix smooth_random_controls(int d, int N, double amplitude, std::uint64_t seed);

/// Forward differences of `values` against the interval timesteps; column k
/// holds (v_{k+1} - v_k)/dt_k and the last column repeats the previous one.
/// Chosen so the derivative-chain rows are satisfied exactly by the guess.
RealMatrix forward_difference(const RealMatrix& values, const std::vector<double>& dts);

/// Piecewise cubic Hermite evaluation of the control component `name` at
/// time t in [0, duration], matching knot values and first derivatives
/// (derivative component "d" + name). Throws if t is out of range.
RealVector cubic_interpolate(const NamedTrajectory& traj, const std::string& name, double t);

}  // namespace qoc
