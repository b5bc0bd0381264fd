#include "qoc/trajectory.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace qoc {

using nlohmann::json;

void NamedTrajectory::set_component(const std::string& name, const RealMatrix& values) {
  if (N_ == 0) N_ = static_cast<int>(values.cols());
  if (values.cols() != N_)
    throw std::invalid_argument("component '" + name + "' must have " + std::to_string(N_) +
                                " knots");
  if (!comps_.count(name)) order_.push_back(name);
  comps_[name] = values;
}

bool NamedTrajectory::has_component(const std::string& name) const { return comps_.count(name) > 0; }

const RealMatrix& NamedTrajectory::component(const std::string& name) const {
  auto it = comps_.find(name);
  if (it == comps_.end()) throw std::out_of_range("no component '" + name + "'");
  return it->second;
}

RealMatrix& NamedTrajectory::component(const std::string& name) {
  auto it = comps_.find(name);
  if (it == comps_.end()) throw std::out_of_range("no component '" + name + "'");
  return it->second;
}

int NamedTrajectory::dim_of(const std::string& name) const {
  return static_cast<int>(component(name).rows());
}

void NamedTrajectory::set_bounds(const std::string& name, const RealVector& lower,
                                 const RealVector& upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("bounds size mismatch");
  if ((lower.array() > upper.array()).any())
    throw std::invalid_argument("bounds for '" + name + "' must satisfy lower <= upper");
  bounds_[name] = {lower, upper};
}

bool NamedTrajectory::has_bounds(const std::string& name) const { return bounds_.count(name) > 0; }

std::pair<RealVector, RealVector> NamedTrajectory::bounds(const std::string& name) const {
  auto it = bounds_.find(name);
  if (it == bounds_.end()) throw std::out_of_range("no bounds for '" + name + "'");
  return it->second;
}

void NamedTrajectory::set_initial(const std::string& name, const RealVector& value) {
  initial_[name] = value;
}

void NamedTrajectory::set_final(const std::string& name, const RealVector& value) {
  final_[name] = value;
}

void NamedTrajectory::set_fixed_timestep(double dt) {
  if (!(dt > 0)) throw std::invalid_argument("fixed timestep must be positive");
  fixed_dt_ = dt;
  timestep_name_.clear();
}

void NamedTrajectory::set_timestep_component(const std::string& name) {
  if (!has_component(name)) throw std::invalid_argument("timestep component '" + name + "' missing");
  timestep_name_ = name;
  fixed_dt_ = 0.0;
}

double NamedTrajectory::timestep_at(int k) const {
  if (k < 0 || k >= N_ - 1) throw std::out_of_range("timestep index");
  if (timestep_name_.empty()) return fixed_dt_;
  return component(timestep_name_)(0, k);
}

std::vector<double> NamedTrajectory::times() const {
  std::vector<double> t(N_, 0.0);
  for (int k = 1; k < N_; ++k) t[k] = t[k - 1] + timestep_at(k - 1);
  return t;
}

double NamedTrajectory::duration() const {
  double T = 0.0;
  for (int k = 0; k < N_ - 1; ++k) T += timestep_at(k);
  return T;
}

namespace {

json vector_to_json(const RealVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

RealVector vector_from_json(const json& a) {
  RealVector v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
  return v;
}

}  // namespace

void NamedTrajectory::save(const std::string& path) const {
  json j;
  j["version"] = 1;
  j["N"] = N_;
  json comps = json::object();
  for (const auto& name : order_) {
    const RealMatrix& m = comps_.at(name);
    json rows = json::array();
    for (int k = 0; k < N_; ++k) rows.push_back(vector_to_json(m.col(k)));
    comps[name] = {{"dim", m.rows()}, {"data", rows}};
  }
  j["components"] = comps;
  json b = json::object();
  for (const auto& [name, lu] : bounds_)
    b[name] = {{"lower", vector_to_json(lu.first)}, {"upper", vector_to_json(lu.second)}};
  j["bounds"] = b;
  json ic = json::object(), fc = json::object();
  for (const auto& [name, v] : initial_) ic[name] = vector_to_json(v);
  for (const auto& [name, v] : final_) fc[name] = vector_to_json(v);
  j["initial_conditions"] = ic;
  j["final_conditions"] = fc;
  if (!timestep_name_.empty())
    j["timestep"] = {{"component", timestep_name_}};
  else
    j["timestep"] = {{"fixed", fixed_dt_}};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(1) << "\n";
}

NamedTrajectory NamedTrajectory::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed trajectory file '" + path + "': " + e.what());
  }
  if (!j.contains("version") || j["version"].get<int>() != 1)
    throw std::runtime_error("trajectory file '" + path + "': unsupported version");
  NamedTrajectory traj(j.at("N").get<int>());
  for (const auto& [name, spec] : j.at("components").items()) {
    const int dim = spec.at("dim").get<int>();
    const auto& rows = spec.at("data");
    if (static_cast<int>(rows.size()) != traj.knots())
      throw std::runtime_error("component '" + name + "' has wrong knot count");
    RealMatrix m(dim, traj.knots());
    for (int k = 0; k < traj.knots(); ++k) {
      RealVector col = vector_from_json(rows[k]);
      if (col.size() != dim) throw std::runtime_error("component '" + name + "' has ragged data");
      m.col(k) = col;
    }
    traj.set_component(name, m);
  }
  if (j.contains("bounds"))
    for (const auto& [name, lu] : j.at("bounds").items())
      traj.set_bounds(name, vector_from_json(lu.at("lower")), vector_from_json(lu.at("upper")));
  if (j.contains("initial_conditions"))
    for (const auto& [name, v] : j.at("initial_conditions").items())
      traj.set_initial(name, vector_from_json(v));
  if (j.contains("final_conditions"))
    for (const auto& [name, v] : j.at("final_conditions").items())
      traj.set_final(name, vector_from_json(v));
  const auto& ts = j.at("timestep");
  if (ts.contains("component"))
    traj.set_timestep_component(ts.at("component").get<std::string>());
  else
    traj.set_fixed_timestep(ts.at("fixed").get<double>());
  return traj;
}

std::vector<RealVector> unitary_geodesic(const ComplexMatrix& U_goal, int N) {
  if (N < 2) throw std::invalid_argument("geodesic needs at least 2 knots");
  if (!is_unitary(U_goal)) throw std::invalid_argument("geodesic target is not unitary");
  const int n = static_cast<int>(U_goal.rows());

  ComplexMatrix target = U_goal;
  {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(target, false);
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()[i] + std::complex<double>(1.0, 0.0)) <= 1e-12) {
        target *= std::exp(std::complex<double>(0.0, 1e-8));
        break;
      }
  }

  // Schur form of a unitary matrix is diagonal; Q stays unitary, which keeps
  // every interpolated knot unitary by construction.
  Eigen::ComplexSchur<ComplexMatrix> schur(target);
  const ComplexMatrix& Q = schur.matrixU();
  ComplexVector phases(n);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> lam = schur.matrixT()(i, i);
    phases[i] = std::complex<double>(0.0, std::atan2(lam.imag(), lam.real()));
  }

  std::vector<RealVector> knots;
  knots.reserve(N);
  for (int k = 0; k < N; ++k) {
    const double s = double(k) / double(N - 1);
    ComplexVector d(n);
    for (int i = 0; i < n; ++i) d[i] = std::exp(phases[i] * s);
    ComplexMatrix Uk = Q * d.asDiagonal() * Q.adjoint();
    knots.push_back(iso_columns(Uk));
  }
  return knots;
}

std::vector<RealVector> state_geodesic(const ComplexVector& psi_init,
                                       const ComplexVector& psi_goal, int N) {
  if (N < 2) throw std::invalid_argument("geodesic needs at least 2 knots");
  if (psi_init.size() != psi_goal.size()) throw std::invalid_argument("state size mismatch");
  std::complex<double> ov = psi_init.dot(psi_goal);  // <init|goal>
  ComplexVector goal = psi_goal;
  if (std::abs(ov) > 1e-14) goal *= std::conj(ov) / std::abs(ov);  // phase-align
  const double c = std::clamp(std::abs(ov), 0.0, 1.0);
  const double theta = std::acos(c);

  std::vector<RealVector> knots;
  knots.reserve(N);
  for (int k = 0; k < N; ++k) {
    const double s = double(k) / double(N - 1);
    ComplexVector psi;
    if (theta < 1e-9) {
      psi = psi_init + s * (goal - psi_init);
    } else {
      psi = (std::sin((1 - s) * theta) * psi_init + std::sin(s * theta) * goal) / std::sin(theta);
    }
    psi.normalize();
    knots.push_back(iso_vec(psi));
  }
  return knots;
}

RealMatrix smooth_random_controls(int d, int N, double amplitude, std::uint64_t seed) {
  if (d < 0 || N < 2) throw std::invalid_argument("smooth_random_controls: bad shape");
  RealMatrix a = RealMatrix::Zero(d, N);
  if (amplitude == 0.0 || d == 0) return a;
  constexpr int kTerms = 5;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < d; ++i) {
    double coef[kTerms];
    for (int m = 0; m < kTerms; ++m) coef[m] = gauss(rng) / double(m + 1);
    for (int k = 0; k < N; ++k) {
      const double s = double(k) / double(N - 1);
      double f = 0.0;
      for (int m = 0; m < kTerms; ++m) f += coef[m] * std::sin(M_PI * double(m + 1) * s);
      a(i, k) = f;
    }
    const double peak = a.row(i).cwiseAbs().maxCoeff();
    if (peak > 0) a.row(i) *= amplitude / peak;
    a(i, 0) = 0.0;
    a(i, N - 1) = 0.0;
  }
  return a;
}

RealMatrix forward_difference(const RealMatrix& values, const std::vector<double>& dts) {
  const int N = static_cast<int>(values.cols());
  if (static_cast<int>(dts.size()) != N - 1)
    throw std::invalid_argument("forward_difference: need N-1 timesteps");
  RealMatrix dv(values.rows(), N);
  for (int k = 0; k < N - 1; ++k) dv.col(k) = (values.col(k + 1) - values.col(k)) / dts[k];
  if (N >= 2) dv.col(N - 1) = dv.col(N - 2);
  return dv;
}

RealVector cubic_interpolate(const NamedTrajectory& traj, const std::string& name, double t) {
  const RealMatrix& a = traj.component(name);
  const RealMatrix& da = traj.component("d" + name);
  const auto times = traj.times();
  const double T = times.back();
  if (t < -1e-12 || t > T + 1e-12)
    throw std::out_of_range("interpolation time out of [0, duration]");
  t = std::clamp(t, 0.0, T);

  int k = int(std::upper_bound(times.begin(), times.end(), t) - times.begin()) - 1;
  k = std::clamp(k, 0, traj.knots() - 2);
  const double h = times[k + 1] - times[k];
  const double s = (t - times[k]) / h;

  // Hermite basis on [0, 1].
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * a.col(k) + h10 * h * da.col(k) + h01 * a.col(k + 1) + h11 * h * da.col(k + 1);
}

}  // namespace qoc
