#include "qoc/pade.hpp"

#include <cmath>
#include <stdexcept>

namespace qoc {

PadeCoefficients pade_coefficients(int order) {
  if (order != 4 && order != 6 && order != 8)
    throw std::invalid_argument("unsupported Pade order (use 4, 6, or 8)");
  PadeCoefficients pc;
  pc.order = order;
  pc.half = order / 2;
  // c_j = c_{j-1} * (m - j + 1) / (j * (2m - j + 1))
  pc.c[0] = 1.0;
  for (int j = 1; j <= pc.half; ++j)
    pc.c[j] = pc.c[j - 1] * double(pc.half - j + 1) / (double(j) * double(order - j + 1));
  return pc;
}

PadeIntegrator::PadeIntegrator(const QuantumSystem& system, int order)
    : system_(&system), coeff_(pade_coefficients(order)) {}

std::vector<RealMatrix> PadeIntegrator::powers(const RealVector& a) const {
  const int dim = system_->iso_dim();
  std::vector<RealMatrix> P;
  P.reserve(coeff_.half + 1);
  P.push_back(RealMatrix::Identity(dim, dim));
  P.push_back(system_->generator_at(a));
  for (int j = 2; j <= coeff_.half; ++j) P.push_back(P[j - 1] * P[1]);
  return P;
}

namespace {

RealMatrix combine(const std::vector<RealMatrix>& P, const PadeCoefficients& pc, double dt) {
  RealMatrix M = P[0];
  double w = 1.0;
  for (int j = 1; j <= pc.half; ++j) {
    w *= dt;
    M.noalias() += (pc.c[j] * w) * P[j];
  }
  return M;
}

}  // namespace

RealMatrix PadeIntegrator::backward_operator(const RealVector& a, double dt) const {
  return combine(powers(a), coeff_, -dt);
}

RealMatrix PadeIntegrator::forward_operator(const RealVector& a, double dt) const {
  return combine(powers(a), coeff_, dt);
}

RealVector PadeIntegrator::residual(const RealVector& x_next, const RealVector& x,
                                    const RealVector& a, double dt) const {
  const int dim = system_->iso_dim();
  if (x_next.size() != x.size() || x.size() % dim != 0)
    throw std::invalid_argument("residual: state size mismatch");
  if (!(dt > 0)) throw std::invalid_argument("residual: dt must be positive");
  const auto ncols = x.size() / dim;
  const auto P = powers(a);
  const RealMatrix B = combine(P, coeff_, -dt);
  const RealMatrix F = combine(P, coeff_, dt);
  RealVector r(x.size());
  for (Eigen::Index c = 0; c < ncols; ++c)
    r.segment(dim * c, dim).noalias() =
        B * x_next.segment(dim * c, dim) - F * x.segment(dim * c, dim);
  return r;
}

PadeIntegrator::Jacobian PadeIntegrator::jacobian(const RealVector& x_next, const RealVector& x,
                                                  const RealVector& a, double dt) const {
  const int dim = system_->iso_dim();
  if (x_next.size() != x.size() || x.size() % dim != 0)
    throw std::invalid_argument("jacobian: state size mismatch");
  if (a.size() != system_->num_drives())
    throw std::invalid_argument("jacobian: control size mismatch");
  const auto ncols = x.size() / dim;
  const int d = system_->num_drives();
  const auto P = powers(a);

  Jacobian J;
  J.wrt_next = combine(P, coeff_, -dt);
  J.wrt_curr = -combine(P, coeff_, dt);

  // dB/ddt = sum_j c_j j (-1)^j dt^{j-1} G^j, and F analogue with +1 signs.
  {
    RealMatrix dB = RealMatrix::Zero(dim, dim);
    RealMatrix dF = RealMatrix::Zero(dim, dim);
    double w = 1.0;  // dt^{j-1}
    for (int j = 1; j <= coeff_.half; ++j) {
      const double cj = coeff_.c[j] * double(j) * w;
      dF.noalias() += cj * P[j];
      dB.noalias() += (j % 2 == 0 ? cj : -cj) * P[j];
      w *= dt;
    }
    J.wrt_dt.resize(x.size());
    for (Eigen::Index c = 0; c < ncols; ++c)
      J.wrt_dt.segment(dim * c, dim).noalias() =
          dB * x_next.segment(dim * c, dim) - dF * x.segment(dim * c, dim);
  }

  // dB/da_m = sum_j c_j (-dt)^j S_j(m) with S_j(m) = sum_r G^r G_m G^{j-1-r}.
  J.wrt_controls.resize(x.size(), d);
  for (int m = 0; m < d; ++m) {
    const RealMatrix& Gm = system_->drives[m];
    RealMatrix dB = RealMatrix::Zero(dim, dim);
    RealMatrix dF = RealMatrix::Zero(dim, dim);
    double w = 1.0;  // dt^j
    for (int j = 1; j <= coeff_.half; ++j) {
      w *= dt;
      RealMatrix S = RealMatrix::Zero(dim, dim);
      for (int r = 0; r < j; ++r) S.noalias() += P[r] * Gm * P[j - 1 - r];
      dF.noalias() += (coeff_.c[j] * w) * S;
      dB.noalias() += (coeff_.c[j] * (j % 2 == 0 ? w : -w)) * S;
    }
    for (Eigen::Index c = 0; c < ncols; ++c)
      J.wrt_controls.col(m).segment(dim * c, dim).noalias() =
          dB * x_next.segment(dim * c, dim) - dF * x.segment(dim * c, dim);
  }
  return J;
}

RealMatrix exp_real(const RealMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("exp_real: matrix must be square");
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();  // induced inf-norm
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const RealMatrix As = A / std::ldexp(1.0, s);

  // Diagonal (4,4) Pade on the scaled matrix.
  const auto pc = pade_coefficients(8);
  const int dim = static_cast<int>(A.rows());
  std::vector<RealMatrix> P;
  P.push_back(RealMatrix::Identity(dim, dim));
  P.push_back(As);
  for (int j = 2; j <= pc.half; ++j) P.push_back(P[j - 1] * As);
  RealMatrix N = P[0];
  RealMatrix D = P[0];
  for (int j = 1; j <= pc.half; ++j) {
    N.noalias() += pc.c[j] * P[j];
    D.noalias() += (j % 2 == 0 ? pc.c[j] : -pc.c[j]) * P[j];
  }
  RealMatrix R = D.partialPivLu().solve(N);
  for (int i = 0; i < s; ++i) R = R * R;
  return R;
}

std::vector<RealVector> exp_rollout(const QuantumSystem& system,
                                    const std::vector<RealVector>& controls,
                                    const std::vector<double>& timesteps,
                                    const RealVector& init_columns) {
  if (controls.size() != timesteps.size())
    throw std::invalid_argument("exp_rollout: controls and timesteps must align");
  const int dim = system.iso_dim();
  if (init_columns.size() % dim != 0)
    throw std::invalid_argument("exp_rollout: initial state size mismatch");
  const auto ncols = init_columns.size() / dim;

  std::vector<RealVector> states;
  states.reserve(controls.size() + 1);
  states.push_back(init_columns);
  for (size_t k = 0; k < controls.size(); ++k) {
    const RealMatrix E = exp_real(system.generator_at(controls[k]) * timesteps[k]);
    RealVector next(init_columns.size());
    for (Eigen::Index c = 0; c < ncols; ++c)
      next.segment(dim * c, dim).noalias() = E * states.back().segment(dim * c, dim);
    states.push_back(std::move(next));
  }
  return states;
}

}  // namespace qoc
