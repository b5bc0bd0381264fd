#pragma once

#include "qoc/iso.hpp"

#include <array>
#include <vector>

namespace qoc {

/// Coefficients c_0..c_m of the diagonal (m, m) Pade approximant of exp,
/// where order = 2m. The forward operator is F = sum_j c_j (dt G)^j and the
/// backward operator is B = sum_j c_j (-dt G)^j, so exp(dt G) ~ B^-1 F.
struct PadeCoefficients {
  int order = 4;
  int half = 2;                 // m = order / 2
  std::array<double, 5> c{};    // c[0..half]
};

/// Supported orders: 4, 6, 8. Throws std::invalid_argument otherwise.
PadeCoefficients pade_coefficients(int order);

/// Implicit Pade dynamics residual
///   P(x_next, x, a, dt) = B(a, dt) x_next - F(a, dt) x
/// evaluated per iso column, with analytic derivatives with respect to both
/// states, the controls, and the timestep. States are column-stacked iso
/// vectors (length 2n per column; n columns for a unitary, one for a state).
class PadeIntegrator {
 public:
  PadeIntegrator(const QuantumSystem& system, int order = 4);

  const QuantumSystem& system() const { return *system_; }
  int order() const { return coeff_.order; }

  /// B(a, dt): backward half-step operator, 2n x 2n.
  RealMatrix backward_operator(const RealVector& a, double dt) const;
  /// F(a, dt): forward half-step operator, 2n x 2n.
  RealMatrix forward_operator(const RealVector& a, double dt) const;

  /// B x_next - F x for stacked iso columns. Throws on size mismatch and
  /// requires dt > 0.
  RealVector residual(const RealVector& x_next, const RealVector& x,
                      const RealVector& a, double dt) const;

  struct Jacobian {
    RealMatrix wrt_next;   // B; applies block-diagonally to each column
    RealMatrix wrt_curr;   // -F
    RealMatrix wrt_controls;  // (2n * ncols) x d
    RealVector wrt_dt;        // 2n * ncols
  };

  /// All four Jacobian blocks of the residual. The state blocks are returned
  /// as the 2n x 2n operators applied per column; control and dt blocks are
  /// dense over the stacked rows.
  Jacobian jacobian(const RealVector& x_next, const RealVector& x,
                    const RealVector& a, double dt) const;

 private:
  const QuantumSystem* system_;
  PadeCoefficients coeff_;

  // Powers G^0..G^m of the assembled generator.
  std::vector<RealMatrix> powers(const RealVector& a) const;
};

/// Matrix exponential of a real square matrix by scaling-and-squaring with
/// the diagonal (4,4) Pade approximant, squaring until |A|/2^s <= 0.5.
RealMatrix exp_real(const RealMatrix& A);

/// Exact-exponential rollout: applies exp(G(a_k) dt_k) to the stacked iso
/// columns for each step. Verification oracle; never used inside
/// optimization. Returns all N = steps+1 states including the initial one.
std::vector<RealVector> exp_rollout(const QuantumSystem& system,
                                    const std::vector<RealVector>& controls,
                                    const std::vector<double>& timesteps,
                                    const RealVector& init_columns);

}  // namespace qoc
