#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace qoc {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerance for accepting a matrix as Hermitian (max entrywise |H - H^dag|).
inline constexpr double kHermitianTol = 1e-10;
/// Tolerance for accepting a matrix as unitary (max entrywise |U^dag U - I|).
inline constexpr double kUnitaryTol = 1e-8;

/// Stacks (Re psi, Im psi) into a real vector of length 2n.
RealVector iso_vec(const ComplexVector& psi);

/// Inverse of iso_vec.
ComplexVector from_iso_vec(const RealVector& v);

/// Column-stacked iso form of an n x m complex matrix: iso_vec of each
/// column, concatenated (length 2n*m).
RealVector iso_columns(const ComplexMatrix& M);

/// Inverse of iso_columns; `n` is the Hilbert dimension (rows of the result).
ComplexMatrix from_iso_columns(const RealVector& v, int n);

/// Applies the iso of multiplication by -i: (re, im) -> (im, -re), acting
/// per column of a stacked iso vector with Hilbert dimension n.
RealVector apply_minus_i(const RealVector& v, int n);

/// Real generator G(H) = iso(-iH) = [[Im H, Re H], [-Re H, Im H]].
/// Throws std::invalid_argument for non-square input.
RealMatrix generator(const ComplexMatrix& H);

/// True iff max entrywise |H - H^dag| <= tol.
bool is_hermitian(const ComplexMatrix& H, double tol = kHermitianTol);

/// True iff max entrywise |U^dag U - I| <= tol.
bool is_unitary(const ComplexMatrix& U, double tol = kUnitaryTol);

/// A controllable quantum system in iso form: drift generator G(H0) and one
/// generator G(Hj) per real drive. All generators are 2n x 2n.
struct QuantumSystem {
  int n = 0;                        // Hilbert dimension
  RealMatrix drift;                 // G(H0)
  std::vector<RealMatrix> drives;   // G(Hj)
  std::vector<std::string> level_labels;
  std::vector<std::string> drive_labels;

  int iso_dim() const { return 2 * n; }
  int num_drives() const { return static_cast<int>(drives.size()); }

  /// Builds the iso system from Hermitian Hamiltonians. Inputs must pass
  /// is_hermitian; violations are a hard error.
  static QuantumSystem from_hamiltonians(const ComplexMatrix& H0,
                                         const std::vector<ComplexMatrix>& Hs,
                                         std::vector<std::string> drive_labels = {},
                                         std::vector<std::string> level_labels = {});

  /// G(a) = G(H0) + sum_j a_j G(Hj). Throws on dimension mismatch.
  RealMatrix generator_at(const RealVector& a) const;
};

}  // namespace qoc
