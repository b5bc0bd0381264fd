#include "qoc/iso.hpp"

#include <stdexcept>

namespace qoc {

RealVector iso_vec(const ComplexVector& psi) {
  const auto n = psi.size();
  RealVector v(2 * n);
  v.head(n) = psi.real();
  v.tail(n) = psi.imag();
  return v;
}

ComplexVector from_iso_vec(const RealVector& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("iso vector length must be even");
  const auto n = v.size() / 2;
  ComplexVector psi(n);
  psi.real() = v.head(n);
  psi.imag() = v.tail(n);
  return psi;
}

RealVector iso_columns(const ComplexMatrix& M) {
  const auto n = M.rows();
  const auto m = M.cols();
  RealVector v(2 * n * m);
  for (Eigen::Index c = 0; c < m; ++c) {
    v.segment(2 * n * c, n) = M.col(c).real();
    v.segment(2 * n * c + n, n) = M.col(c).imag();
  }
  return v;
}

ComplexMatrix from_iso_columns(const RealVector& v, int n) {
  if (n <= 0 || v.size() % (2 * n) != 0)
    throw std::invalid_argument("stacked iso vector length must be a multiple of 2n");
  const auto m = v.size() / (2 * n);
  ComplexMatrix M(n, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    M.col(c).real() = v.segment(2 * n * c, n);
    M.col(c).imag() = v.segment(2 * n * c + n, n);
  }
  return M;
}

RealVector apply_minus_i(const RealVector& v, int n) {
  if (n <= 0 || v.size() % (2 * n) != 0)
    throw std::invalid_argument("stacked iso vector length must be a multiple of 2n");
  const auto m = v.size() / (2 * n);
  RealVector out(v.size());
  for (Eigen::Index c = 0; c < m; ++c) {
    out.segment(2 * n * c, n) = v.segment(2 * n * c + n, n);
    out.segment(2 * n * c + n, n) = -v.segment(2 * n * c, n);
  }
  return out;
}

RealMatrix generator(const ComplexMatrix& H) {
  if (H.rows() != H.cols()) throw std::invalid_argument("generator: matrix must be square");
  const auto n = H.rows();
  RealMatrix G(2 * n, 2 * n);
  G.topLeftCorner(n, n) = H.imag();
  G.topRightCorner(n, n) = H.real();
  G.bottomLeftCorner(n, n) = -H.real();
  G.bottomRightCorner(n, n) = H.imag();
  return G;
}

bool is_hermitian(const ComplexMatrix& H, double tol) {
  if (H.rows() != H.cols()) return false;
  return (H - H.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& U, double tol) {
  if (U.rows() != U.cols()) return false;
  ComplexMatrix I = ComplexMatrix::Identity(U.rows(), U.cols());
  return (U.adjoint() * U - I).cwiseAbs().maxCoeff() <= tol;
}

QuantumSystem QuantumSystem::from_hamiltonians(const ComplexMatrix& H0,
                                               const std::vector<ComplexMatrix>& Hs,
                                               std::vector<std::string> drive_labels,
                                               std::vector<std::string> level_labels) {
  if (H0.rows() != H0.cols()) throw std::invalid_argument("drift Hamiltonian must be square");
  if (!is_hermitian(H0)) throw std::invalid_argument("drift Hamiltonian is not Hermitian");
  QuantumSystem sys;
  sys.n = static_cast<int>(H0.rows());
  sys.drift = generator(H0);
  sys.drives.reserve(Hs.size());
  for (size_t j = 0; j < Hs.size(); ++j) {
    if (Hs[j].rows() != H0.rows() || Hs[j].cols() != H0.cols())
      throw std::invalid_argument("drive Hamiltonian dimension mismatch");
    if (!is_hermitian(Hs[j]))
      throw std::invalid_argument("drive Hamiltonian " + std::to_string(j) + " is not Hermitian");
    sys.drives.push_back(generator(Hs[j]));
  }
  sys.drive_labels = std::move(drive_labels);
  sys.level_labels = std::move(level_labels);
  return sys;
}

RealMatrix QuantumSystem::generator_at(const RealVector& a) const {
  if (a.size() != num_drives())
    throw std::invalid_argument("generator_at: control vector length must equal drive count");
  RealMatrix G = drift;
  for (int j = 0; j < num_drives(); ++j) G.noalias() += a[j] * drives[j];
  return G;
}

}  // namespace qoc
