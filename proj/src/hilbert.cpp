#include "qsv/hilbert.hpp"

#include <cmath>

namespace qsv {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= eps;
}

namespace {

// Eigenvalue threshold for rank counting; projector spectra sit at 0 and 1.
constexpr double kRankThreshold = 0.5;

Eigen::SelfAdjointEigenSolver<Matrix> decompose(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw DecompositionFailureError("eigendecomposition did not converge");
  }
  return solver;
}

}  // namespace

Projector Projector::validate(const Matrix& m, double eps_alg) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError(m.rows(), m.cols());
  }
  if (m.size() == 0) {
    throw Error("empty matrix");
  }
  if (!m.allFinite()) {
    throw Error("matrix has non-finite entries");
  }
  const double herm_residual = max_abs(m - m.adjoint());
  if (herm_residual > eps_alg) {
    throw NotHermitianError(herm_residual);
  }
  const double idem_residual = max_abs(m * m - m);
  if (idem_residual > eps_alg) {
    throw NotIdempotentError(idem_residual);
  }
  auto solver = decompose(m);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (solver.eigenvalues()(i) > kRankThreshold) ++rank;
  }
  return Projector(m, rank);
}

Projector Projector::zero(Eigen::Index dim) {
  return Projector(Matrix::Zero(dim, dim), 0);
}

Projector Projector::identity(Eigen::Index dim) {
  return Projector(Matrix::Identity(dim, dim), dim);
}

StateVector::StateVector(Vector amplitudes, double eps_alg)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error("empty state vector");
  }
  if (!amplitudes_.allFinite()) {
    throw Error("state vector has non-finite entries");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > eps_alg) {
    throw NormalizationError(norm);
  }
}

Subspace::Subspace(Eigen::Index ambient_dim, Matrix basis, double eps_alg)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != ambient_dim_) {
    throw DimensionMismatchError(basis_.rows(), ambient_dim_);
  }
  if (basis_.cols() > ambient_dim_) {
    throw Error("basis larger than ambient dimension");
  }
  if (basis_.cols() > 0) {
    const Matrix gram = basis_.adjoint() * basis_;
    if (!approx_equal(gram, Matrix::Identity(basis_.cols(), basis_.cols()),
                      eps_alg)) {
      throw Error("basis vectors are not orthonormal");
    }
  }
}

namespace {

// Columns of the eigenvector matrix whose eigenvalue is on the given side
// of the 0/1 split.
Subspace eigenspace_basis(const Projector& p, bool eigenvalue_one,
                          double eps_alg) {
  auto solver = decompose(p.matrix());
  const Eigen::Index n = p.dim();
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if ((solver.eigenvalues()(i) > 0.5) == eigenvalue_one) ++count;
  }
  Matrix basis(n, count);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if ((solver.eigenvalues()(i) > 0.5) == eigenvalue_one) {
      basis.col(k++) = solver.eigenvectors().col(i);
    }
  }
  return Subspace(n, std::move(basis), eps_alg);
}

}  // namespace

Subspace range_basis(const Projector& p, double eps_alg) {
  return eigenspace_basis(p, true, eps_alg);
}

Subspace kernel_basis(const Projector& p, double eps_alg) {
  return eigenspace_basis(p, false, eps_alg);
}

bool member(const StateVector& v, const Subspace& s, double eps_member) {
  if (v.dim() != s.ambient_dim()) {
    throw DimensionMismatchError(v.dim(), s.ambient_dim());
  }
  if (s.count() == 0) return false;
  const Vector projected = s.basis() * (s.basis().adjoint() * v.amplitudes());
  return (v.amplitudes() - projected).norm() <= eps_member;
}

double expectation(const StateVector& v, const Projector& p) {
  if (v.dim() != p.dim()) {
    throw DimensionMismatchError(v.dim(), p.dim());
  }
  const double value =
      (v.amplitudes().adjoint() * p.matrix() * v.amplitudes())(0).real();
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

}  // namespace qsv
