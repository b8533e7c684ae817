#ifndef QSV_HILBERT_HPP
#define QSV_HILBERT_HPP

#include <Eigen/Dense>
#include <complex>

#include "qsv/errors.hpp"

namespace qsv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerances: algebraic residuals an order tighter than membership
// distances, so validation noise never flips a membership verdict.
inline constexpr double kEpsAlg = 1e-10;
inline constexpr double kEpsMember = 1e-9;

// Largest entry modulus; the norm used for all algebraic residual checks.
double max_abs(const Matrix& m);

bool approx_equal(const Matrix& a, const Matrix& b, double eps = kEpsAlg);

/// Hermitian idempotent operator on C^dim. Construction goes through
/// validate(), which enforces both algebraic properties and computes the
/// rank from the spectrum (eigenvalues of a projector cluster at 0 and 1,
/// so thresholding at 0.5 is maximally separated).
class Projector {
 public:
  static Projector validate(const Matrix& m, double eps_alg = kEpsAlg);
  static Projector zero(Eigen::Index dim);
  static Projector identity(Eigen::Index dim);

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  Eigen::Index rank() const { return rank_; }

  bool is_zero(double eps = kEpsAlg) const { return rank_ == 0; }
  bool is_identity(double eps = kEpsAlg) const { return rank_ == dim(); }

 private:
  Projector(Matrix m, Eigen::Index rank)
      : matrix_(std::move(m)), rank_(rank) {}
  Matrix matrix_;
  Eigen::Index rank_;
};

/// Normalized pure state. The zero vector is rejected here, by the
/// normalization invariant.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes, double eps_alg = kEpsAlg);

  const Vector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

 private:
  Vector amplitudes_;
};

/// Subspace of C^ambient_dim given by an orthonormal basis (possibly
/// empty). Basis vectors are columns of a dim x count matrix.
class Subspace {
 public:
  Subspace(Eigen::Index ambient_dim, Matrix basis, double eps_alg = kEpsAlg);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index count() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

 private:
  Eigen::Index ambient_dim_;
  Matrix basis_;
};

/// Orthonormal basis of the eigenvalue-1 eigenspace of p.
Subspace range_basis(const Projector& p, double eps_alg = kEpsAlg);

/// Orthonormal basis of the eigenvalue-0 eigenspace; equals the range of
/// the complement.
Subspace kernel_basis(const Projector& p, double eps_alg = kEpsAlg);

/// True iff v is within eps_member of its orthogonal projection onto s.
/// Phase-invariant: membership of e^{i theta} v equals membership of v.
bool member(const StateVector& v, const Subspace& s,
            double eps_member = kEpsMember);

/// <v|P|v>, clamped to [0,1] (tiny excursions within eps_alg only).
double expectation(const StateVector& v, const Projector& p);

}  // namespace qsv

#endif  // QSV_HILBERT_HPP
