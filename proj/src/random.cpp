#include "qsv/random.hpp"

namespace qsv {

namespace {

Matrix gaussian_matrix(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

// Random 0/1 diagonal with at least one 0 and one 1.
Eigen::VectorXd nontrivial_pattern(Eigen::Index dim, Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  Eigen::VectorXd d(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) d(i) = bit(rng);
  } while (d.sum() == 0.0 || d.sum() == static_cast<double>(dim));
  return d;
}

Projector from_pattern(const Matrix& u, const Eigen::VectorXd& d) {
  return Projector::validate(u * d.asDiagonal() * u.adjoint());
}

}  // namespace

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(dim, rng));
  Matrix q = qr.householderQ();
  // fix the phase so Q is independent of the R sign convention
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex diag = r(i, i);
    if (std::abs(diag) > 0.0) q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

StateVector random_state(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = Complex(normal(rng), normal(rng));
    }
    norm = v.norm();
  } while (norm < 1e-6);
  return StateVector(v / norm);
}

Projector random_projector(Eigen::Index dim, Rng& rng) {
  return from_pattern(random_unitary(dim, rng), nontrivial_pattern(dim, rng));
}

std::pair<Projector, Projector> random_commuting_pair(Eigen::Index dim,
                                                      Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  return {from_pattern(u, nontrivial_pattern(dim, rng)),
          from_pattern(u, nontrivial_pattern(dim, rng))};
}

}  // namespace qsv
