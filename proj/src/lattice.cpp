#include "qsv/lattice.hpp"

#include <algorithm>

namespace qsv {

bool commutes(const Projector& p, const Projector& q, double eps_alg) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatchError(p.dim(), q.dim());
  }
  return max_abs(p.matrix() * q.matrix() - q.matrix() * p.matrix()) <=
         eps_alg;
}

namespace {

void require_commuting(const Projector& p, const Projector& q,
                       double eps_alg) {
  if (!commutes(p, q, eps_alg)) {
    throw NonCommutingError("lhs", "rhs");
  }
}

}  // namespace

Projector meet(const Projector& p, const Projector& q, double eps_alg) {
  require_commuting(p, q, eps_alg);
  return Projector::validate(p.matrix() * q.matrix(), eps_alg);
}

Projector join(const Projector& p, const Projector& q, double eps_alg) {
  require_commuting(p, q, eps_alg);
  return Projector::validate(
      p.matrix() + q.matrix() - p.matrix() * q.matrix(), eps_alg);
}

Projector complement(const Projector& p) {
  return Projector::validate(Matrix::Identity(p.dim(), p.dim()) - p.matrix());
}

Projector xjoin(const Projector& p, const Projector& q, double eps_alg) {
  return meet(join(p, q, eps_alg), complement(meet(p, q, eps_alg)), eps_alg);
}

bool leq(const Projector& p, const Projector& q, double eps_alg) {
  require_commuting(p, q, eps_alg);
  return approx_equal(p.matrix() * q.matrix(), p.matrix(), eps_alg);
}

Context Context::make(
    const std::vector<std::pair<std::string, Projector>>& members,
    double eps_alg) {
  if (members.empty()) {
    throw Error("context must be nonempty");
  }
  Context c;
  c.ambient_dim_ = members.front().second.dim();
  for (const auto& [label, p] : members) {
    if (label.empty()) {
      throw Error("empty context label");
    }
    if (p.dim() != c.ambient_dim_) {
      throw DimensionMismatchError(p.dim(), c.ambient_dim_);
    }
    if (p.is_zero() || p.is_identity()) {
      throw TrivialMemberError(label);
    }
    if (!c.members_.emplace(label, p).second) {
      throw Error("duplicate context label: " + label);
    }
  }
  for (const auto& [la, pa] : c.members_) {
    for (const auto& [lb, pb] : c.members_) {
      if (!commutes(pa, pb, eps_alg)) {
        throw NonCommutingError(la, lb);
      }
      c.orthogonal_[{la, lb}] =
          max_abs(pa.matrix() * pb.matrix()) <= eps_alg;
      c.below_[{la, lb}] =
          approx_equal(pa.matrix() * pb.matrix(), pa.matrix(), eps_alg);
    }
  }
  return c;
}

const Projector& Context::at(const std::string& label) const {
  auto it = members_.find(label);
  if (it == members_.end()) {
    throw Error("no such context member: " + label);
  }
  return it->second;
}

std::vector<std::string> Context::labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (const auto& [label, p] : members_) out.push_back(label);
  return out;
}

bool Context::orthogonal(const std::string& a, const std::string& b) const {
  return orthogonal_.at({a, b});
}

bool Context::below(const std::string& a, const std::string& b) const {
  return below_.at({a, b});
}

JointEigenstructure joint_eigenstructure(const Context& c, double eps_alg) {
  const Eigen::Index n = c.ambient_dim();

  struct Block {
    Matrix basis;  // n x k, orthonormal columns
    std::map<std::string, int> assignment;
  };
  std::vector<Block> blocks;
  blocks.push_back({Matrix::Identity(n, n), {}});

  // Refine each block by every member in turn. A block is invariant under
  // the next member because the member commutes with everything already
  // processed, so the restriction B^dagger P B is itself a projector and
  // its eigenvalues split cleanly at 0 and 1.
  for (const auto& [label, p] : c.members()) {
    std::vector<Block> refined;
    for (const auto& block : blocks) {
      const Matrix restricted =
          block.basis.adjoint() * p.matrix() * block.basis;
      Eigen::SelfAdjointEigenSolver<Matrix> solver(restricted);
      if (solver.info() != Eigen::Success) {
        throw DecompositionFailureError(
            "block eigendecomposition did not converge");
      }
      const Eigen::Index k = block.basis.cols();
      for (Eigen::Index i = 0; i < k; ++i) {
        const double ev = solver.eigenvalues()(i);
        // unreachable for valid commuting projectors; kept as a guard
        if (ev > 0.25 && ev < 0.75) {
          throw DecompositionFailureError(
              "block restriction is not a projector");
        }
      }
      for (int bit : {0, 1}) {
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
          if ((solver.eigenvalues()(i) > 0.5) == (bit == 1)) ++count;
        }
        if (count == 0) continue;
        Matrix sub(n, count);
        Eigen::Index j = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
          if ((solver.eigenvalues()(i) > 0.5) == (bit == 1)) {
            sub.col(j++) = block.basis * solver.eigenvectors().col(i);
          }
        }
        Block next{std::move(sub), block.assignment};
        next.assignment[label] = bit;
        refined.push_back(std::move(next));
      }
    }
    blocks = std::move(refined);
  }

  JointEigenstructure out;
  for (auto& block : blocks) {
    out.blocks.push_back(
        {Subspace(n, std::move(block.basis), eps_alg),
         std::move(block.assignment)});
  }
  return out;
}

}  // namespace qsv
