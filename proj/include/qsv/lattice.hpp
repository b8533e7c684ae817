#ifndef QSV_LATTICE_HPP
#define QSV_LATTICE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsv/hilbert.hpp"

namespace qsv {

bool commutes(const Projector& p, const Projector& q,
              double eps_alg = kEpsAlg);

/// Meet of commuting projectors: the product PQ.
Projector meet(const Projector& p, const Projector& q,
               double eps_alg = kEpsAlg);

/// Join of commuting projectors: P + Q - PQ. Reduces to the operator sum
/// when PQ = 0.
Projector join(const Projector& p, const Projector& q,
               double eps_alg = kEpsAlg);

/// Orthocomplement 1 - P; involutive.
Projector complement(const Projector& p);

/// Exclusive join: (p join q) meet complement(p meet q).
Projector xjoin(const Projector& p, const Projector& q,
                double eps_alg = kEpsAlg);

/// Partial order on commuting projectors: p <= q iff PQ = P.
bool leq(const Projector& p, const Projector& q, double eps_alg = kEpsAlg);

/// A finite set of mutually commuting, nontrivial projectors, labeled.
/// Pairwise order and orthogonality facts are recorded at construction.
class Context {
 public:
  static Context make(const std::vector<std::pair<std::string, Projector>>&
                          members,
                      double eps_alg = kEpsAlg);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  const std::map<std::string, Projector>& members() const { return members_; }
  const Projector& at(const std::string& label) const;
  std::vector<std::string> labels() const;

  bool orthogonal(const std::string& a, const std::string& b) const;
  bool below(const std::string& a, const std::string& b) const;

 private:
  Context() = default;
  Eigen::Index ambient_dim_ = 0;
  std::map<std::string, Projector> members_;
  std::map<std::pair<std::string, std::string>, bool> orthogonal_;
  std::map<std::pair<std::string, std::string>, bool> below_;
};

/// One maximal common eigenspace of a context, with the 0/1 assignment
/// each member takes on it.
struct EigenBlock {
  Subspace subspace;
  std::map<std::string, int> assignment;
};

/// Simultaneous block decomposition of a commuting projector set. Block
/// subspaces are pairwise orthogonal and their dimensions sum to the
/// ambient dimension; each member is the sum of its assigned-1 block
/// projectors. Blocks double as the admissible precisifications of the
/// context: each bit assignment is one way of making every member
/// proposition definite at once.
struct JointEigenstructure {
  std::vector<EigenBlock> blocks;
};

JointEigenstructure joint_eigenstructure(const Context& c,
                                         double eps_alg = kEpsAlg);

}  // namespace qsv

#endif  // QSV_LATTICE_HPP
