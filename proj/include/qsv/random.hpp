#ifndef QSV_RANDOM_HPP
#define QSV_RANDOM_HPP

#include <random>

#include "qsv/hilbert.hpp"

namespace qsv {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5174764C6F676963ULL;

/// Haar-ish random unitary: orthonormalization of a Gaussian complex matrix.
Matrix random_unitary(Eigen::Index dim, Rng& rng);

StateVector random_state(Eigen::Index dim, Rng& rng);

/// Nontrivial random projector: random unitary applied to a random 0/1
/// diagonal pattern with at least one 0 and one 1.
Projector random_projector(Eigen::Index dim, Rng& rng);

/// Pair of commuting projectors sharing one random eigenbasis.
std::pair<Projector, Projector> random_commuting_pair(Eigen::Index dim,
                                                      Rng& rng);

}  // namespace qsv

#endif  // QSV_RANDOM_HPP
