#include "doctest.h"
#include "generators.hpp"
#include "qsv/lattice.hpp"
#include "qsv/logic.hpp"

using namespace qsv;

TEST_CASE("commutation of the spin projectors") {
  const Projector zp = builtin_projector("z+");
  const Projector zm = builtin_projector("z-");
  const Projector xp = builtin_projector("x+");
  CHECK(commutes(zp, zm));
  CHECK_FALSE(commutes(zp, xp));
  CHECK(commutes(xp, xp));
  CHECK_THROWS_AS(commutes(zp, Projector::identity(3)),
                  DimensionMismatchError);
}

TEST_CASE("meet, join and exclusive join on the x context") {
  const Projector xp = builtin_projector("x+");
  const Projector xm = builtin_projector("x-");
  CHECK(meet(xp, xm).is_zero());
  CHECK(join(xp, xm).is_identity());
  CHECK(xjoin(xp, xm).is_identity());
}

TEST_CASE("meet identities") {
  const Projector zp = builtin_projector("z+");
  CHECK(approx_equal(meet(zp, Projector::identity(2)).matrix(), zp.matrix()));
  CHECK(approx_equal(meet(zp, zp).matrix(), zp.matrix()));
  CHECK_THROWS_AS(meet(zp, builtin_projector("x+")), NonCommutingError);
}

TEST_CASE("join identities") {
  const Projector zp = builtin_projector("z+");
  CHECK(approx_equal(join(zp, Projector::zero(2)).matrix(), zp.matrix()));
  CHECK(approx_equal(join(zp, zp).matrix(), zp.matrix()));
  CHECK_THROWS_AS(join(zp, builtin_projector("x-")), NonCommutingError);
}

TEST_CASE("complement swaps the x projectors and is involutive") {
  const Projector xp = builtin_projector("x+");
  CHECK(approx_equal(complement(xp).matrix(),
                     builtin_projector("x-").matrix()));
  CHECK(complement(Projector::identity(2)).is_zero());
  CHECK(approx_equal(complement(complement(xp)).matrix(), xp.matrix()));
}

TEST_CASE("xjoin identities") {
  const Projector zp = builtin_projector("z+");
  CHECK(xjoin(zp, zp).is_zero());
  CHECK(approx_equal(xjoin(zp, Projector::zero(2)).matrix(), zp.matrix()));
}

TEST_CASE("partial order on commuting projectors") {
  const Projector zp = builtin_projector("z+");
  const Projector zm = builtin_projector("z-");
  CHECK(leq(zp, complement(zm)));
  CHECK_FALSE(leq(Projector::identity(2), zp));
  CHECK(leq(Projector::zero(2), zp));
}

TEST_CASE("meet-form and join-form order conditions agree") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    auto [p, q] = random_commuting_pair(dim, rng);
    const bool meet_form = leq(p, q);
    const bool join_form = approx_equal(join(p, q).matrix(), q.matrix());
    CHECK(meet_form == join_form);
  }
}

TEST_CASE("context construction and recorded facts") {
  const Projector zp = builtin_projector("z+");
  const Projector zm = builtin_projector("z-");
  const Context oz = Context::make({{"z+", zp}, {"z-", zm}});
  CHECK(oz.ambient_dim() == 2);
  CHECK(oz.labels() == std::vector<std::string>{"z+", "z-"});
  CHECK(oz.orthogonal("z+", "z-"));
  CHECK(oz.below("z+", "z+"));
  CHECK_FALSE(oz.below("z+", "z-"));

  CHECK_THROWS_AS(
      Context::make({{"z+", zp}, {"x+", builtin_projector("x+")}}),
      NonCommutingError);
  CHECK_THROWS_AS(Context::make({{"a", Projector::identity(2)}}),
                  TrivialMemberError);
  CHECK_THROWS_AS(Context::make({{"a", Projector::zero(2)}}),
                  TrivialMemberError);
  CHECK_THROWS(Context::make({}));
  CHECK_THROWS(Context::make({{"a", zp}, {"a", zm}}));
}

TEST_CASE("meet and join of random commuting pairs stay projectors") {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    auto [p, q] = random_commuting_pair(dim, rng);
    // validate() inside meet/join enforces Hermitian + idempotent
    const Projector m = meet(p, q);
    const Projector j = join(p, q);
    CHECK(m.rank() + j.rank() == p.rank() + q.rank());
  }
}

TEST_CASE("De Morgan within a context") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    auto [p, q] = random_commuting_pair(dim, rng);
    CHECK(approx_equal(complement(meet(p, q)).matrix(),
                       join(complement(p), complement(q)).matrix()));
  }
}

TEST_CASE("excluded-middle and non-contradiction operator identities") {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    const Projector p = random_projector(dim, rng);
    CHECK(join(p, complement(p)).is_identity());
    CHECK(meet(p, complement(p)).is_zero());
  }
}

TEST_CASE("joint eigenstructure of the x context") {
  const Context ox = Context::make({{"x+", builtin_projector("x+")},
                                    {"x-", builtin_projector("x-")}});
  const JointEigenstructure je = joint_eigenstructure(ox);
  REQUIRE(je.blocks.size() == 2);
  for (const auto& block : je.blocks) {
    REQUIRE(block.subspace.count() == 1);
    const Vector b = block.subspace.basis().col(0);
    // both blocks are the (1, +-1)/sqrt(2) lines
    CHECK(std::abs(std::abs(b(0)) - 1.0 / std::sqrt(2.0)) < 1e-10);
    if (block.assignment.at("x+") == 1) {
      CHECK(block.assignment.at("x-") == 0);
      CHECK(std::abs(b(0) - b(1)) < 1e-10);
    } else {
      CHECK(block.assignment.at("x-") == 1);
      CHECK(std::abs(b(0) + b(1)) < 1e-10);
    }
  }
}

TEST_CASE("joint eigenstructure of a single-member context") {
  const Context c = Context::make({{"z+", builtin_projector("z+")}});
  const JointEigenstructure je = joint_eigenstructure(c);
  REQUIRE(je.blocks.size() == 2);
  for (const auto& block : je.blocks) {
    const Vector b = block.subspace.basis().col(0);
    if (block.assignment.at("z+") == 1) {
      CHECK(std::abs(std::abs(b(0)) - 1.0) < 1e-10);
    } else {
      CHECK(std::abs(std::abs(b(1)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("joint eigenstructure matches the brute-force block oracle") {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    auto [p, q] = random_commuting_pair(dim, rng);
    const std::vector<std::pair<std::string, Projector>> members = {
        {"a", p}, {"b", q}};
    const auto expected = testing::brute_force_blocks(members);
    const JointEigenstructure je =
        joint_eigenstructure(Context::make(members));
    REQUIRE(je.blocks.size() == expected.size());
    Eigen::Index total = 0;
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& block : je.blocks) {
      const Matrix block_projector =
          block.subspace.basis() * block.subspace.basis().adjoint();
      auto it = expected.find(block.assignment);
      REQUIRE(it != expected.end());
      CHECK(approx_equal(block_projector, it->second, 1e-9));
      total += block.subspace.count();
      sum += block_projector;
    }
    CHECK(total == dim);
    CHECK(approx_equal(sum, Matrix::Identity(dim, dim), 1e-9));
    // each member is the sum of its assigned-1 blocks
    for (const auto& [label, projector] : members) {
      Matrix rebuilt = Matrix::Zero(dim, dim);
      for (const auto& block : je.blocks) {
        if (block.assignment.at(label) == 1) {
          rebuilt +=
              block.subspace.basis() * block.subspace.basis().adjoint();
        }
      }
      CHECK(approx_equal(rebuilt, projector.matrix(), 1e-9));
    }
  }
}
