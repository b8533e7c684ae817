// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include "generators.hpp"
#include "qsv/valuation.hpp"

using namespace qsv;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion << ". " << name
            << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

StateVector z_up() {
  Vector v(2);
  v << 1, 0;
  return StateVector(v);
}

// 1. Builtin projectors match the spin matrices to 1e-12; x-context meet,
//    join and exclusive join give 0, 1, 1.
bool golden_spin() {
  Matrix zp(2, 2), zm(2, 2), xp(2, 2), xm(2, 2);
  zp << 1, 0, 0, 0;
  zm << 0, 0, 0, 1;
  xp << 0.5, 0.5, 0.5, 0.5;
  xm << 0.5, -0.5, -0.5, 0.5;
  bool ok = approx_equal(builtin_projector("z+").matrix(), zp, 1e-12) &&
            approx_equal(builtin_projector("z-").matrix(), zm, 1e-12) &&
            approx_equal(builtin_projector("x+").matrix(), xp, 1e-12) &&
            approx_equal(builtin_projector("x-").matrix(), xm, 1e-12);
  const Projector px = builtin_projector("x+");
  const Projector pxm = builtin_projector("x-");
  ok = ok && approx_equal(meet(px, pxm).matrix(), Matrix::Zero(2, 2)) &&
       approx_equal(join(px, pxm).matrix(), Matrix::Identity(2, 2)) &&
       approx_equal(xjoin(px, pxm).matrix(), Matrix::Identity(2, 2));
  return ok;
}

// 2. Worked valuations for the state (1,0).
bool worked_valuation() {
  const StateVector v = z_up();
  const Binding b = builtin_spin_binding();
  bool ok = valuate_bivalent(v, builtin_projector("z+")).status ==
            TruthStatus::truth();
  ok = ok && valuate_bivalent(v, builtin_projector("z-")).status ==
                 TruthStatus::falsity();
  ok = ok && valuate_super(v, bind(parse("X+"), b)) == TruthStatus::gap();
  ok = ok && valuate_super(v, bind(parse("X-"), b)) == TruthStatus::gap();
  ok = ok &&
       valuate_super(v, bind(parse("X+ ^ X-"), b)) == TruthStatus::truth();
  return ok;
}

// 3. Excluded middle and non-contradiction over 1000 random samples in each
//    of dims 2, 3, 4.
bool law_audit() {
  Rng rng(kDefaultSeed);
  for (Eigen::Index dim : {2, 3, 4}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Projector p = random_projector(dim, rng);
      const StateVector v = random_state(dim, rng);
      const Binding b(dim, {{"a", p}});
      if (valuate_super(v, bind(parse("a | ~a"), b)) !=
          TruthStatus::truth()) {
        return false;
      }
      if (valuate_super(v, bind(parse("a & ~a"), b)) !=
          TruthStatus::falsity()) {
        return false;
      }
    }
  }
  return true;
}

// 4. Distributivity breakdown across contexts.
bool distributivity_breakdown() {
  const StateVector v = z_up();
  const Binding b = builtin_spin_binding();
  const TruthStatus lhs =
      valuate_super(v, bind(parse("Z+ & (X+ | ~X+)"), b));
  const TruthStatus rhs =
      valuate_super(v, bind(parse("(Z+ & X+) | (Z+ & ~X+)"), b));
  const LawReport law =
      check_law(Law::Distributivity, v, b, {"Z+", "X+"});
  return lhs == TruthStatus::truth() && rhs == TruthStatus::no_value() &&
         law.verdict == "equivalence-meaningless";
}

// 5. Degree semantics: <z+|P_x+|z+> = 0.5 and degrees over orthogonal
//    builtin pairs sum to 1 for 100 random states.
bool degree_semantics() {
  const StateVector v = z_up();
  if (std::abs(expectation(v, builtin_projector("x+")) - 0.5) > 1e-9) {
    return false;
  }
  Rng rng(kDefaultSeed + 1);
  for (const auto& [plus, minus] : {std::pair{"z+", "z-"},
                                    std::pair{"x+", "x-"},
                                    std::pair{"y+", "y-"}}) {
    const Projector p = builtin_projector(plus);
    const Projector q = builtin_projector(minus);
    for (int trial = 0; trial < 100; ++trial) {
      const StateVector s = random_state(2, rng);
      const double total = expectation(s, p) + expectation(s, q);
      if (std::abs(total - 1.0) > 1e-9) return false;
    }
  }
  return true;
}

// 6. Compilation equals the joint-eigenstructure reconstruction and super
//    statuses agree with block-membership evaluation, 500 random formulas.
bool compilation_oracle() {
  Rng rng(kDefaultSeed + 2);
  const std::vector<std::string> atoms = {"a", "b", "c"};
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    const Matrix u = random_unitary(dim, rng);
    std::vector<std::pair<std::string, Projector>> members;
    for (const auto& name : atoms) {
      Eigen::VectorXd d(dim);
      do {
        for (Eigen::Index i = 0; i < dim; ++i) d(i) = bit(rng);
      } while (d.sum() == 0.0 || d.sum() == static_cast<double>(dim));
      members.emplace_back(
          name, Projector::validate(u * d.asDiagonal() * u.adjoint()));
    }
    const Binding b(dim, {members.begin(), members.end()});
    const Formula f = testing::random_formula(rng, atoms, 6);
    const auto compiled = compile(bind(f, b));
    if (!std::holds_alternative<Projector>(compiled)) return false;
    const Matrix compiled_m = std::get<Projector>(compiled).matrix();

    const JointEigenstructure je =
        joint_eigenstructure(Context::make(members));
    Matrix reconstruction = Matrix::Zero(dim, dim);
    for (const auto& block : je.blocks) {
      if (testing::classical_eval(f, block.assignment)) {
        reconstruction +=
            block.subspace.basis() * block.subspace.basis().adjoint();
      }
    }
    if (!approx_equal(compiled_m, reconstruction, 1e-9)) return false;

    const StateVector v = random_state(dim, rng);
    const TruthStatus s = valuate_super(v, bind(f, b));
    const Vector amp = v.amplitudes();
    TruthStatus expected = TruthStatus::gap();
    if ((amp - reconstruction * amp).norm() <= kEpsMember) {
      expected = TruthStatus::truth();
    } else if ((reconstruction * amp).norm() <= kEpsMember) {
      expected = TruthStatus::falsity();
    }
    if (s != expected) return false;
  }
  return true;
}

// 7. Parser round-trips and the literal spin formulas.
bool parser_criteria() {
  Rng rng(kDefaultSeed + 3);
  const std::vector<std::string> atoms = {"A", "B", "X+", "X-", "Z+", "q_1"};
  for (int trial = 0; trial < 1000; ++trial) {
    const Formula f = testing::random_formula(rng, atoms, 8);
    if (parse(f.to_string()) != f) return false;
  }
  if (parse("X+ ^ X-") !=
      Formula::Xor(Formula::Atom("X+"), Formula::Atom("X-"))) {
    return false;
  }
  if (parse("X+ & ~X+") !=
      Formula::And(Formula::Atom("X+"), Formula::Not(Formula::Atom("X+")))) {
    return false;
  }
  if (parse("Z+ & (X+ | ~X+)") !=
      Formula::And(Formula::Atom("Z+"),
                   Formula::Or(Formula::Atom("X+"),
                               Formula::Not(Formula::Atom("X+"))))) {
    return false;
  }
  return true;
}

// 8. Non-truth-functionality: a true disjunction with gapped disjuncts.
bool non_truth_functionality() {
  const StateVector v = z_up();
  const Binding b = builtin_spin_binding();
  return valuate_super(v, bind(parse("X+"), b)) == TruthStatus::gap() &&
         valuate_super(v, bind(parse("~X+"), b)) == TruthStatus::gap() &&
         valuate_super(v, bind(parse("X+ | ~X+"), b)) ==
             TruthStatus::truth();
}

}  // namespace

int main() {
  auto timed = [](auto&& fn, double limit, double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = fn();
    *elapsed = seconds_since(start);
    return ok && *elapsed < limit;
  };

  double t = 0.0;
  report(1, "golden spin-1/2 reproduction", timed(golden_spin, 1.0, &t));
  report(2, "worked valuation of the z+ state", timed(worked_valuation, 1.0, &t));
  report(3, "law audit, 3000 samples across dims 2-4",
         timed(law_audit, 30.0, &t));
  report(4, "distributivity breakdown across contexts",
         distributivity_breakdown());
  report(5, "degree semantics and degree sums", degree_semantics());
  report(6, "compilation matches the precisification oracle",
         compilation_oracle());
  report(7, "parser round-trips and literal formulas", parser_criteria());
  report(8, "non-truth-functionality witness", non_truth_functionality());

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
