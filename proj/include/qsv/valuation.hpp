#ifndef QSV_VALUATION_HPP
#define QSV_VALUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsv/logic.hpp"

namespace qsv {

/// Truth statuses across the three semantics. Gap marks a single-context
/// proposition that is undefined in the given state; NoValue marks a
/// cross-context compound with an operand that lacks a value; Undefined
/// is the bivalent semantics refusing to answer. Degree carries the Born
/// value and appears only under the degree semantics.
struct TruthStatus {
  enum class Kind { True, False, Gap, NoValue, Undefined, Degree };

  Kind kind;
  double degree = 0.0;

  static TruthStatus truth() { return {Kind::True}; }
  static TruthStatus falsity() { return {Kind::False}; }
  static TruthStatus gap() { return {Kind::Gap}; }
  static TruthStatus no_value() { return {Kind::NoValue}; }
  static TruthStatus undefined() { return {Kind::Undefined}; }
  static TruthStatus of_degree(double r) { return {Kind::Degree, r}; }

  bool is_definite() const {
    return kind == Kind::True || kind == Kind::False;
  }
  std::string to_string() const;

  bool operator==(const TruthStatus& other) const {
    return kind == other.kind &&
           (kind != Kind::Degree || degree == other.degree);
  }
  bool operator!=(const TruthStatus& other) const {
    return !(*this == other);
  }
};

struct Tolerances {
  double alg = kEpsAlg;
  double member = kEpsMember;
};

struct BivalentValuation {
  TruthStatus status;
  double range_residual;   // distance from v to its projection onto ran(p)
  double kernel_residual;  // likewise for ker(p)
};

/// Bivalent semantics on a single projector: True iff the state lies in
/// the range, False iff in the kernel, Undefined otherwise.
BivalentValuation valuate_bivalent(const StateVector& v, const Projector& p,
                                   Tolerances tol = {});

/// Born-degree semantics: <v|P|v> of the compiled operator. Cross-context
/// formulas get NoValue.
TruthStatus valuate_degree(const StateVector& v, const BoundFormula& bf,
                           Tolerances tol = {});

/// Supervaluationist semantics. A subformula whose atoms all commute is
/// compiled and judged by range/kernel membership of the state (Gap when
/// in neither); across non-commuting contexts, definite operands combine
/// classically and anything touching a Gap or NoValue operand gets
/// NoValue.
TruthStatus valuate_super(const StateVector& v, const BoundFormula& bf,
                          Tolerances tol = {});

struct TraceEntry {
  std::string subformula;
  TruthStatus status;
  std::string justification;
};

struct ValuationReport {
  std::string formula;
  std::string semantics;
  TruthStatus status;
  std::vector<TraceEntry> trace;          // one entry per subformula
  std::optional<Matrix> compiled;         // present when the whole formula
                                          // compiles to one operator
  nlohmann::json to_json() const;
  std::string to_text() const;
};

enum class Semantics { Bivalent, Degree, Super };

Semantics semantics_from_string(const std::string& name);
std::string semantics_name(Semantics s);

/// Full evaluation with a per-subformula trace.
ValuationReport evaluate(Semantics semantics, const StateVector& v,
                         const BoundFormula& bf, Tolerances tol = {});

enum class Law { ExcludedMiddle, NonContradiction, Distributivity };

struct LawReport {
  Law law;
  std::string lhs_formula;
  TruthStatus lhs_status;
  std::optional<std::string> rhs_formula;   // Distributivity only
  std::optional<TruthStatus> rhs_status;
  std::optional<Matrix> compiled;           // ExcludedMiddle/NonContradiction
  std::string verdict;  // "holds" | "violated" | "equivalence-meaningless"
                        // | "indeterminate"
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// ExcludedMiddle and NonContradiction take one atom; Distributivity takes
/// (a, b) and audits `a & (b | ~b)` against `(a & b) | (a & ~b)`.
LawReport check_law(Law law, const StateVector& v, const Binding& b,
                    const std::vector<std::string>& atoms,
                    Tolerances tol = {});

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json status_to_json(const TruthStatus& s);

}  // namespace qsv

#endif  // QSV_VALUATION_HPP
