#include "qsv/valuation.hpp"

#include <sstream>

namespace qsv {

std::string TruthStatus::to_string() const {
  switch (kind) {
    case Kind::True:
      return "True";
    case Kind::False:
      return "False";
    case Kind::Gap:
      return "Gap";
    case Kind::NoValue:
      return "NoValue";
    case Kind::Undefined:
      return "Undefined";
    case Kind::Degree: {
      std::ostringstream out;
      out.precision(12);
      out << "Degree(" << degree << ")";
      return out.str();
    }
  }
  return {};
}

BivalentValuation valuate_bivalent(const StateVector& v, const Projector& p,
                                   Tolerances tol) {
  if (v.dim() != p.dim()) {
    throw DimensionMismatchError(v.dim(), p.dim());
  }
  const Subspace ran = range_basis(p, tol.alg);
  const Subspace ker = kernel_basis(p, tol.alg);
  auto residual = [&](const Subspace& s) {
    if (s.count() == 0) return 1.0;
    const Vector projected =
        s.basis() * (s.basis().adjoint() * v.amplitudes());
    return (v.amplitudes() - projected).norm();
  };
  const double ran_res = residual(ran);
  const double ker_res = residual(ker);
  if (ran_res <= tol.member) {
    return {TruthStatus::truth(), ran_res, ker_res};
  }
  if (ker_res <= tol.member) {
    return {TruthStatus::falsity(), ran_res, ker_res};
  }
  return {TruthStatus::undefined(), ran_res, ker_res};
}

namespace {

bool all_pairs_commute(const std::set<std::string>& atoms, const Binding& b,
                       double eps_alg) {
  for (auto i = atoms.begin(); i != atoms.end(); ++i) {
    for (auto j = std::next(i); j != atoms.end(); ++j) {
      if (!commutes(b.at(*i), b.at(*j), eps_alg)) return false;
    }
  }
  return true;
}

// Classical tables over definite statuses.
TruthStatus combine_classical(Connective kind, TruthStatus a,
                              TruthStatus b) {
  const bool x = a.kind == TruthStatus::Kind::True;
  const bool y = b.kind == TruthStatus::Kind::True;
  bool r = false;
  switch (kind) {
    case Connective::And:
      r = x && y;
      break;
    case Connective::Or:
      r = x || y;
      break;
    case Connective::Xor:
      r = x != y;
      break;
    default:
      throw Error("not a binary connective");
  }
  return r ? TruthStatus::truth() : TruthStatus::falsity();
}

struct SuperResult {
  TruthStatus status;
  std::string justification;
};

// Judge a compiled operator against the state by membership.
SuperResult judge_compiled(const StateVector& v, const Projector& p,
                           Tolerances tol) {
  if (member(v, range_basis(p, tol.alg), tol.member)) {
    return {TruthStatus::truth(), "state lies in ran of compiled operator"};
  }
  if (member(v, kernel_basis(p, tol.alg), tol.member)) {
    return {TruthStatus::falsity(), "state lies in ker of compiled operator"};
  }
  return {TruthStatus::gap(),
          "state lies in neither ran nor ker of compiled operator"};
}

SuperResult super_eval(const Formula& f, const Binding& b,
                       const StateVector& v, Tolerances tol,
                       std::vector<TraceEntry>* trace) {
  SuperResult result;
  if (all_pairs_commute(f.atoms(), b, tol.alg)) {
    const Projector p =
        std::get<Projector>(compile(bind(f, b), tol.alg));
    result = judge_compiled(v, p, tol);
    if (trace != nullptr && f.kind() != Connective::Atom) {
      // children still get entries, judged the same way
      super_eval(f.lhs(), b, v, tol, trace);
      if (f.kind() != Connective::Not) super_eval(f.rhs(), b, v, tol, trace);
    }
  } else if (f.kind() == Connective::Not) {
    SuperResult inner = super_eval(f.lhs(), b, v, tol, trace);
    if (inner.status.is_definite()) {
      result = {inner.status.kind == TruthStatus::Kind::True
                    ? TruthStatus::falsity()
                    : TruthStatus::truth(),
                "classical negation of a definite operand"};
    } else {
      result = {TruthStatus::no_value(), "operand lacks a truth value"};
    }
  } else {
    SuperResult lhs = super_eval(f.lhs(), b, v, tol, trace);
    SuperResult rhs = super_eval(f.rhs(), b, v, tol, trace);
    if (lhs.status.is_definite() && rhs.status.is_definite()) {
      result = {combine_classical(f.kind(), lhs.status, rhs.status),
                "classical combination of definite operands"};
    } else {
      result = {TruthStatus::no_value(),
                "cross-context compound with an operand lacking a value"};
    }
  }
  if (trace != nullptr) {
    trace->push_back({f.to_string(), result.status, result.justification});
  }
  return result;
}

struct DegreeResult {
  TruthStatus status;
  std::string justification;
};

DegreeResult degree_eval(const Formula& f, const Binding& b,
                         const StateVector& v, Tolerances tol,
                         std::vector<TraceEntry>* trace) {
  DegreeResult result;
  const CompileResult compiled = compile(bind(f, b), tol.alg);
  if (std::holds_alternative<Projector>(compiled)) {
    const double d = expectation(v, std::get<Projector>(compiled));
    result = {TruthStatus::of_degree(d),
              "Born value of the compiled operator"};
  } else {
    const auto& cc = std::get<CrossContext>(compiled);
    result = {TruthStatus::no_value(),
              "atoms " + cc.atom_a + " and " + cc.atom_b + " do not commute"};
  }
  if (trace != nullptr) {
    if (f.kind() != Connective::Atom) {
      degree_eval(f.lhs(), b, v, tol, trace);
      if (f.kind() != Connective::Not) degree_eval(f.rhs(), b, v, tol, trace);
    }
    trace->push_back({f.to_string(), result.status, result.justification});
  }
  return result;
}

void bivalent_trace(const Formula& f, const Binding& b, const StateVector& v,
                    Tolerances tol, std::vector<TraceEntry>* trace) {
  if (f.kind() != Connective::Atom) {
    bivalent_trace(f.lhs(), b, v, tol, trace);
    if (f.kind() != Connective::Not) bivalent_trace(f.rhs(), b, v, tol, trace);
  }
  const CompileResult compiled = compile(bind(f, b), tol.alg);
  if (std::holds_alternative<Projector>(compiled)) {
    const auto bv = valuate_bivalent(v, std::get<Projector>(compiled), tol);
    std::ostringstream why;
    why.precision(6);
    why << "membership residuals: ran " << bv.range_residual << ", ker "
        << bv.kernel_residual;
    trace->push_back({f.to_string(), bv.status, why.str()});
  } else {
    const auto& cc = std::get<CrossContext>(compiled);
    trace->push_back({f.to_string(), TruthStatus::no_value(),
                      "atoms " + cc.atom_a + " and " + cc.atom_b +
                          " do not commute"});
  }
}

}  // namespace

TruthStatus valuate_degree(const StateVector& v, const BoundFormula& bf,
                           Tolerances tol) {
  return degree_eval(bf.formula(), bf.binding(), v, tol, nullptr).status;
}

TruthStatus valuate_super(const StateVector& v, const BoundFormula& bf,
                          Tolerances tol) {
  return super_eval(bf.formula(), bf.binding(), v, tol, nullptr).status;
}

Semantics semantics_from_string(const std::string& name) {
  if (name == "bivalent") return Semantics::Bivalent;
  if (name == "degree") return Semantics::Degree;
  if (name == "super") return Semantics::Super;
  throw Error("unknown semantics: " + name);
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Bivalent:
      return "bivalent";
    case Semantics::Degree:
      return "degree";
    case Semantics::Super:
      return "super";
  }
  return {};
}

ValuationReport evaluate(Semantics semantics, const StateVector& v,
                         const BoundFormula& bf, Tolerances tol) {
  ValuationReport report;
  report.formula = bf.formula().to_string();
  report.semantics = semantics_name(semantics);
  switch (semantics) {
    case Semantics::Super:
      report.status =
          super_eval(bf.formula(), bf.binding(), v, tol, &report.trace)
              .status;
      break;
    case Semantics::Degree:
      report.status =
          degree_eval(bf.formula(), bf.binding(), v, tol, &report.trace)
              .status;
      break;
    case Semantics::Bivalent: {
      bivalent_trace(bf.formula(), bf.binding(), v, tol, &report.trace);
      report.status = report.trace.back().status;
      break;
    }
  }
  const CompileResult compiled = compile(bf, tol.alg);
  if (std::holds_alternative<Projector>(compiled)) {
    report.compiled = std::get<Projector>(compiled).matrix();
  }
  return report;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json status_to_json(const TruthStatus& s) {
  nlohmann::json out;
  switch (s.kind) {
    case TruthStatus::Kind::True:
      out["kind"] = "True";
      break;
    case TruthStatus::Kind::False:
      out["kind"] = "False";
      break;
    case TruthStatus::Kind::Gap:
      out["kind"] = "Gap";
      break;
    case TruthStatus::Kind::NoValue:
      out["kind"] = "NoValue";
      break;
    case TruthStatus::Kind::Undefined:
      out["kind"] = "Undefined";
      break;
    case TruthStatus::Kind::Degree:
      out["kind"] = "Degree";
      out["degree"] = s.degree;
      break;
  }
  return out;
}

nlohmann::json ValuationReport::to_json() const {
  nlohmann::json out;
  out["formula"] = formula;
  out["semantics"] = semantics;
  out["status"] = status_to_json(status);
  out["trace"] = nlohmann::json::array();
  for (const auto& entry : trace) {
    out["trace"].push_back({{"subformula", entry.subformula},
                            {"status", status_to_json(entry.status)},
                            {"justification", entry.justification}});
  }
  if (compiled) {
    out["operator"] = matrix_to_json(*compiled);
  }
  return out;
}

std::string ValuationReport::to_text() const {
  std::ostringstream out;
  out << "formula: " << formula << "\n";
  out << "semantics: " << semantics << "\n";
  out << "status: " << status.to_string() << "\n";
  out << "trace:\n";
  for (const auto& entry : trace) {
    out << "  " << entry.subformula << " : " << entry.status.to_string()
        << " (" << entry.justification << ")\n";
  }
  return out.str();
}

namespace {

std::string law_name(Law law) {
  switch (law) {
    case Law::ExcludedMiddle:
      return "excluded-middle";
    case Law::NonContradiction:
      return "non-contradiction";
    case Law::Distributivity:
      return "distributivity";
  }
  return {};
}

}  // namespace

LawReport check_law(Law law, const StateVector& v, const Binding& b,
                    const std::vector<std::string>& atoms, Tolerances tol) {
  LawReport report;
  report.law = law;

  if (law == Law::ExcludedMiddle || law == Law::NonContradiction) {
    if (atoms.size() != 1) {
      throw Error(law_name(law) + " takes exactly one atom");
    }
    Formula a = Formula::Atom(atoms[0]);
    const bool em = law == Law::ExcludedMiddle;
    Formula f = em ? Formula::Or(a, Formula::Not(a))
                   : Formula::And(a, Formula::Not(a));
    BoundFormula bound = bind(f, b);
    report.lhs_formula = f.to_string();
    report.lhs_status = valuate_super(v, bound, tol);
    const Projector p = std::get<Projector>(compile(bound, tol.alg));
    report.compiled = p.matrix();
    const bool operator_ok = em ? p.is_identity() : p.is_zero();
    const bool status_ok =
        report.lhs_status ==
        (em ? TruthStatus::truth() : TruthStatus::falsity());
    report.verdict = (operator_ok && status_ok) ? "holds" : "violated";
    return report;
  }

  if (atoms.size() != 2) {
    throw Error("distributivity takes exactly two atoms");
  }
  auto a = [&] { return Formula::Atom(atoms[0]); };
  auto x = [&] { return Formula::Atom(atoms[1]); };
  Formula lhs = Formula::And(a(), Formula::Or(x(), Formula::Not(x())));
  Formula rhs = Formula::Or(Formula::And(a(), x()),
                            Formula::And(a(), Formula::Not(x())));
  report.lhs_formula = lhs.to_string();
  report.rhs_formula = rhs.to_string();
  report.lhs_status = valuate_super(v, bind(lhs, b), tol);
  report.rhs_status = valuate_super(v, bind(rhs, b), tol);
  const TruthStatus& ls = report.lhs_status;
  const TruthStatus& rs = *report.rhs_status;
  if (ls.is_definite() && rs.kind == TruthStatus::Kind::NoValue) {
    report.verdict = "equivalence-meaningless";
  } else if (ls.is_definite() && rs.is_definite()) {
    report.verdict = ls == rs ? "holds" : "violated";
  } else {
    report.verdict = "indeterminate";
  }
  return report;
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json out;
  out["law"] = law_name(law);
  out["lhs_formula"] = lhs_formula;
  out["lhs_status"] = status_to_json(lhs_status);
  if (rhs_formula) out["rhs_formula"] = *rhs_formula;
  if (rhs_status) out["rhs_status"] = status_to_json(*rhs_status);
  if (compiled) out["operator"] = matrix_to_json(*compiled);
  out["verdict"] = verdict;
  return out;
}

std::string LawReport::to_text() const {
  std::ostringstream out;
  out << "law: " << law_name(law) << "\n";
  out << "  " << lhs_formula << " : " << lhs_status.to_string() << "\n";
  if (rhs_formula) {
    out << "  " << *rhs_formula << " : " << rhs_status->to_string() << "\n";
  }
  out << "  verdict: " << verdict << "\n";
  return out.str();
}

}  // namespace qsv
