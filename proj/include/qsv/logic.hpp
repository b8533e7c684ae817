#ifndef QSV_LOGIC_HPP
#define QSV_LOGIC_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qsv/lattice.hpp"

namespace qsv {

enum class Connective { Atom, Not, And, Or, Xor };

/// Immutable propositional AST. Atoms admit the `+`/`-` suffix characters
/// so labels like Z+ and X- are single identifiers.
class Formula {
 public:
  static Formula Atom(std::string name);
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Xor(Formula lhs, Formula rhs);

  Connective kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  /// Fully parenthesized rendering; reparses to an identical tree.
  std::string to_string() const;
  std::set<std::string> atoms() const;
  int depth() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, lowest to highest precedence, all binary ops left-associative:
///   or   := xor ('|' xor)*
///   xor  := and ('^' and)*
///   and  := unary ('&' unary)*
///   unary := ('~' | '!') unary | atom | '(' or ')'
/// Word aliases AND, OR, XOR accepted case-insensitively. Atoms match
/// [A-Za-z_][A-Za-z0-9_+-]*. Input capped at 64 KiB, depth at 64.
Formula parse(const std::string& text);

/// Map from atom names to projectors on a common ambient space.
class Binding {
 public:
  Binding(Eigen::Index ambient_dim,
          std::map<std::string, Projector> atoms);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  const std::map<std::string, Projector>& atoms() const { return atoms_; }
  bool has(const std::string& name) const { return atoms_.count(name) > 0; }
  const Projector& at(const std::string& name) const;

 private:
  Eigen::Index ambient_dim_;
  std::map<std::string, Projector> atoms_;
};

/// The spin-1/2 measurement projectors along z, x and y: names are
/// "z+", "z-", "x+", "x-", "y+", "y-".
Projector builtin_projector(const std::string& name);

/// Binding of atoms Z+, Z-, X+, X-, Y+, Y- to the builtin projectors.
Binding builtin_spin_binding();

/// Binding file: { "dim": n, "atoms": { name: {"matrix": [[[re,im],...],...]}
///                                      | {"builtin": "x+"} } }
Binding load_binding(const std::string& json_text,
                     Eigen::Index max_dim = 16);
Binding load_binding_file(const std::string& path, Eigen::Index max_dim = 16);

class BoundFormula {
 public:
  const Formula& formula() const { return formula_; }
  const Binding& binding() const { return binding_; }

  friend BoundFormula bind(Formula f, Binding b);

 private:
  BoundFormula(Formula f, Binding b)
      : formula_(std::move(f)), binding_(std::move(b)) {}
  Formula formula_;
  Binding binding_;
};

/// Throws UnboundAtomsError listing every unresolved atom at once.
BoundFormula bind(Formula f, Binding b);

/// Compilation outcome when the formula spans non-commuting contexts; a
/// value, not a failure.
struct CrossContext {
  std::string atom_a, atom_b;
};

using CompileResult = std::variant<Projector, CrossContext>;

/// Map the formula to a projector: And -> meet, Or -> join, Xor -> xjoin,
/// Not -> complement, provided every pair of atom projectors commutes.
CompileResult compile(const BoundFormula& bf, double eps_alg = kEpsAlg);

}  // namespace qsv

#endif  // QSV_LOGIC_HPP
