#include "qsv/logic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qsv {

namespace {
constexpr int kMaxDepth = 64;
constexpr std::size_t kMaxInput = 64 * 1024;
}  // namespace

Formula Formula::Atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::Not(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Not, "", std::move(f.node_), nullptr}));
}

Formula Formula::And(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{
      Connective::And, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::Or(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{
      Connective::Or, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::Xor(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{
      Connective::Xor, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Connective::Atom:
      return atom_name();
    case Connective::Not:
      return "~" + lhs().to_string();
    case Connective::And:
      return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Connective::Or:
      return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
    case Connective::Xor:
      return "(" + lhs().to_string() + " ^ " + rhs().to_string() + ")";
  }
  return {};
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  if (kind() == Connective::Atom) {
    out.insert(atom_name());
    return out;
  }
  out = lhs().atoms();
  if (node_->rhs) {
    auto r = rhs().atoms();
    out.insert(r.begin(), r.end());
  }
  return out;
}

int Formula::depth() const {
  if (kind() == Connective::Atom) return 1;
  int d = lhs().depth();
  if (node_->rhs) d = std::max(d, rhs().depth());
  return d + 1;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (kind() == Connective::Atom) return atom_name() == other.atom_name();
  if (lhs() != other.lhs()) return false;
  if (static_cast<bool>(node_->rhs) != static_cast<bool>(other.node_->rhs)) {
    return false;
  }
  return !node_->rhs || rhs() == other.rhs();
}

namespace {

enum class TokKind { Atom, NotOp, AndOp, OrOp, XorOp, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int line, column;
};

bool is_atom_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '+' || c == '-';
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    const int col = column;
    if (c == '~' || c == '!') {
      tokens.push_back({TokKind::NotOp, std::string(1, c), line, col});
      ++i;
      ++column;
      continue;
    }
    if (c == '&' || c == '|' || c == '^' || c == '(' || c == ')') {
      TokKind k = c == '&'   ? TokKind::AndOp
                  : c == '|' ? TokKind::OrOp
                  : c == '^' ? TokKind::XorOp
                  : c == '(' ? TokKind::LParen
                             : TokKind::RParen;
      tokens.push_back({k, std::string(1, c), line, col});
      ++i;
      ++column;
      continue;
    }
    if (is_atom_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_atom_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      column += static_cast<int>(j - i);
      i = j;
      const std::string lw = lower(word);
      if (lw == "and") {
        tokens.push_back({TokKind::AndOp, word, line, col});
      } else if (lw == "or") {
        tokens.push_back({TokKind::OrOp, word, line, col});
      } else if (lw == "xor") {
        tokens.push_back({TokKind::XorOp, word, line, col});
      } else {
        tokens.push_back({TokKind::Atom, word, line, col});
      }
      continue;
    }
    throw SyntaxError(line, col, {"atom", "operator", "'('"},
                      "'" + std::string(1, c) + "'");
  }
  tokens.push_back({TokKind::End, "<end>", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_or(0);
    if (peek().kind != TokKind::End) {
      fail({"operator", "end of input"});
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.line, t.column, std::move(expected),
                      "'" + t.text + "'");
  }

  void check_depth(int depth) const {
    if (depth > kMaxDepth) {
      const Token& t = peek();
      throw SyntaxError(t.line, t.column, {"formula of depth <= 64"},
                        "deeper nesting");
    }
  }

  Formula parse_or(int depth) {
    check_depth(depth);
    Formula f = parse_xor(depth + 1);
    while (peek().kind == TokKind::OrOp) {
      take();
      f = Formula::Or(std::move(f), parse_xor(depth + 1));
    }
    return f;
  }

  Formula parse_xor(int depth) {
    check_depth(depth);
    Formula f = parse_and(depth + 1);
    while (peek().kind == TokKind::XorOp) {
      take();
      f = Formula::Xor(std::move(f), parse_and(depth + 1));
    }
    return f;
  }

  Formula parse_and(int depth) {
    check_depth(depth);
    Formula f = parse_unary(depth + 1);
    while (peek().kind == TokKind::AndOp) {
      take();
      f = Formula::And(std::move(f), parse_unary(depth + 1));
    }
    return f;
  }

  Formula parse_unary(int depth) {
    check_depth(depth);
    if (peek().kind == TokKind::NotOp) {
      take();
      return Formula::Not(parse_unary(depth + 1));
    }
    if (peek().kind == TokKind::Atom) {
      return Formula::Atom(take().text);
    }
    if (peek().kind == TokKind::LParen) {
      take();
      Formula f = parse_or(depth + 1);
      if (peek().kind != TokKind::RParen) {
        fail({"')'"});
      }
      take();
      return f;
    }
    fail({"atom", "'~'", "'('"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  if (text.size() > kMaxInput) {
    throw SyntaxError(1, 1, {"input <= 64 KiB"}, "oversized input");
  }
  return Parser(lex(text)).run();
}

Binding::Binding(Eigen::Index ambient_dim,
                 std::map<std::string, Projector> atoms)
    : ambient_dim_(ambient_dim), atoms_(std::move(atoms)) {
  for (const auto& [name, p] : atoms_) {
    if (p.dim() != ambient_dim_) {
      throw DimensionMismatchError(p.dim(), ambient_dim_);
    }
  }
}

const Projector& Binding::at(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) {
    throw UnboundAtomsError({name});
  }
  return it->second;
}

Projector builtin_projector(const std::string& name) {
  Matrix m(2, 2);
  const Complex i{0.0, 1.0};
  if (name == "z+") {
    m << 1, 0, 0, 0;
  } else if (name == "z-") {
    m << 0, 0, 0, 1;
  } else if (name == "x+") {
    m << 0.5, 0.5, 0.5, 0.5;
  } else if (name == "x-") {
    m << 0.5, -0.5, -0.5, 0.5;
  } else if (name == "y+") {
    m << 0.5, -0.5 * i, 0.5 * i, 0.5;
  } else if (name == "y-") {
    m << 0.5, 0.5 * i, -0.5 * i, 0.5;
  } else {
    throw Error("unknown builtin projector: " + name);
  }
  return Projector::validate(m);
}

Binding builtin_spin_binding() {
  std::map<std::string, Projector> atoms;
  for (const char* name : {"z+", "z-", "x+", "x-", "y+", "y-"}) {
    std::string atom(1, static_cast<char>(std::toupper(name[0])));
    atom += name[1];
    atoms.emplace(atom, builtin_projector(name));
  }
  return Binding(2, std::move(atoms));
}

namespace {

Matrix matrix_from_json(const nlohmann::json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows.at(r);
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error("binding matrix is not square");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2) {
        throw Error("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(),
                        entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

Binding load_binding(const std::string& json_text, Eigen::Index max_dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("binding file is not valid JSON: ") + e.what());
  }
  const auto dim = doc.at("dim").get<Eigen::Index>();
  if (dim < 1 || dim > max_dim) {
    throw Error("binding dim out of range [1, " + std::to_string(max_dim) +
                "]");
  }
  std::map<std::string, Projector> atoms;
  for (const auto& [name, value] : doc.at("atoms").items()) {
    if (value.contains("builtin")) {
      atoms.emplace(name,
                    builtin_projector(value.at("builtin").get<std::string>()));
    } else if (value.contains("matrix")) {
      atoms.emplace(name,
                    Projector::validate(matrix_from_json(value.at("matrix"))));
    } else {
      throw Error("atom " + name + " needs a \"matrix\" or a \"builtin\"");
    }
  }
  return Binding(dim, std::move(atoms));
}

Binding load_binding_file(const std::string& path, Eigen::Index max_dim) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open binding file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_binding(buf.str(), max_dim);
}

BoundFormula bind(Formula f, Binding b) {
  std::vector<std::string> missing;
  for (const auto& name : f.atoms()) {
    if (!b.has(name)) missing.push_back(name);
  }
  if (!missing.empty()) {
    throw UnboundAtomsError(std::move(missing));
  }
  return BoundFormula(std::move(f), std::move(b));
}

namespace {

Projector compile_node(const Formula& f, const Binding& b, double eps_alg) {
  switch (f.kind()) {
    case Connective::Atom:
      return b.at(f.atom_name());
    case Connective::Not:
      return complement(compile_node(f.lhs(), b, eps_alg));
    case Connective::And:
      return meet(compile_node(f.lhs(), b, eps_alg),
                  compile_node(f.rhs(), b, eps_alg), eps_alg);
    case Connective::Or:
      return join(compile_node(f.lhs(), b, eps_alg),
                  compile_node(f.rhs(), b, eps_alg), eps_alg);
    case Connective::Xor:
      return xjoin(compile_node(f.lhs(), b, eps_alg),
                   compile_node(f.rhs(), b, eps_alg), eps_alg);
  }
  throw Error("unreachable");
}

}  // namespace

CompileResult compile(const BoundFormula& bf, double eps_alg) {
  const auto atoms = bf.formula().atoms();
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (!commutes(bf.binding().at(names[i]), bf.binding().at(names[j]),
                    eps_alg)) {
        return CrossContext{names[i], names[j]};
      }
    }
  }
  // Constant-free formulas have no atoms; there is nothing to compile
  // against, so require at least one atom to fix the ambient space.
  if (names.empty()) {
    throw Error("formula has no atoms");
  }
  return compile_node(bf.formula(), bf.binding(), eps_alg);
}

}  // namespace qsv
