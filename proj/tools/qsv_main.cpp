#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsv/logic.hpp"
#include "qsv/random.hpp"
#include "qsv/valuation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitLawViolation = 4;

struct RunConfig {
  std::string semantics = "super";
  std::string state;  // builtin name or file path
  std::string amps;   // inline "re,im;re,im"
  std::string bind_file;
  bool json = false;
  std::uint64_t seed = qsv::kDefaultSeed;
  int trials = 1000;
  qsv::Tolerances tol;
};

qsv::StateVector builtin_state(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  const qsv::Complex i{0.0, 1.0};
  qsv::Vector v(2);
  if (name == "z+") {
    v << 1, 0;
  } else if (name == "z-") {
    v << 0, 1;
  } else if (name == "x+") {
    v << s, s;
  } else if (name == "x-") {
    v << s, -s;
  } else if (name == "y+") {
    v << s, s * i;
  } else if (name == "y-") {
    v << s, -s * i;
  } else {
    throw qsv::Error("unknown builtin state: " + name);
  }
  return qsv::StateVector(v);
}

bool is_builtin_state(const std::string& name) {
  return name == "z+" || name == "z-" || name == "x+" || name == "x-" ||
         name == "y+" || name == "y-";
}

qsv::StateVector state_from_amps(const std::string& amps) {
  std::vector<qsv::Complex> entries;
  std::stringstream ss(amps);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    double re = 0.0, im = 0.0;
    char comma = 0;
    std::stringstream ps(pair);
    if (!(ps >> re >> comma >> im) || comma != ',') {
      throw qsv::Error("bad --amps entry: " + pair);
    }
    entries.emplace_back(re, im);
  }
  if (entries.empty() || entries.size() > 16) {
    throw qsv::Error("--amps needs between 1 and 16 amplitudes");
  }
  qsv::Vector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = entries[k];
  }
  const double norm = v.norm();
  if (norm == 0.0) throw qsv::Error("--amps vector is zero");
  return qsv::StateVector(v / norm);
}

qsv::StateVector state_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qsv::Error("cannot open state file: " + path);
  nlohmann::json doc;
  in >> doc;
  const auto& amps = doc.is_object() ? doc.at("amps") : doc;
  qsv::Vector v(static_cast<Eigen::Index>(amps.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const auto& entry = amps.at(k);
    v(k) = qsv::Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  return qsv::StateVector(v);
}

qsv::StateVector load_state(const RunConfig& cfg) {
  if (!cfg.amps.empty() && !cfg.state.empty()) {
    throw qsv::Error("give exactly one of --state and --amps");
  }
  if (!cfg.amps.empty()) return state_from_amps(cfg.amps);
  const std::string name = cfg.state.empty() ? "z+" : cfg.state;
  if (is_builtin_state(name)) return builtin_state(name);
  return state_from_file(name);
}

qsv::Binding load_binding(const RunConfig& cfg) {
  if (cfg.bind_file.empty()) return qsv::builtin_spin_binding();
  return qsv::load_binding_file(cfg.bind_file);
}

int cmd_eval(const RunConfig& cfg, const std::string& formula_text) {
  qsv::Formula formula = qsv::parse(formula_text);
  qsv::BoundFormula bound = qsv::bind(formula, load_binding(cfg));
  const qsv::StateVector state = load_state(cfg);
  const qsv::ValuationReport report = qsv::evaluate(
      qsv::semantics_from_string(cfg.semantics), state, bound, cfg.tol);
  if (cfg.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return kExitOk;
}

int cmd_demo_stern_gerlach(const RunConfig& cfg) {
  const qsv::StateVector psi = builtin_state("z+");
  const qsv::Binding binding = qsv::builtin_spin_binding();
  const qsv::Tolerances tol = cfg.tol;

  // expansion of |z+> over the x-basis
  const qsv::Vector xplus = builtin_state("x+").amplitudes();
  const qsv::Vector xminus = builtin_state("x-").amplitudes();
  const qsv::Complex c1 = xplus.dot(psi.amplitudes());
  const qsv::Complex c2 = xminus.dot(psi.amplitudes());

  auto super = [&](const std::string& text) {
    return qsv::valuate_super(psi, qsv::bind(qsv::parse(text), binding), tol);
  };
  auto bivalent = [&](const std::string& atom) {
    return qsv::valuate_bivalent(psi, binding.at(atom), tol).status;
  };

  const auto z_plus = bivalent("Z+");
  const auto z_minus = bivalent("Z-");
  const auto x_plus = super("X+");
  const auto x_minus = super("X-");
  const auto xdisj = super("X+ ^ X-");
  const auto em = super("X+ | ~X+");
  const auto nc = super("X+ & ~X+");
  const auto conj = super("X+ & X-");

  const std::string conjunction_note =
      "conjunction reading fails: X+ & X- compiles to the zero operator and "
      "is " +
      conj.to_string() + " while Z+ is " + z_plus.to_string();
  const std::string xdisj_note =
      "exclusive-disjunction reading as a classical claim fails: it would "
      "mean the spin along z and along x are simultaneously known, which "
      "incompatible (non-commuting) measurements rule out";

  if (cfg.json) {
    nlohmann::json out;
    out["state"] = "z+";
    out["expansion"] = {{"c1", {c1.real(), c1.imag()}},
                        {"c2", {c2.real(), c2.imag()}}};
    out["bivalent"] = {{"Z+", qsv::status_to_json(z_plus)},
                       {"Z-", qsv::status_to_json(z_minus)}};
    out["super"] = {{"X+", qsv::status_to_json(x_plus)},
                    {"X-", qsv::status_to_json(x_minus)},
                    {"X+ ^ X-", qsv::status_to_json(xdisj)},
                    {"X+ | ~X+", qsv::status_to_json(em)},
                    {"X+ & ~X+", qsv::status_to_json(nc)}};
    out["classical_readings"] = {{"conjunction", conjunction_note},
                                 {"exclusive_disjunction", xdisj_note}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout.precision(12);
  std::cout << "Stern-Gerlach demonstration (state z+, x-axis nonselected)\n"
            << "\n"
            << "x-basis expansion: |z+> = c1 |x+> + c2 |x->\n"
            << "  c1 = " << c1.real() << (c1.imag() < 0 ? " - " : " + ")
            << std::abs(c1.imag()) << "i\n"
            << "  c2 = " << c2.real() << (c2.imag() < 0 ? " - " : " + ")
            << std::abs(c2.imag()) << "i\n"
            << "\n"
            << "bivalent valuations in the selected context:\n"
            << "  Z+ : " << z_plus.to_string() << "\n"
            << "  Z- : " << z_minus.to_string() << "\n"
            << "\n"
            << "supervaluations in the nonselected context:\n"
            << "  X+        : " << x_plus.to_string() << "\n"
            << "  X-        : " << x_minus.to_string() << "\n"
            << "  X+ ^ X-   : " << xdisj.to_string() << "\n"
            << "  X+ | ~X+  : " << em.to_string() << "\n"
            << "  X+ & ~X+  : " << nc.to_string() << "\n"
            << "\n"
            << "classical readings of the superposition:\n"
            << "  " << conjunction_note << "\n"
            << "  " << xdisj_note << "\n";
  return kExitOk;
}

int cmd_check_laws(const RunConfig& cfg) {
  qsv::Rng rng(cfg.seed);
  nlohmann::json dims_json = nlohmann::json::array();
  std::ostringstream text;
  bool violated = false;

  for (Eigen::Index dim : {2, 3, 4}) {
    int em_pass = 0, nc_pass = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const qsv::Projector p = qsv::random_projector(dim, rng);
      const qsv::StateVector v = qsv::random_state(dim, rng);
      const qsv::Binding b(dim, {{"A", p}});
      const auto em =
          qsv::check_law(qsv::Law::ExcludedMiddle, v, b, {"A"}, cfg.tol);
      const auto nc =
          qsv::check_law(qsv::Law::NonContradiction, v, b, {"A"}, cfg.tol);
      if (em.verdict == "holds") ++em_pass;
      if (nc.verdict == "holds") ++nc_pass;
    }
    violated = violated || em_pass != cfg.trials || nc_pass != cfg.trials;
    dims_json.push_back({{"dim", dim},
                         {"trials", cfg.trials},
                         {"excluded_middle_holds", em_pass},
                         {"non_contradiction_holds", nc_pass}});
    text << "dim " << dim << ": excluded-middle " << em_pass << "/"
         << cfg.trials << " hold, non-contradiction " << nc_pass << "/"
         << cfg.trials << " hold\n";
  }

  const qsv::StateVector psi = builtin_state("z+");
  const auto dist = qsv::check_law(qsv::Law::Distributivity, psi,
                                   qsv::builtin_spin_binding(), {"Z+", "X+"},
                                   cfg.tol);

  if (cfg.json) {
    nlohmann::json out;
    out["seed"] = cfg.seed;
    out["dims"] = dims_json;
    out["distributivity"] = dist.to_json();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str() << dist.to_text();
  }
  return violated ? kExitLawViolation : kExitOk;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--semantics", cfg.semantics,
                  "bivalent | degree | super")
      ->check(CLI::IsMember({"bivalent", "degree", "super"}));
  cmd->add_option("--state", cfg.state,
                  "builtin state (z+ z- x+ x- y+ y-) or JSON file");
  cmd->add_option("--amps", cfg.amps, "inline amplitudes \"re,im;re,im\"");
  cmd->add_option("--bind", cfg.bind_file, "binding JSON file");
  cmd->add_flag("--json", cfg.json, "emit JSON instead of text");
  cmd->add_option("--seed", cfg.seed, "RNG seed for batch audits");
  cmd->add_option("--trials", cfg.trials, "samples per dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-alg", cfg.tol.alg, "algebraic residual tolerance");
  cmd->add_option("--eps-member", cfg.tol.member,
                  "membership distance tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propositional formulas over projector lattices, under "
               "bivalent, Born-degree and supervaluationist semantics"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env_seed = std::getenv("QSV_SEED")) {
    cfg.seed = std::strtoull(env_seed, nullptr, 10);
  }

  std::string formula_text;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula");
  eval->add_option("formula", formula_text, "formula text")->required();
  add_common_flags(eval, cfg);

  CLI::App* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->require_subcommand(1);
  CLI::App* sg = demo->add_subcommand(
      "stern-gerlach", "spin-1/2 superposition walkthrough");
  add_common_flags(sg, cfg);

  CLI::App* laws =
      app.add_subcommand("check-laws", "audit excluded middle, "
                                       "non-contradiction and distributivity");
  add_common_flags(laws, cfg);

  // --seed on the command line wins over QSV_SEED
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, formula_text);
    if (sg->parsed()) return cmd_demo_stern_gerlach(cfg);
    if (laws->parsed()) return cmd_check_laws(cfg);
  } catch (const qsv::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qsv::UnboundAtomsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qsv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
