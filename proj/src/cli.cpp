#include "epistrict/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "epistrict/epistricted.hpp"
#include "epistrict/equivalence.hpp"
#include "epistrict/errors.hpp"
#include "epistrict/frobenius.hpp"
#include "epistrict/groupoid.hpp"
#include "epistrict/serialize.hpp"
#include "epistrict/stabilizer.hpp"
#include "epistrict/weyl.hpp"

namespace epistrict {

namespace {

using nlohmann::json;

constexpr const char* kGridHelp =
    "Grids: rows are momentum p from d-1 (top) down to 0, columns are position q from 0 (left) to d-1; "
    "'#' marks a point of the ontic support.";

struct RunConfig {
  Elem d = 3;
  std::size_t n = 1;
  std::string format = "ascii";
  double tol = CMatrix::default_tol;
  std::string algebra;
  std::string state;
  bool all = false;
};

/// Usage-level problem reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PrimeField make_field(Elem d) {
  if (d == 2) return PrimeField(d);  // throws CharacteristicTwoError
  if (d < 2 || !is_prime(d)) throw UsageError("d = " + std::to_string(d) + " is not an odd prime");
  return PrimeField(d);
}

void check_modes(std::size_t n) {
  if (n == 0) throw UsageError("n must be at least 1");
}

json coords(const FpVector& v) { return json(std::vector<Elem>(v.coords().begin(), v.coords().end())); }

json basis_json(const FpSubspace& v) {
  json b = json::array();
  for (const auto& f : v.basis()) b.push_back(coords(f));
  return b;
}

std::string vec_text(const FpVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string basis_text(const FpSubspace& v) {
  if (v.dim() == 0) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? " " : "") + vec_text(v.basis()[i]);
  return s + "}";
}

std::string values_text(const std::vector<Elem>& vals) {
  std::string s = "(";
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + std::to_string(vals[i]);
  return s + ")";
}

/// "a,b,...=c;..." with one functional and its value per clause.
EpistemicState parse_state(const PrimeField& field, std::size_t n, const std::string& text) {
  std::vector<FpVector> fs;
  std::vector<Elem> vals;
  std::stringstream clauses(text);
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    if (clause.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw UsageError("state clause '" + clause + "' lacks '='");
    std::vector<Elem> c;
    try {
      std::stringstream lhs(clause.substr(0, eq));
      std::string tok;
      while (std::getline(lhs, tok, ',')) c.push_back(std::stoll(tok));
      vals.push_back(field.reduce(std::stoll(clause.substr(eq + 1))));
    } catch (const std::logic_error&) {
      throw UsageError("state clause '" + clause + "' is not numeric");
    }
    if (c.size() != 2 * n) throw UsageError("state clause '" + clause + "' needs " + std::to_string(2 * n) + " coefficients");
    for (auto& x : c) x = field.reduce(x);
    fs.emplace_back(field, std::move(c));
  }
  const auto v = solve(fs, vals, 2 * n);
  if (!v) throw UsageError("state values are inconsistent");
  return EpistemicState(rref(field, 2 * n, fs), *v);
}

// ---- states -------------------------------------------------------------------

int cmd_states(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field = make_field(cfg.d);
  check_modes(cfg.n);
  const auto states = enumerate_pure_states(field, cfg.n);
  const auto d = static_cast<std::size_t>(field.order());
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& s : states) {
      json sup = json::array();
      for (const auto& m : to_ontic(s).support()) sup.push_back(coords(m));
      list.push_back({{"basis", basis_json(s.known())}, {"values", s.values()}, {"valuation", coords(s.valuation())}, {"support", sup}});
    }
    out << json{{"d", cfg.d}, {"n", cfg.n}, {"count", states.size()}, {"states", list}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "state,basis,values,point\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& m : to_ontic(states[i]).support()) {
        out << i << ',' << '"' << basis_text(states[i].known()) << '"' << ',' << '"' << values_text(states[i].values())
            << '"' << ',' << '"' << vec_text(m) << '"' << '\n';
      }
    }
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& s = states[i];
      out << "state " << i + 1 << ": known " << basis_text(s.known()) << " values " << values_text(s.values()) << '\n';
      const auto sup = to_ontic(s).support();
      if (cfg.n == 1) {
        for (std::size_t p = d; p-- > 0;) {
          out << "  ";
          for (std::size_t q = 0; q < d; ++q) {
            const bool on = std::any_of(sup.begin(), sup.end(), [&](const FpVector& m) {
              return m[0] == static_cast<Elem>(q) && m[1] == static_cast<Elem>(p);
            });
            out << (on ? '#' : '.');
          }
          out << '\n';
        }
      } else {
        out << "  support:";
        for (const auto& m : sup) out << ' ' << vec_text(m);
        out << '\n';
      }
    }
    out << states.size() << " pure states, " << enumerate_lagrangians(field, cfg.n).size() << " Lagrangian subspaces\n";
  }
  return kExitOk;
}

// ---- check --------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  std::optional<DaggerFrobenius> alg;
  std::string source;
  if (cfg.algebra.empty()) {
    alg = build_spek_algebra(make_field(cfg.d));
    source = "built-in Spek d=" + std::to_string(cfg.d);
  } else {
    std::ifstream in(cfg.algebra);
    if (!in) throw UsageError("cannot open algebra file '" + cfg.algebra + "'");
    alg = read_algebra(in);
    source = cfg.algebra;
  }
  const FrobeniusReport rep = verify_frobenius(*alg);
  const bool compact = verify_compact(*alg);
  const bool ok = rep.all() && compact;
  std::vector<std::pair<std::string, bool>> axioms{
      {"F", rep.frobenius}, {"M", rep.special}, {"A", rep.associative}, {"U", rep.unital}, {"C", compact}};
  std::optional<Groupoid> g;
  if (ok) g = groupoid_from_frobenius(*alg);

  if (cfg.format == "json") {
    json ax = json::object();
    for (const auto& [k, v] : axioms) ax[k] = v;
    json j{{"source", source}, {"carrier", alg->carrier().size()}, {"axioms", ax}, {"passed", ok}};
    if (g) {
      json objs = json::array();
      for (std::size_t i = 0; i < g->object_count(); ++i) objs.push_back(g->objects().label(i));
      j["groupoid"] = {{"objects", objs}, {"arrows", g->arrow_count()}};
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : axioms) out << k << ',' << (v ? "pass" : "fail") << '\n';
    if (g) {
      out << "objects," << '"';
      for (std::size_t i = 0; i < g->object_count(); ++i) out << (i ? " " : "") << g->objects().label(i);
      out << '"' << "\narrows," << g->arrow_count() << '\n';
    }
  } else {
    out << "algebra: " << source << " (carrier " << alg->carrier().size() << ")\n";
    for (const auto& [k, v] : axioms) out << "  (" << k << ") " << (v ? "pass" : "FAIL") << '\n';
    if (g) {
      out << "groupoid: " << g->object_count() << " objects {";
      for (std::size_t i = 0; i < g->object_count(); ++i) out << (i ? "," : "") << g->objects().label(i);
      out << "}, " << g->arrow_count() << " arrows\n";
    } else {
      out << "failing axioms:";
      for (const auto& [k, v] : axioms)
        if (!v) out << ' ' << k;
      out << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- quantize -----------------------------------------------------------------

int cmd_quantize(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field = make_field(cfg.d);
  check_modes(cfg.n);
  if (cfg.all == !cfg.state.empty()) throw UsageError("quantize needs exactly one of --state or --all");
  std::vector<EpistemicState> states;
  if (cfg.all) {
    states = enumerate_pure_states(field, cfg.n);
  } else {
    states.push_back(parse_state(field, cfg.n, cfg.state));
  }

  json list = json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    const CMatrix proj = stabilizer_projector(s).with_tol(cfg.tol);
    const PhaseFn w = wigner(proj * Complex(1.0 / proj.trace().real()), field);
    if (cfg.format == "json") {
      json pvms = json::array();
      for (const auto& f : s.known().basis()) {
        json p = to_json(quadrature_pvm(f));
        p["functional"] = coords(f);
        pvms.push_back(p);
      }
      json wj = json::array();
      for (std::size_t k = 0; k < w.size(); ++k) wj.push_back(w[k].real());
      list.push_back({{"basis", basis_json(s.known())},
                      {"values", s.values()},
                      {"projector", to_json(proj)},
                      {"rank", proj.rank()},
                      {"pvms", pvms},
                      {"wigner", wj}});
    } else if (cfg.format == "csv") {
      out << "# state " << i + 1 << " known " << basis_text(s.known()) << " values " << values_text(s.values()) << '\n';
      if (cfg.n == 1) {
        out << wigner_csv(w);
      } else {
        out << "point,wigner\n";
        for (std::size_t k = 0; k < w.size(); ++k) out << '"' << vec_text(FpVector::from_index(field, 2 * cfg.n, k)) << "\"," << w[k].real() << '\n';
      }
    } else {
      out << "state " << i + 1 << ": known " << basis_text(s.known()) << " values " << values_text(s.values()) << ", rank "
          << proj.rank() << '\n'
          << proj.to_string(4);
      for (const auto& f : s.known().basis()) out << "  PVM of " << vec_text(f) << ": " << quadrature_pvm(f).size() << " projectors\n";
      if (cfg.n == 1) {
        out << "  Wigner (rows q, columns p):\n" << wigner_csv(w, 6);
      }
    }
  }
  if (cfg.format == "json") out << json{{"d", cfg.d}, {"n", cfg.n}, {"count", states.size()}, {"states", list}}.dump(2) << '\n';
  return kExitOk;
}

// ---- equivalence --------------------------------------------------------------

int cmd_equivalence(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field = make_field(cfg.d);
  check_modes(cfg.n);
  const auto r = operational_equivalence_report(field, cfg.n, cfg.tol);
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    const json j = to_json(r);
    out << "key,value\n";
    for (const auto& [k, v] : j.items()) out << k << ',' << v.dump() << '\n';
  } else {
    out << std::setprecision(3) << "d=" << r.d << " n=" << r.n << ": " << r.states << " states, " << r.measurements
        << " measurements, " << r.comparisons << " outcome probabilities\n"
        << "  max Wigner deviation " << r.max_wigner_deviation << "\n"
        << "  max Born deviation   " << r.max_born_deviation << "\n"
        << "  min Wigner value     " << r.min_wigner << "\n"
        << (r.passed ? "PASS" : "FAIL") << " at tol " << r.tol << '\n';
  }
  return r.passed ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Epistemically restricted theories over odd prime fields and their stabilizer quantization", "epistrict"};
  app.require_subcommand(1);
  app.footer(std::string(kGridHelp) +
             "\nExit codes: 0 ok; 1 axiom failure, non-isotropic input, guard or failed comparison; "
             "2 usage or parse error, non-prime d; 3 d = 2.\nEPISTRICT_GUARD overrides the enumeration limit d^dim <= 10^6.");
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "ascii"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "field order, an odd prime")->capture_default_str();
    sub->add_option("--n", cfg.n, "degrees of freedom")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto* states = app.add_subcommand("states", "list all pure epistemic states with their ontic supports");
  common(states);
  states->footer(kGridHelp);
  auto* check = app.add_subcommand("check", "verify the Frobenius axioms (F)(M)(A)(U) and (C), then extract the groupoid");
  common(check);
  check->add_option("--algebra", cfg.algebra, "algebra file (default: built-in Spek algebra at --d)");
  auto* quantize = app.add_subcommand("quantize", "stabilizer projectors, PVMs and Wigner functions of states");
  common(quantize);
  quantize->add_option("--state", cfg.state, "known functionals and values, e.g. \"1,0=0\" or \"1,0,0,0=1;0,0,0,1=2\"");
  quantize->add_flag("--all", cfg.all, "every pure state");
  auto* equivalence = app.add_subcommand("equivalence", "compare the toy theory with stabilizer quantum mechanics");
  common(equivalence);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*states) return cmd_states(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*quantize) return cmd_quantize(cfg, out);
    return cmd_equivalence(cfg, out);
  } catch (const CharacteristicTwoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCharacteristicTwo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const AxiomFailure& e) {
    err << "axiom failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace epistrict
