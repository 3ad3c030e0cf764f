// Acceptance run: one PASS/FAIL line per criterion with the measured value and
// wall time. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "epistrict/cli.hpp"
#include "epistrict/epistricted.hpp"
#include "epistrict/equivalence.hpp"
#include "epistrict/errors.hpp"
#include "epistrict/frobenius.hpp"
#include "epistrict/groupoid.hpp"
#include "epistrict/stabilizer.hpp"
#include "epistrict/weyl.hpp"
#include "oracles.hpp"

using namespace epistrict;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = r.ok && in_time;
  failures += pass ? 0 : 1;
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << id << "] " << name << ": " << r.detail << " ("
            << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << budget_s << " s"
            << (in_time ? "" : ", TOO SLOW") << ")" << std::defaultfloat << '\n';
}

FpVector vec(const PrimeField& f, std::vector<Elem> c) { return FpVector(f, std::move(c)); }

/// sum_i a_q b_p - a_p b_q, written out.
Elem hand_form(const PrimeField& f, const FpVector& a, const FpVector& b) {
  Elem acc = 0;
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) acc += a[i] * b[i + 1] - a[i + 1] * b[i];
  return f.reduce(acc);
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "trit census", 1, [] {
    PrimeField f(3);
    const auto lines = enumerate_lagrangians(f, 1);
    const std::vector<FpSubspace> expected{rref({vec(f, {1, 0})}), rref({vec(f, {0, 1})}), rref({vec(f, {1, 1})}),
                                           rref({vec(f, {1, 2})})};
    const auto states = enumerate_pure_states(f, 1);
    std::ostringstream out, err;
    const int code = run_cli({"states", "--d", "3"}, out, err);
    const bool reported = out.str().find("12 pure states, 4 Lagrangian subspaces") != std::string::npos;
    return Outcome{lines == expected && states.size() == 12 && code == 0 && reported,
                   std::to_string(lines.size()) + " lines (q, p, q+p, q+2p), " + std::to_string(states.size()) + " states"};
  });

  criterion(2, "bracket equals symplectic form", 5, [] {
    std::size_t exhaustive = 0, random = 0, bad = 0;
    PrimeField f3(3);
    const auto pts = oracle::all_points(f3, 2);
    for (const auto& a : pts)
      for (Elem ca = 0; ca < 3; ++ca)
        for (const auto& b : pts)
          for (Elem cb = 0; cb < 3; ++cb)
            for (const auto& m : pts) {
              bad += poisson_bracket({a, ca}, {b, cb}, m) != hand_form(f3, a, b);
              ++exhaustive;
            }
    std::mt19937 rng(2024);
    for (Elem d : {5, 7}) {
      PrimeField f(d);
      std::uniform_int_distribution<Elem> u(0, d - 1);
      for (int t = 0; t < 10000; ++t) {
        const auto a = oracle::random_vector(f, 4, rng), b = oracle::random_vector(f, 4, rng);
        const auto m = oracle::random_vector(f, 4, rng);
        bad += poisson_bracket({a, u(rng)}, {b, u(rng)}, m) != hand_form(f, a, b);
        ++random;
      }
    }
    return Outcome{bad == 0 && exhaustive >= 4096 && random >= 10000,
                   std::to_string(exhaustive) + " exhaustive (d=3) + " + std::to_string(random) +
                       " random (d=5,7, n=2), " + std::to_string(bad) + " failures"};
  });

  criterion(3, "Spek Frobenius axioms and table", 10, [] {
    bool ok = true;
    std::string detail;
    for (Elem d : {3, 5, 7}) {
      const auto alg = build_spek_algebra(PrimeField(d));
      const bool all = verify_frobenius(alg).all() && verify_compact(alg);
      ok = ok && all;
      detail += "d=" + std::to_string(d) + (all ? " FMAUC ok; " : " axiom failure; ");
    }
    // first two rows of the Spek table, 1-based labels
    const auto spek = build_spek_algebra(PrimeField(3));
    const auto h = table_relation(spek);
    auto pair_index = [](std::size_t a, std::size_t b) { return static_cast<Relation::Index>((a - 1) * 9 + (b - 1)); };
    const bool row1 = h.image(0) == std::vector<Relation::Index>{pair_index(1, 1), pair_index(2, 2), pair_index(3, 3)};
    const bool row2 = h.image(1) == std::vector<Relation::Index>{pair_index(1, 2), pair_index(2, 3), pair_index(3, 1)};
    ok = ok && row1 && row2;
    detail += std::string("rows {1},{2} ") + (row1 && row2 ? "match" : "differ");
    return Outcome{ok, detail};
  });

  criterion(4, "groupoid extraction", 1, [] {
    const auto spek = build_spek_algebra(PrimeField(3));
    const Groupoid g = groupoid_from_frobenius(spek);
    bool labels = g.object_count() == 3 && g.objects().label(0) == "1" && g.objects().label(1) == "4" &&
                  g.objects().label(2) == "7";
    // axioms, checked directly
    bool axioms = true;
    const std::size_t n = g.arrow_count();
    for (std::size_t a = 0; a < n; ++a) {
      axioms = axioms && g.comp(g.unit(g.target(a)), a) == a && g.comp(a, g.unit(g.source(a))) == a;
      axioms = axioms && g.comp(a, g.inverse(a)) == g.unit(g.target(a)) && g.comp(g.inverse(a), a) == g.unit(g.source(a));
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = g.comp(a, b);
        axioms = axioms && ab.has_value() == (g.source(a) == g.target(b));
        if (!ab) continue;
        axioms = axioms && g.source(*ab) == g.source(b) && g.target(*ab) == g.target(a);
        for (std::size_t c = 0; c < n; ++c) {
          const auto bc = g.comp(b, c);
          if (!bc) continue;
          axioms = axioms && g.comp(*ab, c) == g.comp(a, *bc);
        }
      }
    }
    const bool round_trip = algebra_from_groupoid(g) == spek;
    return Outcome{labels && n == 9 && axioms && round_trip,
                   "objects {" + g.objects().label(0) + "," + g.objects().label(1) + "," + g.objects().label(2) + "}, " +
                       std::to_string(n) + " arrows, axioms " + (axioms ? "hold" : "fail") + ", round trip " +
                       (round_trip ? "equal" : "differs")};
  });

  criterion(5, "Lagrangian multiplication graph", 1, [] {
    PrimeField f(3);
    const auto graph = multiplication_graph(spek_symplectic_groupoid(f));
    const auto listed = rref({vec(f, {0, 0, 0, 1, 0, 1}), vec(f, {0, 1, 0, 0, 0, 1}), vec(f, {1, 0, 1, 0, 1, 0})});
    // brute-force twisted annihilators over all 729 points
    auto annihilator = [&](const FpSubspace& w, std::size_t product_leg) {
      std::vector<FpVector> perp;
      for (const auto& p : oracle::all_points(f, 6)) {
        bool ok = true;
        for (const auto& b : w.basis()) {
          Elem acc = 0;
          for (std::size_t leg = 0; leg < 3; ++leg) {
            const Elem s = hand_form(f, vec(f, {p[2 * leg], p[2 * leg + 1]}), vec(f, {b[2 * leg], b[2 * leg + 1]}));
            acc += leg == product_leg ? s : -s;
          }
          ok = ok && f.reduce(acc) == 0;
        }
        if (ok) perp.push_back(p);
      }
      return rref(f, 6, perp);
    };
    const bool graph_lag = graph.dim() == 3 && annihilator(graph, 0) == graph;
    const bool listed_lag = listed.dim() == 3 && annihilator(listed, 2) == listed;
    return Outcome{graph_lag && listed_lag, "graph dim " + std::to_string(graph.dim()) + " self-annihilating: " +
                                                (graph_lag ? "yes" : "no") + "; listed basis Lagrangian: " +
                                                (listed_lag ? "yes" : "no")};
  });

  criterion(6, "Weyl kernel calibration", 1, [] {
    double unit_err = 0, indicator_err = 0, round_err = 0;
    std::mt19937 rng(6);
    std::normal_distribution<double> g;
    int trials = 0;
    for (Elem d : {3, 5, 7}) {
      PrimeField f(d);
      unit_err = std::max(unit_err, weyl_transform(PhaseFn::constant(f, 1, 1.0)).max_abs_diff(CMatrix::identity(d)));
      for (Elem x0 = 0; x0 < d; ++x0) {
        CMatrix ket(d, d);
        ket(x0, x0) = 1.0;
        const auto ind = PhaseFn::from(f, 1, [&](const FpVector& m) { return Complex(m[0] == x0 ? 1.0 : 0.0); });
        indicator_err = std::max(indicator_err, weyl_transform(ind).max_abs_diff(ket));
      }
    }
    PrimeField f(5);
    for (; trials < 100; ++trials) {
      const auto fn = PhaseFn::from(f, 1, [&](const FpVector&) { return Complex(g(rng), g(rng)); });
      const CMatrix m = weyl_transform(fn);
      round_err = std::max(round_err, weyl_symbol(m, f).max_abs_diff(fn));
      round_err = std::max(round_err, weyl_transform(weyl_symbol(m, f)).max_abs_diff(m));
    }
    return Outcome{unit_err < 1e-12 && indicator_err < 1e-12 && round_err < 1e-10,
                   "T(1)-I " + sci(unit_err) + ", indicator " + sci(indicator_err) + ", " + std::to_string(trials) +
                       " round trips max " + sci(round_err)};
  });

  criterion(7, "commutation iff symplectically orthogonal", 1, [] {
    PrimeField f(3);
    std::size_t pairs = 0, agree = 0;
    for (const auto& a : oracle::all_points(f, 2)) {
      if (a.is_zero()) continue;
      for (const auto& b : oracle::all_points(f, 2)) {
        if (b.is_zero()) continue;
        const auto r = commutation_check(a, b);
        agree += r.projectors_commute == (hand_form(f, a, b) == 0);
        ++pairs;
      }
    }
    return Outcome{pairs == 64 && agree == 64, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree"};
  });

  criterion(8, "operational equivalence", 30, [] {
    bool ok = true;
    std::string detail;
    for (Elem d : {3, 5}) {
      const auto r = operational_equivalence_report(PrimeField(d), 1, 1e-9);
      ok = ok && r.passed;
      detail += "d=" + std::to_string(d) + " Wigner dev " + sci(r.max_wigner_deviation) + " Born dev " +
                sci(r.max_born_deviation) + "; ";
    }
    PrimeField f(3);
    double min_w = 1;
    for (const auto& s : enumerate_pure_states(f, 1)) min_w = std::min(min_w, wigner(stabilizer_projector(s), f).min_real());
    ok = ok && min_w >= -1e-12;
    detail += "12 trit Wigner min " + sci(min_w);
    return Outcome{ok, detail};
  });

  criterion(9, "characteristic-2 obstruction", 1, [] {
    bool field_refused = false;
    try {
      PrimeField f(2);
    } catch (const CharacteristicTwoError&) {
      field_refused = true;
    }
    bool cli_refused = true;
    for (std::vector<std::string> args : {std::vector<std::string>{"states", "--d", "2"},
                                          {"check", "--d", "2"},
                                          {"quantize", "--d", "2", "--all"},
                                          {"equivalence", "--d", "2"}}) {
      std::ostringstream out, err;
      cli_refused = cli_refused && run_cli(args, out, err) == kExitCharacteristicTwo &&
                    err.str().find("division by two") != std::string::npos;
    }
    // PrimeField is the only holder of 1/2; no even order may produce one.
    std::size_t even_built = 0;
    for (Elem d = 2; d <= 1000; d += 2) {
      try {
        PrimeField f(d);
        ++even_built;
      } catch (const std::invalid_argument&) {
      } catch (const std::domain_error&) {
      }
    }
    return Outcome{field_refused && cli_refused && even_built == 0,
                   std::string("PrimeField(2) ") + (field_refused ? "refused" : "accepted") + ", CLI entry points " +
                       (cli_refused ? "exit 3" : "not refused") + ", even orders built: " + std::to_string(even_built)};
  });

  criterion(10, "mutually unbiased trit bases", 1, [] {
    PrimeField f(3);
    const auto states = enumerate_pure_states(f, 1);
    std::vector<CMatrix> proj;
    for (const auto& s : states) proj.push_back(stabilizer_projector(s));
    std::size_t cross = 0;
    double worst = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        if (states[i].known() == states[j].known()) continue;
        worst = std::max(worst, std::abs(std::abs((proj[i] * proj[j]).trace()) - 1.0 / 3.0));
        ++cross;
      }
    }
    return Outcome{cross == 54 && worst < 1e-10, std::to_string(cross) + " cross pairs, max |tr - 1/3| " + sci(worst)};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
