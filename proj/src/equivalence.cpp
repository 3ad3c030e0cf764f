#include "epistrict/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "epistrict/epistricted.hpp"
#include "epistrict/stabilizer.hpp"
#include "epistrict/weyl.hpp"

namespace epistrict {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

/// tr(A B) without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b) {
  return (a.eigen().cwiseProduct(b.eigen().transpose())).sum();
}

}  // namespace

EquivalenceReport operational_equivalence_report(const PrimeField& field, std::size_t n, double tol) {
  EquivalenceReport r;
  r.d = field.order();
  r.n = n;
  r.tol = tol;
  const auto states = enumerate_pure_states(field, n);
  const auto lagrangians = enumerate_lagrangians(field, n);
  r.states = states.size();
  r.measurements = lagrangians.size();

  // Pure-state projectors double as the outcome projectors of Lagrangian measurements.
  std::map<EpistemicState, CMatrix> proj;
  r.min_wigner = 1.0;
  for (const auto& s : states) {
    CMatrix p = stabilizer_projector(s);
    const PhaseFn w = wigner(p, field);
    const OnticDistribution ontic = to_ontic(s);
    for (std::size_t i = 0; i < w.size(); ++i) {
      r.max_wigner_deviation = std::max(r.max_wigner_deviation, std::abs(w[i] - Complex(to_double(ontic.weights()[i]))));
    }
    r.min_wigner = std::min(r.min_wigner, w.min_real());
    proj.emplace(s, std::move(p));
  }

  for (const auto& s : states) {
    const CMatrix& rho = proj.at(s);
    for (std::size_t l = 0; l < lagrangians.size(); ++l) {
      const auto toy = measure(s, lagrangians[l]);
      // States come grouped by Lagrangian, d^n per group.
      const std::size_t block = states.size() / lagrangians.size();
      for (std::size_t k = l * block; k < (l + 1) * block; ++k) {
        const auto& t = states[k];
        const auto it = toy.find(t.valuation());
        const double expected = it == toy.end() ? 0.0 : to_double(it->second);
        const double born = trace_product(proj.at(t), rho).real();
        r.max_born_deviation = std::max(r.max_born_deviation, std::abs(born - expected));
        ++r.comparisons;
      }
    }
  }
  r.passed = r.max_wigner_deviation < tol && r.max_born_deviation < tol;
  return r;
}

}  // namespace epistrict
