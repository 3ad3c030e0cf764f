#include "epistrict/epistricted.hpp"

#include <algorithm>
#include <stdexcept>

#include "epistrict/errors.hpp"

namespace epistrict {

namespace {

std::uint64_t point_count(const PrimeField& f, std::size_t dim) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < dim; ++i) c *= static_cast<std::uint64_t>(f.order());
  return c;
}

bool is_isotropic(const FpSubspace& v) {
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (symplectic_form(b[i], b[j]) != 0) return false;
    }
  }
  return true;
}

}  // namespace

Elem QuadratureFunctional::operator()(const FpVector& m) const {
  return coeffs.field().add(coeffs.dot(m), constant);
}

Elem poisson_bracket(const QuadratureFunctional& f, const QuadratureFunctional& g, const FpVector& m) {
  if (!(f.coeffs.field() == g.coeffs.field()) || f.coeffs.size() != g.coeffs.size() || m.size() != f.coeffs.size()) {
    throw DimensionMismatch("poisson bracket operands disagree on field or phase space");
  }
  const auto& F = m.field();
  const std::size_t n = m.modes();
  const Elem fm = f(m);
  const Elem gm = g(m);
  Elem acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const FpVector mq = m + FpVector::q_unit(F, n, i);
    const FpVector mp = m + FpVector::p_unit(F, n, i);
    const Elem term = F.sub(F.mul(F.sub(f(mq), fm), F.sub(g(mp), gm)), F.mul(F.sub(f(mp), fm), F.sub(g(mq), gm)));
    acc = F.add(acc, term);
  }
  return acc;
}

bool jointly_knowable(const std::vector<QuadratureFunctional>& fs) {
  if (fs.empty()) throw std::invalid_argument("jointly_knowable needs at least one functional");
  std::vector<FpVector> coeffs;
  for (const auto& f : fs) coeffs.push_back(f.coeffs);
  return is_isotropic(rref(coeffs));
}

// ---- EpistemicState ---------------------------------------------------------

EpistemicState::EpistemicState(FpSubspace known, const FpVector& valuation)
    : known_(std::move(known)), valuation_(valuation) {
  if (valuation_.size() != known_.ambient_dim() || !(valuation_.field() == known_.field())) {
    throw DimensionMismatch("valuation does not live in the phase space of the known subspace");
  }
  if (known_.ambient_dim() % 2 != 0) throw DimensionMismatch("phase space must be even-dimensional");
  if (!is_isotropic(known_)) {
    throw std::invalid_argument("known subspace " + known_.to_string() + " is not isotropic");
  }
  valuation_ = known_.annihilator().reduce(valuation_);
}

EpistemicState EpistemicState::from_values(FpSubspace known, const std::vector<Elem>& values) {
  if (values.size() != known.dim()) throw DimensionMismatch("one value per basis functional is required");
  // Echelon rows have a 1 at their own pivot and 0 at the others.
  FpVector v = FpVector::zero(known.field(), known.ambient_dim());
  for (std::size_t i = 0; i < values.size(); ++i) {
    v = v + FpVector::unit(known.field(), known.ambient_dim(), known.pivots()[i]).scaled(values[i]);
  }
  return EpistemicState(std::move(known), v);
}

std::vector<Elem> EpistemicState::values() const {
  std::vector<Elem> out;
  for (const auto& f : known_.basis()) out.push_back(f.dot(valuation_));
  return out;
}

bool EpistemicState::operator<(const EpistemicState& o) const {
  if (known_ < o.known_) return true;
  if (o.known_ < known_) return false;
  return values() < o.values();
}

// ---- AffineSymplectic -------------------------------------------------------

AffineSymplectic::AffineSymplectic(FpMatrix s, FpVector a) : s_(std::move(s)), a_(std::move(a)) {
  if (s_.rows() != s_.cols() || s_.rows() != a_.size()) throw DimensionMismatch("affine map shapes disagree");
  if (!is_symplectic_matrix(s_)) throw std::invalid_argument("matrix " + s_.to_string() + " is not symplectic");
}

AffineSymplectic AffineSymplectic::identity(PrimeField field, std::size_t n) {
  return AffineSymplectic(FpMatrix::identity(field, 2 * n), FpVector::zero(field, 2 * n));
}

AffineSymplectic AffineSymplectic::after(const AffineSymplectic& first) const {
  return AffineSymplectic(s_ * first.s_, s_ * first.a_ + a_);
}

AffineSymplectic AffineSymplectic::inverse() const {
  const FpMatrix inv = s_.inverse();
  return AffineSymplectic(inv, -(inv * a_));
}

// ---- OnticDistribution ------------------------------------------------------

OnticDistribution::OnticDistribution(PrimeField field, std::size_t n, std::vector<Rational> weights)
    : field_(field), n_(n), weights_(std::move(weights)) {
  if (weights_.size() != point_count(field_, 2 * n_)) throw DimensionMismatch("weight table has the wrong size");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw std::invalid_argument("negative ontic weight");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("ontic weights do not sum to one");
}

std::vector<FpVector> OnticDistribution::support() const {
  std::vector<FpVector> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != Rational(0)) out.push_back(FpVector::from_index(field_, 2 * n_, i));
  }
  return out;
}

// ---- operations -------------------------------------------------------------

std::vector<EpistemicState> enumerate_pure_states(PrimeField field, std::size_t n) {
  std::vector<EpistemicState> out;
  const auto classes = point_count(field, n);
  for (const auto& lag : enumerate_lagrangians(field, n)) {
    for (std::uint64_t k = 0; k < classes; ++k) {
      const FpVector vals = FpVector::from_index(field, n, k);
      out.push_back(EpistemicState::from_values(lag, std::vector<Elem>(vals.coords().begin(), vals.coords().end())));
    }
  }
  return out;
}

OnticDistribution to_ontic(const EpistemicState& state) {
  const auto& F = state.field();
  const std::size_t dim = state.known().ambient_dim();
  check_guard(F, dim);
  // A(V, v) = v + Ann(V).
  const auto fibre = state.known().annihilator().elements();
  std::vector<Rational> w(point_count(F, dim), Rational(0));
  const Rational p(1, static_cast<std::int64_t>(fibre.size()));
  for (const auto& x : fibre) w[(state.valuation() + x).point_index()] = p;
  return OnticDistribution(F, state.modes(), std::move(w));
}

EpistemicState apply_transform(const EpistemicState& state, const AffineSymplectic& t) {
  if (t.matrix().rows() != state.known().ambient_dim()) throw DimensionMismatch("transform acts on another phase space");
  const FpMatrix inv_t = t.matrix().inverse().transpose();
  std::vector<FpVector> gens;
  for (const auto& f : state.known().basis()) gens.push_back(inv_t * f);
  return EpistemicState(rref(state.field(), state.known().ambient_dim(), gens), t.apply(state.valuation()));
}

std::map<FpVector, Rational> measure(const EpistemicState& state, const FpSubspace& w) {
  if (w.ambient_dim() != state.known().ambient_dim()) throw DimensionMismatch("measurement on another phase space");
  if (!is_isotropic(w)) throw std::invalid_argument("measured subspace " + w.to_string() + " is not isotropic");
  const FpSubspace ann = w.annihilator();
  const OnticDistribution ontic = to_ontic(state);
  std::map<FpVector, Rational> out;
  const auto& weights = ontic.weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == Rational(0)) continue;
    const FpVector m = FpVector::from_index(state.field(), w.ambient_dim(), i);
    out[ann.reduce(m)] += weights[i];
  }
  return out;
}

std::vector<std::size_t> point_permutation(const AffineSymplectic& t) {
  const auto& F = t.matrix().field();
  const std::size_t dim = t.matrix().rows();
  check_guard(F, dim);
  const auto count = point_count(F, dim);
  std::vector<std::size_t> perm(count);
  for (std::uint64_t i = 0; i < count; ++i) perm[i] = t.apply(FpVector::from_index(F, dim, i)).point_index();
  return perm;
}

}  // namespace epistrict
