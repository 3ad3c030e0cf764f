#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "epistrict/fp_linalg.hpp"

namespace epistrict {

using Rational = boost::rational<std::int64_t>;

/// f(m) = coeffs . m + constant.
struct QuadratureFunctional {
  FpVector coeffs;
  Elem constant = 0;

  Elem operator()(const FpVector& m) const;
};

/// Finite-difference Poisson bracket evaluated literally at the point m:
///   sum_i (f(m+q_i) - f(m)) (g(m+p_i) - g(m)) - (f(m+p_i) - f(m)) (g(m+q_i) - g(m)).
Elem poisson_bracket(const QuadratureFunctional& f, const QuadratureFunctional& g, const FpVector& m);

/// True iff every pair Poisson-commutes, i.e. the coefficient span is isotropic.
bool jointly_knowable(const std::vector<QuadratureFunctional>& fs);

/// Knowledge of an agent: an isotropic subspace of known functionals plus a
/// valuation. The valuation is stored as the canonical representative of its
/// class modulo the ordinary annihilator of the known subspace, so equal
/// states compare equal.
class EpistemicState {
 public:
  /// Throws std::invalid_argument when `known` is not isotropic.
  EpistemicState(FpSubspace known, const FpVector& valuation);
  /// Valuation given as the values of the echelon basis functionals of `known`.
  static EpistemicState from_values(FpSubspace known, const std::vector<Elem>& values);

  const FpSubspace& known() const { return known_; }
  const FpVector& valuation() const { return valuation_; }
  std::size_t modes() const { return known_.ambient_dim() / 2; }
  const PrimeField& field() const { return known_.field(); }
  bool is_pure() const { return known_.dim() == modes(); }
  /// f_i . valuation for each echelon basis vector f_i of the known subspace.
  std::vector<Elem> values() const;

  bool operator==(const EpistemicState& o) const { return known_ == o.known_ && valuation_ == o.valuation_; }
  bool operator<(const EpistemicState& o) const;

 private:
  FpSubspace known_;
  FpVector valuation_;
};

/// m -> S m + a with S symplectic.
class AffineSymplectic {
 public:
  /// Throws std::invalid_argument if S is not symplectic or shapes disagree.
  AffineSymplectic(FpMatrix s, FpVector a);
  static AffineSymplectic identity(PrimeField field, std::size_t n);

  const FpMatrix& matrix() const { return s_; }
  const FpVector& displacement() const { return a_; }
  FpVector apply(const FpVector& m) const { return s_ * m + a_; }
  /// (this after first): m -> S (S1 m + a1) + a.
  AffineSymplectic after(const AffineSymplectic& first) const;
  AffineSymplectic inverse() const;

 private:
  FpMatrix s_;
  FpVector a_;
};

/// Exact probability table over Z_d^{2n}, indexed by FpVector::point_index().
class OnticDistribution {
 public:
  OnticDistribution(PrimeField field, std::size_t n, std::vector<Rational> weights);

  const PrimeField& field() const { return field_; }
  std::size_t modes() const { return n_; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational weight(const FpVector& m) const { return weights_.at(m.point_index()); }
  std::vector<FpVector> support() const;

  bool operator==(const OnticDistribution& o) const { return field_ == o.field_ && n_ == o.n_ && weights_ == o.weights_; }

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<Rational> weights_;
};

/// All pure states (Lagrangian known subspace, valuation class), ordered by
/// subspace then by valuation values.
std::vector<EpistemicState> enumerate_pure_states(PrimeField field, std::size_t n);

/// Uniform distribution over {m : f . m = f . v for all f in V}.
OnticDistribution to_ontic(const EpistemicState& state);

/// The state whose ontic distribution is the pushforward under T:
/// known' = S^{-T} known, valuation' = S v + a.
EpistemicState apply_transform(const EpistemicState& state, const AffineSymplectic& t);

/// Outcome statistics of the sharp measurement of the isotropic subspace W.
/// Outcomes are keyed by canonical valuation (as in EpistemicState(W, m)).
/// No post-measurement update is defined.
std::map<FpVector, Rational> measure(const EpistemicState& state, const FpSubspace& w);

/// The permutation of point indices induced by m -> S m + a.
std::vector<std::size_t> point_permutation(const AffineSymplectic& t);

}  // namespace epistrict
