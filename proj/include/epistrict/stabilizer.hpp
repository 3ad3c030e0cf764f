#pragma once

#include <vector>

#include "epistrict/cmatrix.hpp"
#include "epistrict/epistricted.hpp"
#include "epistrict/fp_linalg.hpp"

namespace epistrict {

/// Projection-valued measure with labelled outcomes.
struct PVM {
  std::vector<std::vector<Elem>> outcomes;
  std::vector<CMatrix> projectors;

  std::size_t size() const { return projectors.size(); }
  /// Hermitian idempotents, pairwise orthogonal, summing to the identity.
  bool is_valid() const;
};

/// Computational-basis measurement of q on one mode: |c><c| on that mode.
PVM position_pvm(const PrimeField& field, std::size_t n, std::size_t mode = 0);
/// Measurement of the functional f, Pi_f(c) = U(P) (Pi_q1(c)) U(P)^dagger with
/// P = S^{-T} for the symplectic completion S of f. Throws on f = 0.
PVM quadrature_pvm(const FpVector& f);
/// Same with an explicitly chosen completion; f is column 0 of s.
PVM quadrature_pvm(const FpMatrix& s);

/// Product over the echelon basis f_i of Pi_{f_i}(f_i . v). The zero
/// subspace gives the identity. Throws std::invalid_argument unless V is isotropic.
CMatrix stabilizer_projector(const FpSubspace& known, const FpVector& valuation);
CMatrix stabilizer_projector(const EpistemicState& state);

struct CommutationResult {
  /// Every projector of one PVM commutes with every projector of the other.
  bool projectors_commute = false;
  /// <f, g> == 0.
  bool symplectic_orthogonal = false;
};
CommutationResult commutation_check(const FpVector& f, const FpVector& g);

}  // namespace epistrict
