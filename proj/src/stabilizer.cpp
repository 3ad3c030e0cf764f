#include "epistrict/stabilizer.hpp"

#include <stdexcept>

#include "epistrict/errors.hpp"
#include "epistrict/metaplectic.hpp"
#include "epistrict/weyl.hpp"

namespace epistrict {

bool PVM::is_valid() const {
  if (projectors.empty() || outcomes.size() != projectors.size()) return false;
  const std::size_t dim = projectors.front().dim();
  CMatrix sum(dim, dim);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    if (!projectors[i].is_projector()) return false;
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      if (!(projectors[i] * projectors[j]).approx_equal(CMatrix(dim, dim))) return false;
    }
    sum = sum + projectors[i];
  }
  return sum.approx_equal(CMatrix::identity(dim));
}

PVM position_pvm(const PrimeField& field, std::size_t n, std::size_t mode) {
  if (mode >= n) throw DimensionMismatch("mode out of range");
  const auto d = static_cast<std::size_t>(field.order());
  const std::size_t dim = hilbert_dim(field, n);
  std::size_t below = 1;
  for (std::size_t i = mode + 1; i < n; ++i) below *= d;
  PVM out;
  for (std::size_t c = 0; c < d; ++c) {
    CMatrix p(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if ((k / below) % d == c) p(k, k) = 1.0;
    }
    out.outcomes.push_back({static_cast<Elem>(c)});
    out.projectors.push_back(std::move(p));
  }
  return out;
}

PVM quadrature_pvm(const FpMatrix& s) {
  if (!is_symplectic_matrix(s)) throw std::invalid_argument("completion " + s.to_string() + " is not symplectic");
  const auto& F = s.field();
  const std::size_t n = s.rows() / 2;
  const CMatrix u = metaplectic(s.inverse().transpose());
  const CMatrix ud = u.adjoint();
  PVM out = position_pvm(F, n, 0);
  for (auto& p : out.projectors) p = u * p * ud;
  return out;
}

PVM quadrature_pvm(const FpVector& f) { return quadrature_pvm(symplectic_completion(f)); }

CMatrix stabilizer_projector(const FpSubspace& known, const FpVector& valuation) {
  if (valuation.size() != known.ambient_dim()) throw DimensionMismatch("valuation of another phase space");
  const auto& b = known.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (symplectic_form(b[i], b[j]) != 0) throw std::invalid_argument("subspace " + known.to_string() + " is not isotropic");
    }
  }
  CMatrix acc = CMatrix::identity(hilbert_dim(known.field(), known.ambient_dim() / 2));
  for (const auto& f : b) acc = acc * quadrature_pvm(f).projectors[static_cast<std::size_t>(f.dot(valuation))];
  return acc;
}

CMatrix stabilizer_projector(const EpistemicState& state) {
  return stabilizer_projector(state.known(), state.valuation());
}

CommutationResult commutation_check(const FpVector& f, const FpVector& g) {
  const PVM a = quadrature_pvm(f);
  const PVM b = quadrature_pvm(g);
  CommutationResult r;
  r.projectors_commute = true;
  for (const auto& p : a.projectors) {
    for (const auto& q : b.projectors) r.projectors_commute = r.projectors_commute && p.commutes_with(q);
  }
  r.symplectic_orthogonal = symplectic_form(f, g) == 0;
  return r;
}

}  // namespace epistrict
