#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "epistrict/cmatrix.hpp"
#include "epistrict/fp_linalg.hpp"

namespace epistrict {

/// omega^k with omega = exp(2 pi i / d).
Complex omega_power(const PrimeField& field, Elem k);

/// Hilbert dimension d^n; throws GuardExceeded past the enumeration guard.
std::size_t hilbert_dim(const PrimeField& field, std::size_t n);

/// Shift X|x> = |x+1> on one mode.
CMatrix shift_x(const PrimeField& field);
/// Clock Z|x> = omega^x |x>.
CMatrix clock_z(const PrimeField& field);

/// Displacement D(a, b) = omega^{ab/2} X^a Z^b, mode 1 most significant.
/// u is given in (q1, p1, ..., qn, pn) order.
CMatrix displacement(const FpVector& u);
/// Phase and target of D(u)|k>, i.e. D(u)|k> = phase * |target>.
std::pair<Complex, std::size_t> displacement_action(const FpVector& u, std::size_t k);
/// Cocycle with D(u) D(v) = sigma(u, v) D(u + v).
Complex cocycle(const FpVector& u, const FpVector& v);
/// Operator of the phase-space functional f: W(f) = D(J^T f), so W(q) = Z
/// and W(p) = X^{-1}.
CMatrix weyl_operator(const FpVector& f);

/// Complex function on Z_d^{2n}, indexed by point index.
class PhaseFn {
 public:
  PhaseFn(PrimeField field, std::size_t n, std::vector<Complex> values);
  static PhaseFn constant(PrimeField field, std::size_t n, Complex c);
  static PhaseFn from(PrimeField field, std::size_t n, const std::function<Complex(const FpVector&)>& fn);

  const PrimeField& field() const { return field_; }
  std::size_t modes() const { return n_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t index) const { return values_[index]; }
  Complex at(const FpVector& m) const;
  std::size_t size() const { return values_.size(); }

  double max_abs_diff(const PhaseFn& o) const;
  /// Smallest real part.
  double min_real() const;
  double max_imag() const;

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<Complex> values_;
};

/// M[p][q] = d^{-n} sum_b f((p+q)/2, b) omega^{b.(p-q)}.
CMatrix weyl_transform(const PhaseFn& f);
/// Inverse of weyl_transform: f(x, b) = sum_t omega^{-b.t} M[x+t/2][x-t/2].
PhaseFn weyl_symbol(const CMatrix& m, const PrimeField& field);
/// Discrete Wigner function: symbol / d^n. Sums to tr(rho).
PhaseFn wigner(const CMatrix& rho, const PrimeField& field);
/// Moyal product: symbol of T(f) T(g).
PhaseFn star_product(const PhaseFn& f, const PhaseFn& g);

}  // namespace epistrict
