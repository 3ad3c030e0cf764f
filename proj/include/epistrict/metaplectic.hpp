#pragma once

#include "epistrict/cmatrix.hpp"
#include "epistrict/fp_linalg.hpp"

namespace epistrict {

/// Unitary U(S) with U D(u) U^dagger = D(S u), phase fixed so the first
/// nonzero entry is real positive. Single-mode S is built from chirp,
/// dilation and Fourier factors; multi-mode S goes through
/// metaplectic_intertwiner. Throws std::invalid_argument for non-symplectic S.
CMatrix metaplectic(const FpMatrix& s);

/// U ~ sum_u D(S u) E D(u)^dagger for the first matrix unit E giving a
/// nonzero sum, rescaled to a unitary and phase-canonicalized.
CMatrix metaplectic_intertwiner(const FpMatrix& s);

/// Chirp diag(omega^{c x^2 / 2}) for the shear p += c q.
CMatrix chirp(const PrimeField& field, Elem c);
/// |x> -> |a x> for diag(a, 1/a).
CMatrix dilation(const PrimeField& field, Elem a);
/// Phi[y][x] = omega^{xy} / sqrt(d) for (q, p) -> (-p, q).
CMatrix fourier(const PrimeField& field);

/// Least functional g (lexicographically) with <f, g> = 1: g = e_j / c_j for
/// the last coordinate j with c_j = <f, e_j> nonzero.
FpVector conjugate_functional(const FpVector& f);
/// Symplectic matrix with columns (f, g, ...), g = conjugate_functional(f),
/// the remaining pairs from symplectic Gram-Schmidt over the standard basis.
/// Throws std::invalid_argument for f = 0.
FpMatrix symplectic_completion(const FpVector& f);

}  // namespace epistrict
