#include "epistrict/metaplectic.hpp"

#include <cmath>
#include <stdexcept>

#include "epistrict/errors.hpp"
#include "epistrict/weyl.hpp"

namespace epistrict {

namespace {

void require_symplectic(const FpMatrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) throw DimensionMismatch("symplectic matrix must be 2n x 2n");
  if (!is_symplectic_matrix(s)) throw std::invalid_argument("matrix " + s.to_string() + " is not symplectic");
}

CMatrix single_mode(const FpMatrix& s) {
  const auto& F = s.field();
  const Elem a = s.at(0, 0), b = s.at(0, 1), c = s.at(1, 0);
  if (a == 0) {
    // S = F^{-1} (F S) and F S has a nonzero corner.
    const FpMatrix f(F, 2, 2, {0, -1, 1, 0});
    return fourier(F).adjoint() * single_mode(f * s);
  }
  // S = L(c/a) diag(a, 1/a) [[1, b/a], [0, 1]], the last factor being F L(-b/a) F^{-1}.
  const Elem ia = F.inv(a);
  const CMatrix phi = fourier(F);
  const CMatrix upper = phi * chirp(F, F.neg(F.mul(b, ia))) * phi.adjoint();
  return chirp(F, F.mul(c, ia)) * dilation(F, a) * upper;
}

}  // namespace

CMatrix chirp(const PrimeField& F, Elem c) {
  const auto d = static_cast<std::size_t>(F.order());
  CMatrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    const auto xe = static_cast<Elem>(x);
    m(x, x) = omega_power(F, F.mul(F.mul(F.inv2(), c), F.mul(xe, xe)));
  }
  return m;
}

CMatrix dilation(const PrimeField& F, Elem a) {
  if (F.reduce(a) == 0) throw std::invalid_argument("dilation by zero");
  const auto d = static_cast<std::size_t>(F.order());
  CMatrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) m(static_cast<std::size_t>(F.mul(a, static_cast<Elem>(x))), x) = 1.0;
  return m;
}

CMatrix fourier(const PrimeField& F) {
  const auto d = static_cast<std::size_t>(F.order());
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix m(d, d);
  for (std::size_t y = 0; y < d; ++y) {
    for (std::size_t x = 0; x < d; ++x) m(y, x) = omega_power(F, static_cast<Elem>(x * y)) * norm;
  }
  return m;
}

CMatrix metaplectic(const FpMatrix& s) {
  require_symplectic(s);
  if (s.rows() == 2) return single_mode(s).phase_canonical();
  return metaplectic_intertwiner(s);
}

CMatrix metaplectic_intertwiner(const FpMatrix& s) {
  require_symplectic(s);
  const auto& F = s.field();
  const std::size_t n = s.rows() / 2;
  const std::size_t dim = hilbert_dim(F, n);
  const std::size_t points = dim * dim;
  std::vector<FpVector> us, sus;
  for (std::size_t i = 0; i < points; ++i) {
    us.push_back(FpVector::from_index(F, 2 * n, i));
    sus.push_back(s * us.back());
  }
  // D(Su)|j><k|D(u)^dagger = (D(Su)|j>)(D(u)|k>)^dagger is rank one.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      CMatrix u(dim, dim);
      for (std::size_t i = 0; i < points; ++i) {
        const auto [pl, tl] = displacement_action(sus[i], j);
        const auto [pr, tr] = displacement_action(us[i], k);
        u(tl, tr) += pl * std::conj(pr);
      }
      const double c = (u * u.adjoint())(0, 0).real();
      if (c < 1e-6) continue;
      return (u * Complex(1.0 / std::sqrt(c))).phase_canonical();
    }
  }
  throw std::logic_error("no nonzero intertwiner found");
}

FpVector conjugate_functional(const FpVector& f) {
  if (f.size() % 2 != 0 || f.size() == 0) throw DimensionMismatch("functional must live on an even-dimensional space");
  if (f.is_zero()) throw std::invalid_argument("the zero functional has no conjugate");
  const auto& F = f.field();
  for (std::size_t j = f.size(); j-- > 0;) {
    // <f, e_j>: -f_p on a q slot, f_q on a p slot.
    const Elem c = j % 2 == 0 ? F.neg(f[j + 1]) : f[j - 1];
    if (c != 0) return FpVector::unit(F, f.size(), j).scaled(F.inv(c));
  }
  throw std::logic_error("unreachable: nonzero functional pairs with some unit vector");
}

FpMatrix symplectic_completion(const FpVector& f) {
  const auto& F = f.field();
  const std::size_t dim = f.size();
  std::vector<FpVector> cols{f, conjugate_functional(f)};
  // Project v off every hyperbolic pair (e, h) with <e, h> = 1.
  auto project = [&](FpVector v) {
    for (std::size_t i = 0; i < cols.size(); i += 2) {
      const FpVector& e = cols[i];
      const FpVector& h = cols[i + 1];
      v = v - e.scaled(symplectic_form(v, h)) + h.scaled(symplectic_form(v, e));
    }
    return v;
  };
  while (cols.size() < dim) {
    std::vector<FpVector> rest;
    for (std::size_t i = 0; i < dim; ++i) {
      FpVector v = project(FpVector::unit(F, dim, i));
      if (!v.is_zero()) rest.push_back(std::move(v));
    }
    bool found = false;
    for (std::size_t a = 0; a < rest.size() && !found; ++a) {
      for (std::size_t b = 0; b < rest.size() && !found; ++b) {
        const Elem w = symplectic_form(rest[a], rest[b]);
        if (w == 0) continue;
        cols.push_back(rest[a]);
        cols.push_back(rest[b].scaled(F.inv(w)));
        found = true;
      }
    }
    if (!found) throw std::logic_error("symplectic completion stalled");
  }
  FpMatrix s = FpMatrix::from_columns(cols);
  if (!is_symplectic_matrix(s)) throw std::logic_error("symplectic completion is not symplectic");
  return s;
}

}  // namespace epistrict
