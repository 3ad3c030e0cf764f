#include "epistrict/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "epistrict/errors.hpp"

namespace epistrict {

namespace {

std::size_t upow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Base-d digits of k, most significant first.
std::vector<Elem> digits(std::size_t k, std::size_t d, std::size_t n) {
  std::vector<Elem> out(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Elem>(k % d);
    k /= d;
  }
  return out;
}

std::size_t undigits(const std::vector<Elem>& ds, std::size_t d) {
  std::size_t k = 0;
  for (Elem x : ds) k = k * d + static_cast<std::size_t>(x);
  return k;
}

/// Precomputed powers of omega.
std::vector<Complex> roots(const PrimeField& f) {
  const auto d = static_cast<std::size_t>(f.order());
  std::vector<Complex> w(d);
  for (std::size_t k = 0; k < d; ++k) w[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
  return w;
}

std::size_t modes_of(const CMatrix& m, const PrimeField& field) {
  const std::size_t dim = m.dim();
  const auto d = static_cast<std::size_t>(field.order());
  std::size_t n = 0, p = 1;
  while (p < dim) {
    p *= d;
    ++n;
  }
  if (p != dim || n == 0) throw DimensionMismatch("matrix dimension is not a positive power of d");
  return n;
}

}  // namespace

Complex omega_power(const PrimeField& field, Elem k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(field.reduce(k)) / static_cast<double>(field.order()));
}

std::size_t hilbert_dim(const PrimeField& field, std::size_t n) {
  check_guard(field, 2 * n);
  return upow(static_cast<std::size_t>(field.order()), n);
}

CMatrix shift_x(const PrimeField& field) {
  const auto d = static_cast<std::size_t>(field.order());
  CMatrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) m((x + 1) % d, x) = 1.0;
  return m;
}

CMatrix clock_z(const PrimeField& field) {
  const auto d = static_cast<std::size_t>(field.order());
  CMatrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) m(x, x) = omega_power(field, static_cast<Elem>(x));
  return m;
}

std::pair<Complex, std::size_t> displacement_action(const FpVector& u, std::size_t k) {
  const auto& F = u.field();
  const auto d = static_cast<std::size_t>(F.order());
  const std::size_t n = u.modes();
  auto xs = digits(k, d, n);
  Elem phase = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Elem a = u[2 * i], b = u[2 * i + 1];
    phase += F.mul(F.inv2(), F.mul(a, b)) + F.mul(b, xs[i]);
    xs[i] = F.add(xs[i], a);
  }
  return {omega_power(F, phase), undigits(xs, d)};
}

CMatrix displacement(const FpVector& u) {
  if (u.size() % 2 != 0 || u.size() == 0) throw DimensionMismatch("displacement needs a nonempty even-length vector");
  const std::size_t dim = hilbert_dim(u.field(), u.modes());
  CMatrix m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [ph, t] = displacement_action(u, k);
    m(t, k) = ph;
  }
  return m;
}

Complex cocycle(const FpVector& u, const FpVector& v) {
  const auto& F = u.field();
  return omega_power(F, F.neg(F.mul(F.inv2(), symplectic_form(u, v))));
}

CMatrix weyl_operator(const FpVector& f) {
  const auto& F = f.field();
  std::vector<Elem> c(f.size());
  for (std::size_t i = 0; i + 1 < f.size(); i += 2) {
    c[i] = F.neg(f[i + 1]);
    c[i + 1] = f[i];
  }
  return displacement(FpVector(F, std::move(c)));
}

// ---- PhaseFn ----------------------------------------------------------------

PhaseFn::PhaseFn(PrimeField field, std::size_t n, std::vector<Complex> values)
    : field_(field), n_(n), values_(std::move(values)) {
  if (values_.size() != upow(static_cast<std::size_t>(field_.order()), 2 * n_)) {
    throw DimensionMismatch("phase-space function has the wrong number of values");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::invalid_argument("non-finite phase-space value");
  }
}

PhaseFn PhaseFn::constant(PrimeField field, std::size_t n, Complex c) {
  check_guard(field, 2 * n);
  return PhaseFn(field, n, std::vector<Complex>(upow(static_cast<std::size_t>(field.order()), 2 * n), c));
}

PhaseFn PhaseFn::from(PrimeField field, std::size_t n, const std::function<Complex(const FpVector&)>& fn) {
  check_guard(field, 2 * n);
  const std::size_t count = upow(static_cast<std::size_t>(field.order()), 2 * n);
  std::vector<Complex> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = fn(FpVector::from_index(field, 2 * n, i));
  return PhaseFn(field, n, std::move(v));
}

Complex PhaseFn::at(const FpVector& m) const {
  if (m.size() != 2 * n_) throw DimensionMismatch("point of another phase space");
  return values_[m.point_index()];
}

double PhaseFn::max_abs_diff(const PhaseFn& o) const {
  if (o.values_.size() != values_.size()) throw DimensionMismatch("phase-space functions on different spaces");
  double m = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) m = std::max(m, std::abs(values_[i] - o.values_[i]));
  return m;
}

double PhaseFn::min_real() const {
  double m = values_.front().real();
  for (const auto& v : values_) m = std::min(m, v.real());
  return m;
}

double PhaseFn::max_imag() const {
  double m = 0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

// ---- transforms -------------------------------------------------------------

CMatrix weyl_transform(const PhaseFn& f) {
  const auto& F = f.field();
  const auto d = static_cast<std::size_t>(F.order());
  const std::size_t n = f.modes();
  const std::size_t dim = upow(d, n);
  const auto w = roots(F);
  const double norm = 1.0 / static_cast<double>(dim);
  CMatrix m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const auto pd = digits(p, d, n);
    for (std::size_t q = 0; q < dim; ++q) {
      const auto qd = digits(q, d, n);
      std::vector<Elem> x(n), delta(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = F.mul(F.inv2(), pd[i] + qd[i]);
        delta[i] = F.sub(pd[i], qd[i]);
      }
      Complex acc = 0;
      for (std::size_t bi = 0; bi < dim; ++bi) {
        const auto b = digits(bi, d, n);
        std::size_t idx = 0;
        Elem ph = 0;
        for (std::size_t i = 0; i < n; ++i) {
          idx = (idx * d + static_cast<std::size_t>(x[i])) * d + static_cast<std::size_t>(b[i]);
          ph += b[i] * delta[i];
        }
        acc += f[idx] * w[static_cast<std::size_t>(F.reduce(ph))];
      }
      m(p, q) = acc * norm;
    }
  }
  return m;
}

PhaseFn weyl_symbol(const CMatrix& m, const PrimeField& F) {
  const std::size_t n = modes_of(m, F);
  const auto d = static_cast<std::size_t>(F.order());
  const std::size_t dim = m.dim();
  const auto w = roots(F);
  std::vector<Complex> out(dim * dim);
  for (std::size_t xi = 0; xi < dim; ++xi) {
    const auto x = digits(xi, d, n);
    for (std::size_t bi = 0; bi < dim; ++bi) {
      const auto b = digits(bi, d, n);
      Complex acc = 0;
      for (std::size_t ti = 0; ti < dim; ++ti) {
        const auto t = digits(ti, d, n);
        std::vector<Elem> r(n), c(n);
        Elem ph = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const Elem h = F.mul(F.inv2(), t[i]);
          r[i] = F.add(x[i], h);
          c[i] = F.sub(x[i], h);
          ph -= b[i] * t[i];
        }
        acc += w[static_cast<std::size_t>(F.reduce(ph))] * m(undigits(r, d), undigits(c, d));
      }
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx = (idx * d + static_cast<std::size_t>(x[i])) * d + static_cast<std::size_t>(b[i]);
      out[idx] = acc;
    }
  }
  return PhaseFn(F, n, std::move(out));
}

PhaseFn wigner(const CMatrix& rho, const PrimeField& field) {
  PhaseFn s = weyl_symbol(rho, field);
  const double norm = 1.0 / static_cast<double>(rho.dim());
  std::vector<Complex> v = s.values();
  for (auto& x : v) x *= norm;
  return PhaseFn(field, s.modes(), std::move(v));
}

PhaseFn star_product(const PhaseFn& f, const PhaseFn& g) {
  if (!(f.field() == g.field()) || f.modes() != g.modes()) throw DimensionMismatch("star product operands differ");
  return weyl_symbol(weyl_transform(f) * weyl_transform(g), f.field());
}

}  // namespace epistrict
