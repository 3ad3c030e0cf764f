#include "epistrict/cmatrix.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "epistrict/errors.hpp"

namespace epistrict {

namespace {

void same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes disagree");
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, double tol)
    : m_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))), tol_(tol) {}

CMatrix::CMatrix(Eigen::MatrixXcd m, double tol) : m_(std::move(m)), tol_(tol) {
  if (!m_.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  if (!(tol_ > 0)) throw std::invalid_argument("tolerance must be positive");
}

CMatrix CMatrix::identity(std::size_t n, double tol) {
  return CMatrix(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)), tol);
}

std::size_t CMatrix::dim() const {
  if (rows() != cols()) throw DimensionMismatch("matrix is not square");
  return rows();
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols() != o.rows()) throw DimensionMismatch("matrix product shapes disagree");
  return CMatrix(m_ * o.m_, tol_);
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  same_shape(*this, o);
  return CMatrix(m_ + o.m_, tol_);
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  same_shape(*this, o);
  return CMatrix(m_ - o.m_, tol_);
}

Complex CMatrix::trace() const {
  dim();
  return m_.trace();
}

CMatrix CMatrix::kron(const CMatrix& o) const {
  Eigen::MatrixXcd out(m_.rows() * o.m_.rows(), m_.cols() * o.m_.cols());
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
      out.block(i * o.m_.rows(), j * o.m_.cols(), o.m_.rows(), o.m_.cols()) = m_(i, j) * o.m_;
    }
  }
  return CMatrix(std::move(out), tol_);
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
  same_shape(*this, o);
  return m_.size() == 0 ? 0.0 : (m_ - o.m_).cwiseAbs().maxCoeff();
}

bool CMatrix::is_hermitian() const { return rows() == cols() && approx_equal(adjoint()); }

bool CMatrix::is_unitary() const { return rows() == cols() && (*this * adjoint()).approx_equal(identity(rows())); }

bool CMatrix::is_projector() const { return is_hermitian() && (*this * *this).approx_equal(*this); }

bool CMatrix::commutes_with(const CMatrix& o) const { return (*this * o).approx_equal(o * *this); }

std::size_t CMatrix::rank() const {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m_);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) r += svd.singularValues()(i) > tol_ ? 1 : 0;
  return r;
}

std::optional<Complex> CMatrix::proportionality(const CMatrix& o) const {
  same_shape(*this, o);
  Eigen::Index bi = 0, bj = 0;
  m_.cwiseAbs().maxCoeff(&bi, &bj);
  if (std::abs(m_(bi, bj)) <= tol_) return std::nullopt;
  const Complex c = o.m_(bi, bj) / m_(bi, bj);
  if (std::abs(std::abs(c) - 1.0) > tol_) return std::nullopt;
  if (!(*this * c).approx_equal(o)) return std::nullopt;
  return c;
}

CMatrix CMatrix::phase_canonical() const {
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
      const double a = std::abs(m_(i, j));
      if (a > tol_) return CMatrix(m_ * (std::conj(m_(i, j)) / a), tol_);
    }
  }
  return *this;
}

std::string CMatrix::to_string(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
      const double eps = 0.5 * std::pow(10.0, -precision);
      auto clean = [&](double x) { return std::abs(x) < eps ? 0.0 : x; };
      os << (j ? "  " : "") << std::showpos << clean(m_(i, j).real()) << clean(m_(i, j).imag()) << 'i' << std::noshowpos;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace epistrict
