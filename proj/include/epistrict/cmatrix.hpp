#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace epistrict {

using Complex = std::complex<double>;

/// Dense complex matrix with a stored comparison tolerance. Equality and the
/// structural predicates are all tolerance-based.
class CMatrix {
 public:
  static constexpr double default_tol = 1e-9;

  /// Zero matrix.
  CMatrix(std::size_t rows, std::size_t cols, double tol = default_tol);
  /// Throws std::invalid_argument on non-finite entries.
  explicit CMatrix(Eigen::MatrixXcd m, double tol = default_tol);
  static CMatrix identity(std::size_t n, double tol = default_tol);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  /// Side length; throws DimensionMismatch when not square.
  std::size_t dim() const;
  double tol() const { return tol_; }
  CMatrix with_tol(double tol) const { return CMatrix(m_, tol); }
  const Eigen::MatrixXcd& eigen() const { return m_; }

  Complex operator()(std::size_t i, std::size_t j) const { return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  Complex& operator()(std::size_t i, std::size_t j) { return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(Complex c) const { return CMatrix(m_ * c, tol_); }
  CMatrix adjoint() const { return CMatrix(m_.adjoint(), tol_); }
  Complex trace() const;
  /// Kronecker product, this factor most significant.
  CMatrix kron(const CMatrix& o) const;

  /// Largest entrywise modulus of the difference.
  double max_abs_diff(const CMatrix& o) const;
  bool approx_equal(const CMatrix& o) const { return max_abs_diff(o) <= tol_; }
  bool operator==(const CMatrix& o) const { return approx_equal(o); }
  bool is_hermitian() const;
  bool is_unitary() const;
  bool is_projector() const;
  bool commutes_with(const CMatrix& o) const;
  /// Numerical rank via singular values above tol.
  std::size_t rank() const;
  /// If o = c * this for a unimodular c, returns c.
  std::optional<Complex> proportionality(const CMatrix& o) const;
  /// Global phase fixed so the first entry of modulus above tol is real positive.
  CMatrix phase_canonical() const;

  std::string to_string(int precision = 6) const;

 private:
  Eigen::MatrixXcd m_;
  double tol_;
};

inline CMatrix operator*(Complex c, const CMatrix& m) { return m * c; }

}  // namespace epistrict
