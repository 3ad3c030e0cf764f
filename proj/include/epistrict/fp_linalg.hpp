#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epistrict/prime_field.hpp"

namespace epistrict {

/// A vector of Z_d^k. Phase-space points and quadrature coefficient vectors
/// both use the coordinate order (q1, p1, ..., qn, pn).
class FpVector {
 public:
  FpVector(PrimeField field, std::vector<Elem> coords);

  static FpVector zero(PrimeField field, std::size_t dim);
  static FpVector unit(PrimeField field, std::size_t dim, std::size_t i);
  /// Unit functional q_i (resp. p_i) on n degrees of freedom, 0-based mode.
  static FpVector q_unit(PrimeField field, std::size_t n, std::size_t mode) { return unit(field, 2 * n, 2 * mode); }
  static FpVector p_unit(PrimeField field, std::size_t n, std::size_t mode) { return unit(field, 2 * n, 2 * mode + 1); }
  /// Inverse of point_index().
  static FpVector from_index(PrimeField field, std::size_t dim, std::uint64_t index);

  const PrimeField& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  /// Degrees of freedom; size() / 2.
  std::size_t modes() const { return coords_.size() / 2; }
  Elem operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Elem> coords() const { return coords_; }
  bool is_zero() const;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector operator-() const;
  FpVector scaled(Elem c) const;
  /// Ordinary (non-symplectic) pairing sum_i a_i b_i.
  Elem dot(const FpVector& o) const;

  /// Big-endian index: coords[0] is the most significant digit. For n = 1
  /// this is q * d + p.
  std::uint64_t point_index() const;

  bool operator==(const FpVector& o) const { return coords_ == o.coords_ && field_ == o.field_; }
  std::strong_ordering operator<=>(const FpVector& o) const { return coords_ <=> o.coords_; }

  std::string to_string() const;

 private:
  PrimeField field_;
  std::vector<Elem> coords_;
};

/// Compares from the last coordinate backwards; used for canonical subspace
/// order, which lists single-mode lines as q, p, q+p, q+2p, ...
bool colex_less(const FpVector& a, const FpVector& b);

class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> row_major);
  /// Matrix whose columns are the given vectors.
  static FpMatrix from_columns(const std::vector<FpVector>& cols);
  static FpMatrix from_rows(const std::vector<FpVector>& rows);
  static FpMatrix identity(PrimeField field, std::size_t dim);
  /// Block-diagonal J with n blocks [[0, 1], [-1, 0]].
  static FpMatrix symplectic_j(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = field_.reduce(v); }
  FpVector row(std::size_t r) const;
  FpVector column(std::size_t c) const;

  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& v) const;
  FpMatrix transpose() const;
  /// Throws std::domain_error when singular.
  FpMatrix inverse() const;
  std::size_t rank() const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && field_ == o.field_;
  }

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// A subspace of Z_d^k stored by its reduced row-echelon basis, so two equal
/// subspaces compare equal structurally.
class FpSubspace {
 public:
  /// The zero subspace.
  FpSubspace(PrimeField field, std::size_t ambient_dim);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FpVector& v) const;
  /// v minus its components along the echelon pivots; a canonical
  /// representative of the coset v + this.
  FpVector reduce(const FpVector& v) const;
  /// Every element, in lexicographic order of the coefficient tuple.
  std::vector<FpVector> elements() const;
  /// Ordinary annihilator {w : f . w = 0 for all f in this}.
  FpSubspace annihilator() const;
  FpSubspace sum(const FpSubspace& o) const;
  FpSubspace intersection(const FpSubspace& o) const;

  bool operator==(const FpSubspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_ && field_ == o.field_;
  }
  /// Canonical order: by dimension, then basis rows in colex order.
  bool operator<(const FpSubspace& o) const;

  std::string to_string() const;

 private:
  friend FpSubspace rref(PrimeField, std::size_t, const std::vector<FpVector>&);
  PrimeField field_;
  std::size_t ambient_dim_;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical echelon basis of span(vectors). All vectors must have length
/// ambient_dim and live over `field`.
FpSubspace rref(PrimeField field, std::size_t ambient_dim, const std::vector<FpVector>& vectors);
/// Convenience overload for a non-empty list.
FpSubspace rref(const std::vector<FpVector>& vectors);

/// <f, g> = f^T J g = sum_i (a_i b'_i - b_i a'_i) under the (q, p) order.
Elem symplectic_form(const FpVector& f, const FpVector& g);

/// {w : <w, b> = 0 for every b in V}.
FpSubspace symplectic_complement(const FpSubspace& v);

struct SubspaceClass {
  bool isotropic = false;
  bool coisotropic = false;
  bool lagrangian = false;
  bool symplectic = false;

  enum class Kind { lagrangian, isotropic, coisotropic, symplectic, none };
  /// Most specific label: lagrangian, then isotropic, coisotropic, symplectic.
  Kind kind() const;
};

SubspaceClass classify_subspace(const FpSubspace& v);

bool is_symplectic_matrix(const FpMatrix& s);

/// Solutions of rows . x = rhs; nullopt when inconsistent.
std::optional<FpVector> solve(const std::vector<FpVector>& rows, const std::vector<Elem>& rhs, std::size_t unknowns);

/// Point budget for exhaustive enumeration. Defaults to 10^6; the
/// EPISTRICT_GUARD environment variable overrides it.
std::uint64_t enumeration_guard();
/// Throws GuardExceeded unless d^dim fits the budget.
void check_guard(const PrimeField& field, std::size_t dim);

/// All Lagrangian subspaces of Z_d^{2n}, canonically ordered.
std::vector<FpSubspace> enumerate_lagrangians(PrimeField field, std::size_t n);

}  // namespace epistrict
