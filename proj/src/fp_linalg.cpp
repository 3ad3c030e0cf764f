#include "epistrict/fp_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "epistrict/errors.hpp"

namespace epistrict {

namespace {

void require_same(const FpVector& a, const FpVector& b) {
  if (!(a.field() == b.field())) throw DimensionMismatch("vectors over different fields");
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// In-place reduced row echelon form over Z_d. Returns pivot columns; rows
// beyond the rank are dropped.
std::vector<std::size_t> reduce_rows(const PrimeField& f, std::vector<std::vector<Elem>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

FpSubspace nullspace(const PrimeField& f, std::vector<std::vector<Elem>> rows, std::size_t ncols) {
  const auto pivots = reduce_rows(f, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<FpVector> gens;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    gens.emplace_back(f, std::move(v));
  }
  return rref(f, ncols, gens);
}

}  // namespace

// ---- FpVector ---------------------------------------------------------------

FpVector::FpVector(PrimeField field, std::vector<Elem> coords) : field_(field), coords_(std::move(coords)) {
  for (auto& c : coords_) c = field_.reduce(c);
}

FpVector FpVector::zero(PrimeField field, std::size_t dim) { return FpVector(field, std::vector<Elem>(dim, 0)); }

FpVector FpVector::unit(PrimeField field, std::size_t dim, std::size_t i) {
  std::vector<Elem> c(dim, 0);
  c.at(i) = 1;
  return FpVector(field, std::move(c));
}

FpVector FpVector::from_index(PrimeField field, std::size_t dim, std::uint64_t index) {
  std::vector<Elem> c(dim, 0);
  const auto d = static_cast<std::uint64_t>(field.order());
  for (std::size_t i = dim; i-- > 0;) {
    c[i] = static_cast<Elem>(index % d);
    index /= d;
  }
  return FpVector(field, std::move(c));
}

bool FpVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Elem x) { return x == 0; });
}

FpVector FpVector::operator+(const FpVector& o) const {
  require_same(*this, o);
  std::vector<Elem> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return FpVector(field_, std::move(c));
}

FpVector FpVector::operator-(const FpVector& o) const {
  require_same(*this, o);
  std::vector<Elem> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = coords_[i] - o.coords_[i];
  return FpVector(field_, std::move(c));
}

FpVector FpVector::operator-() const { return scaled(-1); }

FpVector FpVector::scaled(Elem s) const {
  std::vector<Elem> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = field_.mul(coords_[i], s);
  return FpVector(field_, std::move(c));
}

Elem FpVector::dot(const FpVector& o) const {
  require_same(*this, o);
  Elem acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc = field_.add(acc, field_.mul(coords_[i], o.coords_[i]));
  return acc;
}

std::uint64_t FpVector::point_index() const {
  std::uint64_t idx = 0;
  const auto d = static_cast<std::uint64_t>(field_.order());
  for (auto c : coords_) idx = idx * d + static_cast<std::uint64_t>(c);
  return idx;
}

std::string FpVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool colex_less(const FpVector& a, const FpVector& b) {
  return std::lexicographical_compare(a.coords().rbegin(), a.coords().rend(), b.coords().rbegin(), b.coords().rend());
}

// ---- FpMatrix ---------------------------------------------------------------

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> row_major)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix data length does not match its shape");
  for (auto& x : data_) x = field_.reduce(x);
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVector>& cols) {
  if (cols.empty()) throw std::invalid_argument("from_columns needs at least one column");
  FpMatrix m(cols[0].field(), cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same(cols[0], cols[c]);
    for (std::size_t r = 0; r < m.rows_; ++r) m.data_[r * m.cols_ + c] = cols[c][r];
  }
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
  FpMatrix m(rows[0].field(), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[0], rows[r]);
    for (std::size_t c = 0; c < m.cols_; ++c) m.data_[r * m.cols_ + c] = rows[r][c];
  }
  return m;
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t dim) {
  FpMatrix m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1;
  return m;
}

FpMatrix FpMatrix::symplectic_j(PrimeField field, std::size_t n) {
  FpMatrix j(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(2 * i, 2 * i + 1, 1);
    j.set(2 * i + 1, 2 * i, -1);
  }
  return j;
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(field_, std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

FpVector FpMatrix::column(std::size_t c) const {
  std::vector<Elem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return FpVector(field_, std::move(v));
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (!(field_ == o.field_) || cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  FpMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out.data_[i * o.cols_ + j] = field_.add(out.data_[i * o.cols_ + j], field_.mul(a, o.at(k, j)));
      }
    }
  }
  return out;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (!(field_ == v.field()) || cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = field_.add(acc, field_.mul(at(i, k), v[k]));
    out[i] = acc;
  }
  return FpVector(field_, std::move(out));
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  }
  return t;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<std::vector<Elem>> aug(n, std::vector<Elem>(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = at(r, c);
    aug[r][n + r] = 1;
  }
  const auto pivots = reduce_rows(field_, aug, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  FpMatrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.data_[r * n + c] = aug[r][n + c];
  }
  return inv;
}

std::size_t FpMatrix::rank() const {
  std::vector<std::vector<Elem>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const FpVector rv = row(r);
    rows[r].assign(rv.coords().begin(), rv.coords().end());
  }
  return reduce_rows(field_, rows, cols_).size();
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) os << (r ? "," : "") << row(r).to_string();
  os << ']';
  return os.str();
}

// ---- FpSubspace -------------------------------------------------------------

FpSubspace::FpSubspace(PrimeField field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

FpSubspace rref(PrimeField field, std::size_t ambient_dim, const std::vector<FpVector>& vectors) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!(v.field() == field) || v.size() != ambient_dim) {
      throw DimensionMismatch("rref: vector " + v.to_string() + " is not in Z_" + std::to_string(field.order()) + "^" +
                              std::to_string(ambient_dim));
    }
    rows.emplace_back(v.coords().begin(), v.coords().end());
  }
  FpSubspace out(field, ambient_dim);
  out.pivots_ = reduce_rows(field, rows, ambient_dim);
  for (auto& r : rows) out.basis_.emplace_back(field, std::move(r));
  return out;
}

FpSubspace rref(const std::vector<FpVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("rref: empty list needs an explicit field and dimension");
  return rref(vectors[0].field(), vectors[0].size(), vectors);
}

FpVector FpSubspace::reduce(const FpVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("reduce: vector outside the ambient space");
  FpVector out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Elem c = out[pivots_[i]];
    if (c != 0) out = out - basis_[i].scaled(c);
  }
  return out;
}

bool FpSubspace::contains(const FpVector& v) const { return reduce(v).is_zero(); }

std::vector<FpVector> FpSubspace::elements() const {
  check_guard(field_, dim());
  const auto d = static_cast<std::uint64_t>(field_.order());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= d;
  std::vector<FpVector> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const FpVector coeff = FpVector::from_index(field_, dim(), k);
    FpVector v = FpVector::zero(field_, ambient_dim_);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coeff[i] != 0) v = v + basis_[i].scaled(coeff[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

FpSubspace FpSubspace::annihilator() const {
  std::vector<std::vector<Elem>> rows;
  for (const auto& b : basis_) rows.emplace_back(b.coords().begin(), b.coords().end());
  return nullspace(field_, std::move(rows), ambient_dim_);
}

FpSubspace FpSubspace::sum(const FpSubspace& o) const {
  std::vector<FpVector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return rref(field_, ambient_dim_, all);
}

FpSubspace FpSubspace::intersection(const FpSubspace& o) const {
  // (A cap B) = Ann(Ann(A) + Ann(B)).
  return annihilator().sum(o.annihilator()).annihilator();
}

bool FpSubspace::operator<(const FpSubspace& o) const {
  if (ambient_dim_ != o.ambient_dim_) return ambient_dim_ < o.ambient_dim_;
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (colex_less(basis_[i], o.basis_[i])) return true;
    if (colex_less(o.basis_[i], basis_[i])) return false;
  }
  return false;
}

std::string FpSubspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) os << (i ? "," : "") << basis_[i].to_string();
  os << '}';
  return os.str();
}

// ---- symplectic structure ---------------------------------------------------

Elem symplectic_form(const FpVector& f, const FpVector& g) {
  require_same(f, g);
  if (f.size() % 2 != 0) throw DimensionMismatch("symplectic form needs an even-dimensional space");
  const auto& F = f.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < f.modes(); ++i) {
    acc = F.add(acc, F.sub(F.mul(f[2 * i], g[2 * i + 1]), F.mul(f[2 * i + 1], g[2 * i])));
  }
  return acc;
}

FpSubspace symplectic_complement(const FpSubspace& v) {
  if (v.ambient_dim() % 2 != 0) throw DimensionMismatch("symplectic complement needs an even-dimensional space");
  const auto& F = v.field();
  std::vector<std::vector<Elem>> rows;
  for (const auto& b : v.basis()) {
    // <w, b> = sum_i w_{2i} b_{2i+1} - w_{2i+1} b_{2i}
    std::vector<Elem> r(v.ambient_dim());
    for (std::size_t i = 0; i < b.modes(); ++i) {
      r[2 * i] = b[2 * i + 1];
      r[2 * i + 1] = F.neg(b[2 * i]);
    }
    rows.push_back(std::move(r));
  }
  return nullspace(F, std::move(rows), v.ambient_dim());
}

SubspaceClass::Kind SubspaceClass::kind() const {
  if (lagrangian) return Kind::lagrangian;
  if (isotropic) return Kind::isotropic;
  if (coisotropic) return Kind::coisotropic;
  if (symplectic) return Kind::symplectic;
  return Kind::none;
}

SubspaceClass classify_subspace(const FpSubspace& v) {
  const FpSubspace perp = symplectic_complement(v);
  SubspaceClass c;
  c.isotropic = std::all_of(v.basis().begin(), v.basis().end(), [&](const FpVector& b) { return perp.contains(b); });
  c.coisotropic = std::all_of(perp.basis().begin(), perp.basis().end(), [&](const FpVector& b) { return v.contains(b); });
  c.lagrangian = c.isotropic && c.coisotropic;
  c.symplectic = v.intersection(perp).dim() == 0;
  return c;
}

bool is_symplectic_matrix(const FpMatrix& s) {
  if (s.rows() != s.cols()) throw DimensionMismatch("symplectic test needs a square matrix");
  if (s.rows() % 2 != 0) return false;
  const FpMatrix j = FpMatrix::symplectic_j(s.field(), s.rows() / 2);
  return s.transpose() * j * s == j;
}

std::optional<FpVector> solve(const std::vector<FpVector>& rows, const std::vector<Elem>& rhs, std::size_t unknowns) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("solve: row count and right-hand side differ");
  if (rows.empty()) throw std::invalid_argument("solve: empty system has no field");
  const PrimeField F = rows[0].field();
  std::vector<std::vector<Elem>> aug;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != unknowns) throw DimensionMismatch("solve: row length differs from unknown count");
    std::vector<Elem> r(rows[i].coords().begin(), rows[i].coords().end());
    r.push_back(F.reduce(rhs[i]));
    aug.push_back(std::move(r));
  }
  const auto pivots = reduce_rows(F, aug, unknowns + 1);
  std::vector<Elem> x(unknowns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == unknowns) return std::nullopt;
    x[pivots[r]] = aug[r][unknowns];
  }
  return FpVector(F, std::move(x));
}

std::uint64_t enumeration_guard() {
  if (const char* env = std::getenv("EPISTRICT_GUARD")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

void check_guard(const PrimeField& field, std::size_t dim) {
  const auto budget = enumeration_guard();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    points *= static_cast<std::uint64_t>(field.order());
    if (points > budget) {
      throw GuardExceeded("enumerating Z_" + std::to_string(field.order()) + "^" + std::to_string(dim) +
                          " exceeds the point budget of " + std::to_string(budget));
    }
  }
}

std::vector<FpSubspace> enumerate_lagrangians(PrimeField field, std::size_t n) {
  const std::size_t dim = 2 * n;
  check_guard(field, dim);
  // Grow isotropic subspaces one dimension at a time inside their complement.
  std::set<FpSubspace> level{FpSubspace(field, dim)};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<FpSubspace> next;
    for (const auto& v : level) {
      for (const auto& w : symplectic_complement(v).elements()) {
        if (v.contains(w)) continue;
        std::vector<FpVector> gens = v.basis();
        gens.push_back(w);
        next.insert(rref(field, dim, gens));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace epistrict
