#include "mvs/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "mvs/errors.hpp"

namespace mvs {

// ---------------------------------------------------------------- Vector

Vector::Vector(Field field, std::size_t m) : field_(field), coords_(m, Scalar::zero(field)) {}

Vector::Vector(Field field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.field() != field_) throw FieldMismatch("vector coordinate outside " + field_.to_string());
  }
}

Vector::Vector(Field field, std::initializer_list<long> coords) : field_(field) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(field, c);
}

Vector Vector::unit(Field field, std::size_t m, std::size_t i) {
  Vector v(field, m);
  v.coords_.at(i) = Scalar::one(field);
  return v;
}

Vector Vector::parse(Field field, std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
    throw PreconditionError("vector must be parenthesized: '" + std::string(text) + "'");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::vector<Scalar> coords;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      coords.push_back(Scalar::parse(field, body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Vector(field, std::move(coords));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

void Vector::require_compatible(const Vector& other) const {
  if (field_ != other.field_) throw FieldMismatch("vectors over different fields");
  if (coords_.size() != other.coords_.size()) {
    throw DimensionMismatch("vector lengths " + std::to_string(coords_.size()) + " and " +
                            std::to_string(other.coords_.size()));
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Vector operator*(const Scalar& a, const Vector& v) {
  if (a.field() != v.field_) throw FieldMismatch("scalar and vector over different fields");
  Vector out = v;
  for (auto& c : out.coords_) c *= a;
  return out;
}

bool operator<(const Vector& a, const Vector& b) {
  a.require_compatible(b);
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    out += coords_[i].to_string();
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].field() != field) throw FieldMismatch("matrix row over wrong field");
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row of length " + std::to_string(rows[r].size()) + ", expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.field() != field_) throw FieldMismatch("matrix and vector over different fields");
  if (x.size() != cols_) {
    throw DimensionMismatch("cannot apply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " matrix to vector of length " + std::to_string(x.size()));
  }
  Vector y(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (rhs.field_ != field_) throw FieldMismatch("matrices over different fields");
  if (rhs.rows_ != cols_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

RowEchelon rref(const Matrix& input) {
  RowEchelon out{input, 0, {}};
  Matrix& m = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    }
    const Scalar inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.rank = lead_row;
  return out;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::zero(Field field, std::size_t m) { return subspace_from_generators(field, m, {}); }

Subspace Subspace::full(Field field, std::size_t m) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(Vector::unit(field, m, i));
  return subspace_from_generators(field, m, gens);
}

Subspace subspace_from_generators(Field field, std::size_t m, std::span<const Vector> gens) {
  Subspace s;
  s.field_ = field;
  s.ambient_ = m;
  if (gens.empty()) return s;
  RowEchelon e = rref(Matrix::from_rows(field, m, gens));
  for (std::size_t r = 0; r < e.rank; ++r) s.rows_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Vector Subspace::residual(const Vector& x) const {
  if (x.field() != field_) throw FieldMismatch("vector and subspace over different fields");
  if (x.size() != ambient_) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in F^" +
                            std::to_string(ambient_));
  }
  Vector r = x;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar a = r[pivots_[i]];
    if (!a.is_zero()) r -= a * rows_[i];
  }
  return r;
}

bool Subspace::contains(const Vector& x) const { return residual(x).is_zero(); }

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ' ';
    out += rows_[i].to_string();
  }
  out += '}';
  return out;
}

namespace {

void require_same_space(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw FieldMismatch("subspaces over different fields");
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("subspaces of F^" + std::to_string(a.ambient()) + " and F^" +
                            std::to_string(b.ambient()));
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  std::vector<Vector> gens = a.rows();
  gens.insert(gens.end(), b.rows().begin(), b.rows().end());
  return subspace_from_generators(a.field(), a.ambient(), gens);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  const Field field = a.field();
  const std::size_t m = a.ambient();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(field, m);
  Matrix stacked(field, a.rank() + b.rank(), 2 * m);
  for (std::size_t r = 0; r < a.rank(); ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      stacked(r, c) = a.rows()[r][c];
      stacked(r, m + c) = a.rows()[r][c];
    }
  }
  for (std::size_t r = 0; r < b.rank(); ++r) {
    for (std::size_t c = 0; c < m; ++c) stacked(a.rank() + r, c) = b.rows()[r][c];
  }
  const RowEchelon e = rref(stacked);
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] < m) continue;
    Vector v(field, m);
    for (std::size_t c = 0; c < m; ++c) v[c] = e.reduced(r, m + c);
    gens.push_back(std::move(v));
  }
  return subspace_from_generators(field, m, gens);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  if (a.rank() > b.rank()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(), [&](const Vector& v) { return b.contains(v); });
}

bool linearly_independent(std::span<const Vector> xs) {
  if (xs.empty()) return true;
  const std::size_t m = xs.front().size();
  if (xs.size() > m) return false;
  return rref(Matrix::from_rows(xs.front().field(), m, xs)).rank == xs.size();
}

// ------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(Field field, std::size_t n) { return LinearMap(Matrix::identity(field, n)); }

LinearMap LinearMap::zero(Field field, std::size_t domain, std::size_t codomain) {
  return LinearMap(Matrix(field, codomain, domain));
}

Subspace kernel(const LinearMap& f) {
  const Matrix& a = f.matrix();
  const std::size_t n = a.cols();
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = Vector::unit(a.field(), n, free);
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return subspace_from_generators(a.field(), n, gens);
}

Subspace image(const LinearMap& f) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < f.domain_dim(); ++c) cols.push_back(f.matrix().column(c));
  return subspace_from_generators(f.field(), f.codomain_dim(), cols);
}

Subspace map_subspace(const LinearMap& f, const Subspace& s) {
  if (s.ambient() != f.domain_dim()) throw DimensionMismatch("subspace outside the map's domain");
  std::vector<Vector> gens;
  for (const auto& row : s.rows()) gens.push_back(f(row));
  return subspace_from_generators(f.field(), f.codomain_dim(), gens);
}

Subspace preimage_subspace(const LinearMap& f, const Subspace& s) {
  if (s.field() != f.field()) throw FieldMismatch("map and subspace over different fields");
  if (s.ambient() != f.codomain_dim()) throw DimensionMismatch("subspace outside the map's codomain");
  // The annihilator of S cuts S out as a kernel; pull those equations back.
  const LinearMap equations(Matrix::from_rows(s.field(), s.ambient(), s.rows()));
  const Subspace annihilator = kernel(equations);
  const Matrix constraints = Matrix::from_rows(s.field(), s.ambient(), annihilator.rows());
  return kernel(LinearMap(constraints * f.matrix()));
}

Subspace coefficient_space(std::span<const Vector> xs, const Subspace& s) {
  if (!linearly_independent(xs)) throw PreconditionError("coefficient_space needs independent vectors");
  for (const auto& x : xs) {
    if (x.size() != s.ambient()) throw DimensionMismatch("vector outside the subspace's ambient space");
  }
  const LinearMap combine(Matrix::from_rows(s.field(), s.ambient(), xs).transposed());
  if (xs.empty()) return Subspace::zero(s.field(), 0);
  return preimage_subspace(combine, s);
}

std::optional<Vector> has_all_nonzero_vector(const Subspace& w) {
  if (!w.field().is_rational()) {
    throw PreconditionError("has_all_nonzero_vector needs an infinite field; use exhaustive search over GF(p)");
  }
  const std::size_t k = w.ambient();
  for (std::size_t i = 0; i < k; ++i) {
    const bool hit =
        std::any_of(w.rows().begin(), w.rows().end(), [&](const Vector& r) { return !r[i].is_zero(); });
    if (!hit) return std::nullopt;
  }
  const Field q = w.field();
  for (long t = 1;; ++t) {
    Vector v(q, k);
    Scalar power = Scalar::one(q);
    for (const auto& row : w.rows()) {
      v += power * row;
      power *= Scalar(q, t);
    }
    const bool ok = std::none_of(v.coords().begin(), v.coords().end(), [](const Scalar& c) { return c.is_zero(); });
    if (ok) return v;
  }
}

Vector linear_combination(std::span<const Scalar> coeffs, std::span<const Vector> xs, const Vector& zero) {
  if (coeffs.size() != xs.size()) throw DimensionMismatch("coefficient count differs from vector count");
  Vector out = zero;
  for (std::size_t i = 0; i < xs.size(); ++i) out += coeffs[i] * xs[i];
  return out;
}

}  // namespace mvs
