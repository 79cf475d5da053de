#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvs/scalar.hpp"

namespace mvs {

/// Coordinate vector in F^m. All coordinates share the vector's field.
class Vector {
 public:
  Vector() = default;
  /// The zero vector θ of F^m.
  Vector(Field field, std::size_t m);
  Vector(Field field, std::vector<Scalar> coords);
  /// Convenience for integer coordinates.
  Vector(Field field, std::initializer_list<long> coords);

  static Vector unit(Field field, std::size_t m, std::size_t i);
  /// Parses "(a,b,...)"; whitespace is ignored, scalars are integers or p/q.
  static Vector parse(Field field, std::string_view text);

  Field field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar& a, const Vector& v);

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic on coordinates.
  friend bool operator<(const Vector& a, const Vector& b);

  /// Canonical "(a,b,...)".
  std::string to_string() const;

 private:
  void require_compatible(const Vector& other) const;

  Field field_;
  std::vector<Scalar> coords_;
};

/// Dense rows × cols matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Stacks row vectors; every row must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);
  static Matrix identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transposed() const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Exact reduced row echelon form. Zero rows are kept at the bottom.
RowEchelon rref(const Matrix& m);

/// A linear subspace of F^m held as its strict RREF basis. Two subspaces are
/// equal iff their rows are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t m);
  static Subspace full(Field field, std::size_t m);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  bool contains(const Vector& x) const;
  /// x minus its projection along the pivot columns; zero iff x is a member.
  Vector residual(const Vector& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

  std::string to_string() const;

 private:
  friend Subspace subspace_from_generators(Field, std::size_t, std::span<const Vector>);

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_from_generators(Field field, std::size_t m, std::span<const Vector> gens);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: row-reduce [[A A];[B 0]]; rows with a vanishing left half
/// carry A ∩ B in their right half.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& a, const Subspace& b);

bool linearly_independent(std::span<const Vector> xs);

/// x ↦ A·x with A of shape codomain × domain.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix a) : a_(std::move(a)) {}

  static LinearMap identity(Field field, std::size_t n);
  static LinearMap zero(Field field, std::size_t domain, std::size_t codomain);

  Field field() const { return a_.field(); }
  std::size_t domain_dim() const { return a_.cols(); }
  std::size_t codomain_dim() const { return a_.rows(); }
  const Matrix& matrix() const { return a_; }

  Vector operator()(const Vector& x) const { return a_ * x; }

 private:
  Matrix a_;
};

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
/// f(S) for S in the domain.
Subspace map_subspace(const LinearMap& f, const Subspace& s);
/// {x : f(x) ∈ S}.
Subspace preimage_subspace(const LinearMap& f, const Subspace& s);

/// {a ∈ F^k : Σ aᵢ xᵢ ∈ S} for linearly independent xs.
Subspace coefficient_space(std::span<const Vector> xs, const Subspace& s);

/// Over Q: a vector of W with every coordinate nonzero, if one exists.
/// Such a vector exists iff no coordinate vanishes on all of W; the witness
/// is Σ t^j rowⱼ for the first t = 1, 2, ... that works.
std::optional<Vector> has_all_nonzero_vector(const Subspace& w);

/// Σ coeffs[i] · xs[i]; xs must be nonempty or `m` given via `zero`.
Vector linear_combination(std::span<const Scalar> coeffs, std::span<const Vector> xs, const Vector& zero);

}  // namespace mvs
