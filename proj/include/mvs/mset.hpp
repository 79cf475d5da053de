#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mvs/scalar.hpp"

namespace mvs {

/// Position of an element of GF(p)^n in lexicographic enumeration order.
using ElementIndex = std::size_t;

/// The enumerable universe GF(p)^n. Elements are addressed by their index in
/// lexicographic order of coordinate tuples (first coordinate most
/// significant), so index 0 is always θ.
class Universe {
 public:
  static constexpr std::size_t kMaxElements = 243;

  /// Throws BudgetExceeded when p^n > kMaxElements.
  Universe(Field field, std::size_t dimension);

  Field field() const { return field_; }
  std::uint64_t prime() const { return field_.characteristic(); }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return size_; }

  static constexpr ElementIndex zero() { return 0; }

  std::vector<std::uint64_t> digits(ElementIndex x) const;
  ElementIndex from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<Scalar> coordinates(ElementIndex x) const;
  /// Throws PreconditionError for coordinates outside this universe.
  ElementIndex index_of(std::span<const Scalar> coords) const;

  ElementIndex add(ElementIndex x, ElementIndex y) const;
  ElementIndex negate(ElementIndex x) const;
  ElementIndex subtract(ElementIndex x, ElementIndex y) const { return add(x, negate(y)); }
  ElementIndex scale(std::uint64_t lambda, ElementIndex x) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  Field field_;
  std::size_t dimension_ = 0;
  std::size_t size_ = 1;
};

/// A multiset over a Universe: a total count function bounded by ω.
class FiniteMSet {
 public:
  /// Every count must be ≤ omega (InvariantViolation otherwise).
  FiniteMSet(Universe universe, unsigned omega, std::vector<unsigned> counts);

  static FiniteMSet empty(Universe universe, unsigned omega);
  static FiniteMSet from_function(Universe universe, unsigned omega,
                                  const std::function<unsigned(ElementIndex)>& count);

  const Universe& universe() const { return universe_; }
  unsigned omega() const { return omega_; }
  std::span<const unsigned> counts() const { return counts_; }

  unsigned count(ElementIndex x) const;
  unsigned count(std::span<const Scalar> coords) const { return count(universe_.index_of(coords)); }
  unsigned max_count() const;

  friend bool operator==(const FiniteMSet&, const FiniteMSet&) = default;

 private:
  Universe universe_;
  unsigned omega_;
  std::vector<unsigned> counts_;
};

/// {x : C_M(x) ≥ n}, ascending. n = 0 is rejected.
std::vector<ElementIndex> level_set(const FiniteMSet& m, unsigned n);

FiniteMSet mset_union(const FiniteMSet& a, const FiniteMSet& b);
FiniteMSet mset_intersection(const FiniteMSet& a, const FiniteMSet& b);
/// Pointwise A ≤ B.
bool is_submset(const FiniteMSet& a, const FiniteMSet& b);

/// nP: count n on P, 0 elsewhere.
FiniteMSet const_mset(const Universe& universe, unsigned omega, std::span<const ElementIndex> p, unsigned n);

/// C(x) = max over x₁ of min(C_A(x₁), C_B(x − x₁)).
FiniteMSet mset_sum(const FiniteMSet& a, const FiniteMSet& b);
/// C_{λB}(y) = max{C_B(x) : λx = y}, 0 when nothing maps to y.
FiniteMSet mset_scalar(const Scalar& lambda, const FiniteMSet& b);

/// C_{f(M)}(y) = max{C_M(x) : f(x) = y}; `f` maps source indices to
/// `target` indices.
FiniteMSet mset_image(const Universe& target, std::span<const ElementIndex> f, const FiniteMSet& m);
/// C_{f⁻¹(N)}(x) = C_N(f(x)).
FiniteMSet mset_preimage(const Universe& source, std::span<const ElementIndex> f, const FiniteMSet& n);

}  // namespace mvs
