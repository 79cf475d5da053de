#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mvs/errors.hpp"
#include "mvs/linalg.hpp"
#include "mvs/mset.hpp"

namespace mvs {

/// One step of a level chain: every vector of `subspace` has count at least
/// `count`.
struct Level {
  unsigned count = 0;
  Subspace subspace;

  friend bool operator==(const Level&, const Level&) = default;
};

struct ValidationReport {
  bool ok = true;
  /// Human-readable name of the first violated clause; empty when ok.
  std::string violation;

  explicit operator bool() const { return ok; }
};

/// A multi vector space over F^m in level-chain form
///   V = n₀U₀ ∪ n₁U₁ ∪ … ∪ n_kU_k
/// with ω ≥ n₀ > n₁ > … > n_k ≥ 1 and U₀ ⊊ U₁ ⊊ … ⊊ U_k. Vectors outside U_k
/// have count 0.
///
/// The constructor stores the chain as given so that malformed chains can be
/// inspected with validate(); every library operation returns chains built
/// through canonical().
class MVSpace {
 public:
  MVSpace() = default;
  MVSpace(Field field, std::size_t ambient, unsigned omega, std::vector<Level> chain);

  /// Sorts levels by decreasing count, drops count-0 levels and levels that
  /// repeat the previous subspace, then validates. Throws InvariantViolation.
  static MVSpace canonical(Field field, std::size_t ambient, unsigned omega, std::vector<Level> levels);
  /// nS: count n on the subspace S, 0 elsewhere.
  static MVSpace constant(unsigned omega, unsigned n, const Subspace& s);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  unsigned omega() const { return omega_; }
  const std::vector<Level>& chain() const { return chain_; }

  ValidationReport validate() const;

  /// C_V(x): nᵢ for the first level containing x, 0 outside the support.
  unsigned count(const Vector& x) const;
  /// V_n = {x : C_V(x) ≥ n} for 1 ≤ n ≤ ω; the zero subspace stands in for
  /// the empty level when n > n₀.
  Subspace level(unsigned n) const;
  /// U_k, the region of positive count.
  const Subspace& support() const { return chain_.back().subspace; }

  /// C_V(θ) = n₀.
  unsigned top_count() const { return chain_.front().count; }
  /// sup C_V(X∖{θ}); 0 when X = {θ} or the support is {θ}.
  unsigned top_nonzero_count() const;
  /// The distinct values of C_V on X∖{θ}, decreasing (0 included when the
  /// support is proper).
  std::vector<unsigned> nonzero_count_range() const;

  friend bool operator==(const MVSpace&, const MVSpace&) = default;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  unsigned omega_ = 0;
  std::vector<Level> chain_;
};

/// What from_count_function found wrong with a raw count function.
struct ClosureWitness {
  enum class Kind { kEmpty, kSum, kScale };
  Kind kind = Kind::kEmpty;
  /// The level whose set failed to be a subspace.
  unsigned level = 0;
  std::vector<Scalar> x;
  std::vector<Scalar> y;  // kSum only
  std::uint64_t lambda = 0;  // kScale only
};

class NotAMultiVectorSpace : public InvariantViolation {
 public:
  NotAMultiVectorSpace(const std::string& what, ClosureWitness witness)
      : InvariantViolation(what), witness_(std::move(witness)) {}
  const ClosureWitness& witness() const { return witness_; }

 private:
  ClosureWitness witness_;
};

/// λ ≠ 0 leaves V unchanged; λ = 0 collapses V to {θ/n₀}.
MVSpace scale(const Scalar& lambda, const MVSpace& v);
/// (V+W)_n = V_n + W_n on every candidate count n.
MVSpace sum(const MVSpace& v, const MVSpace& w);
/// (V∩W)_n = V_n ∩ W_n.
MVSpace intersect(const MVSpace& v, const MVSpace& w);
/// C_V restricted to the subspace `carrier`: levels Uᵢ ∩ carrier.
MVSpace restrict_to(const MVSpace& v, const Subspace& carrier);

bool equals(const MVSpace& v, const MVSpace& w);

/// Builds the level chain of a raw count function on GF(p)^n. Each level set
/// is checked to be a subspace; failures throw NotAMultiVectorSpace with a
/// closure witness.
MVSpace from_count_function(const FiniteMSet& m);
/// Enumerates C_V over GF(p)^m. Throws PreconditionError over Q.
FiniteMSet to_count_function(const MVSpace& v);

std::string to_string(const MVSpace& v);

}  // namespace mvs
