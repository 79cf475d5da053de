#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mvs/linalg.hpp"
#include "mvs/mvspace.hpp"

namespace mvs {

struct IndependenceResult {
  bool independent = false;
  /// The vectors are not even linearly independent.
  bool linearly_dependent = false;
  /// min C_V(xᵢ); every all-nonzero combination has at least this count.
  unsigned min_count = 0;
  /// On failure: all-nonzero coefficients a with C_V(Σ aᵢxᵢ) > min_count.
  std::optional<std::vector<Scalar>> witness;
  unsigned witness_count = 0;
};

/// Decides multi linear independence of xs in V.
///
/// With n* = min C_V(xᵢ) and U the largest level whose count exceeds n*, the
/// set fails exactly when the coefficient space {a : Σ aᵢxᵢ ∈ U} holds a
/// vector with no zero coordinate. Over Q (and over GF(p) when |xs| < p) that
/// is decided by the coordinate-hyperplane criterion; over GF(p) with
/// |xs| ≥ p every all-nonzero coefficient tuple is enumerated.
IndependenceResult is_multi_linearly_independent(const MVSpace& v, std::span<const Vector> xs);

/// The test above applied to every nonempty subset of xs: C_V(Σ aᵢxᵢ) equals
/// min{C_V(xᵢ) : aᵢ ≠ 0} for every nonzero coefficient vector a. Decided
/// level by level: with S the vectors outside a level U, the set fails iff
/// some coefficient vector landing in U is nonzero on S. The witness may have
/// zero entries; witness_count exceeds the minimum over its nonzero entries.
IndependenceResult is_hereditarily_multi_independent(const MVSpace& v, std::span<const Vector> xs);

/// t ∉ Y inside `carrier` whose count is maximal on carrier ∖ Y: the first
/// RREF row of the first level not contained in Y, or, once every level lies
/// in Y, the first carrier row outside Y (count 0).
Vector extend_step(const MVSpace& v, const Subspace& y, const Subspace& carrier);
Vector extend_step(const MVSpace& v, const Subspace& y);

/// An ordered basis of F^m certified to be an M-basis of `space`.
class MBasis {
 public:
  /// Throws InvariantViolation unless `vectors` is a basis of F^m that is
  /// hereditarily multi linearly independent in v.
  static MBasis certify(const MVSpace& v, std::vector<Vector> vectors);

  const MVSpace& space() const { return space_; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<unsigned>& counts() const { return counts_; }
  std::size_t size() const { return vectors_.size(); }
  /// Some vectors lie outside the support of the space (count 0).
  bool extends_beyond_support() const;

  friend bool operator==(const MBasis&, const MBasis&) = default;

 private:
  MVSpace space_;
  std::vector<Vector> vectors_;
  std::vector<unsigned> counts_;
};

/// Deterministic M-basis: a basis of U₀ extended level by level to U_k, then
/// to F^m with count-0 vectors when the support is proper. Counts come out
/// non-increasing.
MBasis find_mbasis(const MVSpace& v);
/// Same construction with random picks from each level difference.
MBasis find_mbasis_randomized(const MVSpace& v, std::mt19937_64& rng);
/// M-basis of the restriction of v to `carrier` (a basis of carrier).
std::vector<Vector> find_mbasis_within(const MVSpace& v, const Subspace& carrier);

/// B is a basis of F^m and B ∩ Uᵢ is a basis of Uᵢ for every level.
bool is_mbasis(const MVSpace& v, std::span<const Vector> b);

struct IndexEntry {
  unsigned count = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

/// (nᵢ, rᵢ) pairs by decreasing count.
struct MultiIndex {
  std::vector<IndexEntry> entries;

  std::size_t total() const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// rᵢ = dim Uᵢ − dim Uᵢ₋₁, skipping an empty θ-only head, plus (0, m − dim U_k)
/// for a proper support.
MultiIndex multi_index(const MVSpace& v);
/// Histogram of C_V over B. Throws PreconditionError unless B is a basis.
MultiIndex basis_index(const MVSpace& v, std::span<const Vector> b);
/// basis_index(V, B) == multi_index(V). Requires B to be a basis whose count
/// set equals the nonzero count range of V (PreconditionError otherwise).
bool mbasis_by_index_test(const MVSpace& v, std::span<const Vector> b);

std::string to_string(const MultiIndex& index);

struct MultiBasisEntry {
  Vector vector;
  unsigned count = 0;

  friend bool operator==(const MultiBasisEntry&, const MultiBasisEntry&) = default;
};

/// β: the multiset of basis vectors e ↦ max{nᵢ : e ∈ B ∩ Uᵢ}; its level sets
/// β_n are bases of V_n.
class MultiBasis {
 public:
  MultiBasis(MVSpace space, std::vector<MultiBasisEntry> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}

  const MVSpace& space() const { return space_; }
  const std::vector<MultiBasisEntry>& entries() const { return entries_; }
  unsigned count(const Vector& x) const;
  /// β_n = {e : C_β(e) ≥ n}.
  std::vector<Vector> level(unsigned n) const;

  friend bool operator==(const MultiBasis&, const MultiBasis&) = default;

 private:
  MVSpace space_;
  std::vector<MultiBasisEntry> entries_;
};

/// Throws PreconditionError when B was certified against a different space.
MultiBasis to_multi_basis(const MVSpace& v, const MBasis& b);
/// Throws InvariantViolation when β's counts or level sets are inconsistent.
MBasis from_multi_basis(const MultiBasis& beta);

}  // namespace mvs
