#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvs/mset.hpp"
#include "mvs/scalar.hpp"

// Definitional semantics by exhaustion over GF(p)^n. Nothing here touches
// row reduction or level chains; only Scalar and the mset calculus are
// shared with the rest of the library.
namespace mvs::oracle {

/// Hard cap on sup-min decomposition checks and enumerated tuples.
constexpr std::uint64_t kWorkBudget = 1'000'000;

struct MVSpaceVerdict {
  bool ok = true;
  /// On failure, "sum x y" or "scale lambda x" with element indices.
  std::string witness;
};

/// C(x+y) ≥ min(C(x), C(y)) and C(λx) ≥ C(x) for every x, y, λ.
MVSpaceVerdict is_mvspace(const FiniteMSet& m);

/// Sup-min over all decompositions x = x₁ + x₂.
FiniteMSet sum(const FiniteMSet& a, const FiniteMSet& b);

/// Linear independence of xs plus C(Σ aᵢxᵢ) = min C(aᵢxᵢ) for every tuple of
/// nonzero coefficients. Only matches the rational semantics when |xs| < p.
bool multi_independent(const FiniteMSet& m, std::span<const ElementIndex> xs);

/// Linear independence plus C(Σ aᵢxᵢ) = min{C(aᵢxᵢ) : aᵢ ≠ 0} for every
/// nonzero coefficient tuple, i.e. the condition above on every subset.
bool multi_independent_every_subset(const FiniteMSet& m, std::span<const ElementIndex> xs);

/// max over bases B of Σ_{x ∈ B} C(x), by enumerating every basis.
std::uint64_t mdim(const FiniteMSet& m);

/// Image under the linear map with the given rows (codomain × domain),
/// computed by evaluating the map on every element.
FiniteMSet image(std::span<const std::vector<Scalar>> rows, const FiniteMSet& m);

}  // namespace mvs::oracle
