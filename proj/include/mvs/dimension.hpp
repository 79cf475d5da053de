#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mvs/independence.hpp"
#include "mvs/linalg.hpp"
#include "mvs/mvspace.hpp"

namespace mvs {

/// A multi vector space restricted to a carrier subspace Y: levels Uᵢ ∩ Y
/// (or pushed-forward levels for images), all inside Y.
struct RestrictedMVSpace {
  Subspace carrier;
  MVSpace space;
};

/// Σ nᵢ · rᵢ over the chain, i.e. the count sum of any M-basis.
std::uint64_t mdim(const MVSpace& v);
/// Count sum over an M-basis of the carrier; count-0 vectors add nothing.
std::uint64_t mdim(const RestrictedMVSpace& v);

/// Σ C_V(e) over the basis B. Throws PreconditionError if B is not a basis.
std::uint64_t basis_count_sum(const MVSpace& v, std::span<const Vector> b);

/// C_V(θ) ≥ sup C_W(X∖{θ}) and C_W(θ) ≥ sup C_V(X∖{θ}).
bool theta_dominance(const MVSpace& v, const MVSpace& w);

/// A single basis that is an M-basis of V, W, V∩W and V+W, built by the
/// inductive construction: drop the minimal-count vector of an M-basis of V
/// to get a hyperplane H, recurse on the restrictions to H, then extend by
/// the vector of X∖H with the largest W-count. Throws PreconditionError
/// without theta dominance.
std::vector<Vector> common_mbasis(const MVSpace& v, const MVSpace& w);

struct DimensionCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;

  bool holds() const { return lhs == rhs; }
};

/// (mdim(V+W), mdim V + mdim W − mdim(V∩W)). Requires theta dominance.
DimensionCheck modular_dimension_check(const MVSpace& v, const MVSpace& w);

/// f(V): C_{f(V)}(y) = sup{C_V(z) : f(z) = y}; levels are f(Uᵢ).
MVSpace map_image(const LinearMap& f, const MVSpace& v);
/// (ker f, C_V restricted to ker f).
RestrictedMVSpace ker_restrict(const LinearMap& f, const MVSpace& v);
/// (im f, C_{f(V)} on im f).
RestrictedMVSpace im_restrict(const LinearMap& f, const MVSpace& v);
/// (mdim ker + mdim im, mdim V).
DimensionCheck rank_nullity_check(const LinearMap& f, const MVSpace& v);

}  // namespace mvs
