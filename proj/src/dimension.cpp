#include "mvs/dimension.hpp"

#include <stdexcept>

namespace mvs {

std::uint64_t mdim(const MVSpace& v) {
  std::uint64_t total = 0;
  std::size_t previous = 0;
  for (const Level& l : v.chain()) {
    total += static_cast<std::uint64_t>(l.count) * (l.subspace.rank() - previous);
    previous = l.subspace.rank();
  }
  return total;
}

std::uint64_t mdim(const RestrictedMVSpace& v) { return mdim(v.space); }

std::uint64_t basis_count_sum(const MVSpace& v, std::span<const Vector> b) {
  if (b.size() != v.ambient() || !linearly_independent(b)) throw PreconditionError("not a basis of the ambient space");
  std::uint64_t total = 0;
  for (const auto& e : b) total += v.count(e);
  return total;
}

bool theta_dominance(const MVSpace& v, const MVSpace& w) {
  if (v.field() != w.field() || v.ambient() != w.ambient()) {
    throw DimensionMismatch("theta dominance compares spaces over one ambient");
  }
  return v.top_count() >= w.top_nonzero_count() && w.top_count() >= v.top_nonzero_count();
}

namespace {

void check_restriction_identity(const MVSpace& v, const MVSpace& w, const Subspace& h) {
#ifndef NDEBUG
  // (V+W) restricted to H equals the sum of the restrictions.
  if (!(restrict_to(sum(v, w), h) == sum(restrict_to(v, h), restrict_to(w, h)))) {
    throw std::logic_error("restriction of V+W to H differs from V|H + W|H");
  }
#else
  (void)v;
  (void)w;
  (void)h;
#endif
}

std::vector<Vector> common_within(const MVSpace& v, const MVSpace& w, const Subspace& h) {
  if (h.is_zero()) return {};
  check_restriction_identity(v, w, h);
  const MVSpace vh = restrict_to(v, h);
  const MVSpace wh = restrict_to(w, h);
  std::vector<Vector> b1 = find_mbasis_within(vh, h);
  b1.pop_back();  // minimal C_V count comes last
  const Subspace hyperplane = subspace_from_generators(v.field(), v.ambient(), b1);
  std::vector<Vector> basis = common_within(v, w, hyperplane);
  basis.push_back(extend_step(wh, hyperplane, h));
  return basis;
}

}  // namespace

std::vector<Vector> common_mbasis(const MVSpace& v, const MVSpace& w) {
  if (v.omega() != w.omega()) throw PreconditionError("omega mismatch");
  if (!theta_dominance(v, w)) throw PreconditionError("theta dominance fails; no common M-basis is guaranteed");
  return common_within(v, w, Subspace::full(v.field(), v.ambient()));
}

DimensionCheck modular_dimension_check(const MVSpace& v, const MVSpace& w) {
  if (!theta_dominance(v, w)) throw PreconditionError("theta dominance fails");
  const std::uint64_t meet = mdim(intersect(v, w));
  return {mdim(sum(v, w)), mdim(v) + mdim(w) - meet};
}

MVSpace map_image(const LinearMap& f, const MVSpace& v) {
  if (f.field() != v.field()) throw FieldMismatch("map and space over different fields");
  if (f.domain_dim() != v.ambient()) throw DimensionMismatch("map domain differs from the space's ambient");
  std::vector<Level> levels;
  for (const Level& l : v.chain()) levels.push_back(Level{l.count, map_subspace(f, l.subspace)});
  return MVSpace::canonical(v.field(), f.codomain_dim(), v.omega(), std::move(levels));
}

RestrictedMVSpace ker_restrict(const LinearMap& f, const MVSpace& v) {
  if (f.domain_dim() != v.ambient()) throw DimensionMismatch("map domain differs from the space's ambient");
  Subspace k = kernel(f);
  MVSpace restricted = restrict_to(v, k);
  return {std::move(k), std::move(restricted)};
}

RestrictedMVSpace im_restrict(const LinearMap& f, const MVSpace& v) {
  MVSpace pushed = map_image(f, v);
  return {image(f), std::move(pushed)};
}

DimensionCheck rank_nullity_check(const LinearMap& f, const MVSpace& v) {
  return {mdim(ker_restrict(f, v)) + mdim(im_restrict(f, v)), mdim(v)};
}

}  // namespace mvs
