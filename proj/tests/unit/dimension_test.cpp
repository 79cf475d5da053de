#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace mvs {
namespace {

using testing::kQ;
using testing::span_of;
using testing::vec;

LinearMap matrix_map(std::size_t cols, std::vector<Vector> rows) {
  return LinearMap(Matrix::from_rows(kQ, cols, rows));
}

TEST(MDim, Examples) {
  const MVSpace v = testing::dominant_v();
  const MVSpace w = testing::dominant_w();
  EXPECT_EQ(mdim(v), 4U);
  EXPECT_EQ(mdim(w), 3U);
  EXPECT_EQ(mdim(intersect(v, w)), 2U);
  EXPECT_EQ(mdim(sum(v, w)), 5U);
  EXPECT_EQ(mdim(MVSpace::constant(5, 3, Subspace::full(kQ, 4))), 12U);
  EXPECT_EQ(mdim(testing::line_plane()), 3U);
  EXPECT_EQ(mdim(testing::split_q4()), 14U);
  EXPECT_EQ(mdim(MVSpace::constant(5, 3, Subspace::zero(kQ, 4))), 0U);
}

TEST(BasisCountSum, Examples) {
  const MVSpace r = testing::split_q4();
  EXPECT_EQ(basis_count_sum(r, find_mbasis(r).vectors()), mdim(r));
  EXPECT_EQ(basis_count_sum(r, testing::split_q4_trap_basis()), 11U);
  const std::vector<Vector> standard{vec({1, 0}), vec({0, 1})};
  EXPECT_EQ(basis_count_sum(testing::line_plane(), standard), 3U);
  const std::vector<Vector> dependent{vec({1, 0}), vec({2, 0})};
  EXPECT_THROW(basis_count_sum(testing::line_plane(), dependent), PreconditionError);
}

TEST(ThetaDominance, Examples) {
  EXPECT_TRUE(theta_dominance(testing::dominant_v(), testing::dominant_w()));
  const MVSpace flat = MVSpace::constant(4, 2, Subspace::full(kQ, 2));
  EXPECT_TRUE(theta_dominance(flat, flat));
  const MVSpace weak_origin = MVSpace::canonical(kQ, 2, 6, {{2, Subspace::zero(kQ, 2)}, {1, Subspace::full(kQ, 2)}});
  const MVSpace heavy_line = MVSpace::canonical(kQ, 2, 6, {{5, span_of(2, {vec({1, 0})})}, {1, Subspace::full(kQ, 2)}});
  EXPECT_FALSE(theta_dominance(weak_origin, heavy_line));
}

TEST(CommonMBasis, WorkedPair) {
  const MVSpace v = testing::dominant_v();
  const MVSpace w = testing::dominant_w();
  const std::vector<Vector> b = common_mbasis(v, w);
  EXPECT_EQ(b.size(), 2U);
  EXPECT_TRUE(is_mbasis(v, b));
  EXPECT_TRUE(is_mbasis(w, b));
  EXPECT_TRUE(is_mbasis(intersect(v, w), b));
  EXPECT_TRUE(is_mbasis(sum(v, w), b));
}

TEST(CommonMBasis, SameSpaceGivesMBasis) {
  const MVSpace r = testing::split_q4();
  EXPECT_TRUE(is_mbasis(r, common_mbasis(r, r)));
}

TEST(CommonMBasis, RequiresDominance) {
  const MVSpace weak_origin = MVSpace::canonical(kQ, 2, 6, {{2, Subspace::zero(kQ, 2)}, {1, Subspace::full(kQ, 2)}});
  const MVSpace heavy_line = MVSpace::canonical(kQ, 2, 6, {{5, span_of(2, {vec({1, 0})})}, {1, Subspace::full(kQ, 2)}});
  EXPECT_THROW(common_mbasis(weak_origin, heavy_line), PreconditionError);
  EXPECT_THROW(modular_dimension_check(weak_origin, heavy_line), PreconditionError);
  EXPECT_THROW(common_mbasis(testing::dominant_v(), testing::line_plane()), PreconditionError);
}

TEST(ModularDimension, Examples) {
  const DimensionCheck c = modular_dimension_check(testing::dominant_v(), testing::dominant_w());
  EXPECT_EQ(c.lhs, 5U);
  EXPECT_EQ(c.rhs, 5U);
  EXPECT_TRUE(c.holds());
  const MVSpace r = testing::split_q4();
  const DimensionCheck same = modular_dimension_check(r, r);
  EXPECT_EQ(same.lhs, mdim(r));
  EXPECT_EQ(same.rhs, mdim(r));
}

TEST(MapImage, Examples) {
  const MVSpace v = testing::line_plane();
  EXPECT_EQ(map_image(LinearMap::identity(kQ, 2), v), v);
  EXPECT_EQ(map_image(LinearMap::zero(kQ, 2, 3), v), MVSpace::constant(4, 4, Subspace::zero(kQ, 3)));
  const MVSpace projected = map_image(matrix_map(2, {vec({1, 0})}), v);
  const MVSpace expected = MVSpace::canonical(kQ, 1, 4, {{4, Subspace::zero(kQ, 1)}, {1, Subspace::full(kQ, 1)}});
  EXPECT_EQ(projected, expected);
  EXPECT_THROW(map_image(LinearMap::identity(kQ, 3), v), DimensionMismatch);
}

TEST(KerRestrict, Examples) {
  const MVSpace v = testing::line_plane();
  const RestrictedMVSpace inj = ker_restrict(LinearMap::identity(kQ, 2), v);
  EXPECT_TRUE(inj.carrier.is_zero());
  EXPECT_EQ(mdim(inj), 0U);
  const RestrictedMVSpace all = ker_restrict(LinearMap::zero(kQ, 2, 2), v);
  EXPECT_EQ(all.space, v);
  EXPECT_TRUE(all.carrier.is_full());
  const RestrictedMVSpace diag = ker_restrict(matrix_map(2, {vec({1, 1})}), v);
  EXPECT_EQ(diag.carrier, span_of(2, {vec({1, -1})}));
  EXPECT_EQ(diag.space.count(vec({1, -1})), 1U);
  EXPECT_EQ(mdim(diag), 1U);
}

TEST(ImRestrict, Examples) {
  const MVSpace v = testing::line_plane();
  EXPECT_EQ(im_restrict(LinearMap::identity(kQ, 2), v).space, v);
  const RestrictedMVSpace zero = im_restrict(LinearMap::zero(kQ, 2, 2), v);
  EXPECT_TRUE(zero.carrier.is_zero());
  EXPECT_EQ(zero.space, MVSpace::constant(4, 4, Subspace::zero(kQ, 2)));
  EXPECT_EQ(mdim(zero), 0U);
  const RestrictedMVSpace projected = im_restrict(matrix_map(2, {vec({1, 0})}), v);
  EXPECT_TRUE(projected.carrier.is_full());
  EXPECT_EQ(mdim(projected), 1U);
}

TEST(RankNullity, Examples) {
  const MVSpace v = testing::line_plane();
  const DimensionCheck id = rank_nullity_check(LinearMap::identity(kQ, 2), v);
  EXPECT_EQ(id.lhs, mdim(v));
  EXPECT_EQ(id.rhs, mdim(v));
  const DimensionCheck zero = rank_nullity_check(LinearMap::zero(kQ, 2, 2), v);
  EXPECT_EQ(zero.lhs, mdim(v));
  EXPECT_TRUE(zero.holds());
  const DimensionCheck proj = rank_nullity_check(matrix_map(2, {vec({1, 0})}), v);
  EXPECT_EQ(proj.lhs, 3U);
  EXPECT_TRUE(proj.holds());
}

}  // namespace
}  // namespace mvs
