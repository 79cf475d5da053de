#include <gtest/gtest.h>

#include <random>

#include "mvs/errors.hpp"
#include "mvs/mset.hpp"

namespace mvs {
namespace {

const Field kGF2 = Field::prime(2);
const Field kGF3 = Field::prime(3);

FiniteMSet random_mset(const Universe& u, unsigned omega, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pick(0, omega);
  std::vector<unsigned> counts(u.size());
  for (auto& c : counts) c = pick(rng);
  return FiniteMSet(u, omega, counts);
}

std::vector<ElementIndex> identity_table(const Universe& u) {
  std::vector<ElementIndex> t(u.size());
  for (ElementIndex x = 0; x < u.size(); ++x) t[x] = x;
  return t;
}

bool is_superset(const std::vector<ElementIndex>& big, const std::vector<ElementIndex>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

TEST(Universe, Enumeration) {
  const Universe u(kGF3, 2);
  EXPECT_EQ(u.size(), 9U);
  EXPECT_EQ(u.digits(5), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(u.add(5, 4), u.index_of(std::vector<Scalar>{Scalar(kGF3, 2), Scalar(kGF3, 0)}));
  EXPECT_EQ(u.negate(5), 7U);
  EXPECT_EQ(u.scale(2, 5), 7U);
  EXPECT_EQ(u.scale(0, 5), 0U);
  EXPECT_THROW(Universe(kGF3, 6), BudgetExceeded);
  EXPECT_NO_THROW(Universe(kGF3, 5));
  EXPECT_THROW(Universe(Field::rational(), 1), PreconditionError);
}

TEST(FiniteMSetTest, Count) {
  const Universe u(kGF3, 2);
  EXPECT_EQ(FiniteMSet::empty(u, 4).count(3), 0U);
  const FiniteMSet single = FiniteMSet::from_function(u, 4, [](ElementIndex x) { return x == 2 ? 3U : 0U; });
  EXPECT_EQ(single.count(2), 3U);
  // Origin 4, the line {(0,a)} 2, everything else 1.
  const FiniteMSet shaped = FiniteMSet::from_function(u, 4, [&](ElementIndex x) {
    if (x == 0) return 4U;
    return u.digits(x)[0] == 0 ? 2U : 1U;
  });
  EXPECT_EQ(shaped.count(std::vector<Scalar>{Scalar(kGF3, 0), Scalar(kGF3, 0)}), 4U);
  EXPECT_EQ(shaped.count(std::vector<Scalar>{Scalar(kGF3, 0), Scalar(kGF3, 2)}), 2U);
  EXPECT_EQ(shaped.count(std::vector<Scalar>{Scalar(kGF3, 1), Scalar(kGF3, 0)}), 1U);
  EXPECT_THROW(shaped.count(9), PreconditionError);
  EXPECT_THROW(FiniteMSet(u, 2, std::vector<unsigned>(9, 3)), InvariantViolation);
}

TEST(FiniteMSetTest, LevelSet) {
  const Universe u(kGF2, 1);
  EXPECT_TRUE(level_set(FiniteMSet::empty(u, 3), 1).empty());
  const FiniteMSet m(u, 3, {2, 1});
  EXPECT_EQ(level_set(m, 2), (std::vector<ElementIndex>{0}));
  EXPECT_TRUE(level_set(m, 4).empty());
  EXPECT_THROW(level_set(m, 0), PreconditionError);
}

TEST(FiniteMSetTest, UnionAndIntersection) {
  std::mt19937_64 rng(7);
  const Universe u(kGF2, 2);
  for (int i = 0; i < 50; ++i) {
    const FiniteMSet a = random_mset(u, 3, rng);
    const FiniteMSet b = random_mset(u, 3, rng);
    EXPECT_EQ(mset_union(a, FiniteMSet::empty(u, 3)), a);
    EXPECT_EQ(mset_intersection(a, a), a);
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<ElementIndex> meet;
      std::vector<ElementIndex> join;
      const auto an = level_set(a, n);
      const auto bn = level_set(b, n);
      std::set_intersection(an.begin(), an.end(), bn.begin(), bn.end(), std::back_inserter(meet));
      std::set_union(an.begin(), an.end(), bn.begin(), bn.end(), std::back_inserter(join));
      EXPECT_EQ(level_set(mset_intersection(a, b), n), meet);
      EXPECT_EQ(level_set(mset_union(a, b), n), join);
    }
  }
  EXPECT_THROW(mset_union(FiniteMSet::empty(u, 3), FiniteMSet::empty(u, 4)), PreconditionError);
  EXPECT_THROW(mset_union(FiniteMSet::empty(u, 3), FiniteMSet::empty(Universe(kGF3, 2), 3)), PreconditionError);
}

TEST(FiniteMSetTest, ConstMSet) {
  const Universe u(kGF2, 2);
  const std::vector<ElementIndex> all{0, 1, 2, 3};
  EXPECT_EQ(const_mset(u, 3, all, 0), FiniteMSet::empty(u, 3));
  EXPECT_EQ(const_mset(u, 3, all, 3), FiniteMSet(u, 3, {3, 3, 3, 3}));
  const std::vector<ElementIndex> one{2};
  EXPECT_EQ(const_mset(u, 3, one, 2).count(2), 2U);
  EXPECT_THROW(const_mset(u, 3, one, 4), PreconditionError);
}

TEST(FiniteMSetTest, SumByHand) {
  const Universe u(kGF2, 1);
  const FiniteMSet a(u, 2, {2, 1});
  const FiniteMSet b(u, 2, {1, 2});
  EXPECT_EQ(mset_sum(a, b), FiniteMSet(u, 2, {1, 2}));
}

TEST(FiniteMSetTest, ScalarAction) {
  const Universe u(kGF3, 1);
  const FiniteMSet b(u, 3, {1, 3, 0});
  EXPECT_EQ(mset_scalar(Scalar(kGF3, 1), b), b);
  EXPECT_EQ(mset_scalar(Scalar(kGF3, 0), b), FiniteMSet(u, 3, {3, 0, 0}));
  // Doubling swaps 1 and 2.
  EXPECT_EQ(mset_scalar(Scalar(kGF3, 2), b), FiniteMSet(u, 3, {1, 0, 3}));
}

TEST(FiniteMSetTest, ImageAndPreimage) {
  const Universe u(kGF2, 2);
  const FiniteMSet m(u, 3, {1, 3, 0, 2});
  const auto id = identity_table(u);
  EXPECT_EQ(mset_image(u, id, m), m);
  EXPECT_EQ(mset_preimage(u, id, m), m);
  const std::vector<ElementIndex> to_zero(u.size(), 0);
  EXPECT_EQ(mset_image(u, to_zero, m), FiniteMSet(u, 3, {3, 0, 0, 0}));
}

// Properties over small universes.

TEST(MSetLaws, LevelSetsAreMonotone) {
  std::mt19937_64 rng(11);
  const Universe u(kGF3, 2);
  for (int i = 0; i < 100; ++i) {
    const FiniteMSet a = random_mset(u, 5, rng);
    FiniteMSet b = mset_union(a, random_mset(u, 5, rng));
    ASSERT_TRUE(is_submset(a, b));
    for (unsigned lo = 1; lo <= 5; ++lo) {
      for (unsigned hi = lo; hi <= 5; ++hi) EXPECT_TRUE(is_superset(level_set(a, lo), level_set(a, hi)));
      EXPECT_TRUE(is_superset(level_set(b, lo), level_set(a, lo)));
    }
    const FiniteMSet c = random_mset(u, 5, rng);
    bool all_levels_equal = true;
    for (unsigned n = 1; n <= 5; ++n) all_levels_equal = all_levels_equal && level_set(a, n) == level_set(c, n);
    EXPECT_EQ(all_levels_equal, a == c);
    EXPECT_TRUE(all_levels_equal || a != c);
  }
}

TEST(MSetLaws, ScalarComposition) {
  std::mt19937_64 rng(12);
  const Field f = Field::prime(5);
  const Universe u(f, 2);
  for (int i = 0; i < 100; ++i) {
    const FiniteMSet a = random_mset(u, 4, rng);
    const Scalar s(f, static_cast<long>(rng() % 5));
    const Scalar t(f, static_cast<long>(rng() % 5));
    EXPECT_EQ(mset_scalar(s, mset_scalar(t, a)), mset_scalar(s * t, a));
    EXPECT_EQ(mset_scalar(s, mset_scalar(t, a)), mset_scalar(t, mset_scalar(s, a)));
    const FiniteMSet bigger = mset_union(a, random_mset(u, 4, rng));
    EXPECT_TRUE(is_submset(mset_scalar(t, a), mset_scalar(t, bigger)));
    const FiniteMSet ta = mset_scalar(t, a);
    for (ElementIndex x = 0; x < u.size(); ++x) {
      EXPECT_GE(ta.count(u.scale(t.residue(), x)), a.count(x));
    }
  }
}

TEST(MSetLaws, SumIsCommutativeAndAssociative) {
  std::mt19937_64 rng(13);
  const Universe u(kGF3, 2);
  for (int i = 0; i < 100; ++i) {
    const FiniteMSet a = random_mset(u, 4, rng);
    const FiniteMSet b = random_mset(u, 4, rng);
    const FiniteMSet c = random_mset(u, 4, rng);
    EXPECT_EQ(mset_sum(a, b), mset_sum(b, a));
    EXPECT_EQ(mset_sum(mset_sum(a, b), c), mset_sum(a, mset_sum(b, c)));
  }
}

TEST(MSetLaws, SaturatedOriginIsSumIdentityOnSpaces) {
  // Constant masses on the subspaces {θ} ⊂ line ⊂ plane of GF(2)².
  const Universe u(kGF2, 2);
  const FiniteMSet origin = const_mset(u, 3, std::vector<ElementIndex>{0}, 3);
  const FiniteMSet v(u, 3, {3, 2, 1, 1});
  EXPECT_EQ(mset_sum(origin, v), v);
  EXPECT_EQ(mset_sum(v, v), v);
}

TEST(MSetLaws, PreimageOfImageDominates) {
  std::mt19937_64 rng(14);
  const Universe u(kGF2, 2);
  for (int i = 0; i < 100; ++i) {
    const FiniteMSet m = random_mset(u, 3, rng);
    std::vector<ElementIndex> f(u.size());
    for (auto& y : f) y = rng() % u.size();
    EXPECT_TRUE(is_submset(m, mset_preimage(u, f, mset_image(u, f, m))));
  }
}

}  // namespace
}  // namespace mvs
