#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mvs/dimension.hpp"
#include "mvs/independence.hpp"
#include "mvs/linalg.hpp"
#include "mvs/mvspace.hpp"

namespace mvs::testing {

inline const Field kQ = Field::rational();

inline Vector vec(std::initializer_list<long> coords, Field f = kQ) { return Vector(f, coords); }

inline Subspace span_of(std::size_t m, std::vector<Vector> gens, Field f = kQ) {
  return subspace_from_generators(f, m, gens);
}

// Small spaces over Q with hand-checked counts.

/// C(θ)=4, C((0,a))=2 for a≠0, 1 elsewhere; ω=4.
inline MVSpace line_plane() {
  return MVSpace::canonical(kQ, 2, 4,
                            {{4, Subspace::zero(kQ, 2)}, {2, span_of(2, {vec({0, 1})})}, {1, Subspace::full(kQ, 2)}});
}

/// C(θ)=6, 1 elsewhere; ω=6.
inline MVSpace origin_plane() {
  return MVSpace::canonical(kQ, 2, 6, {{6, Subspace::zero(kQ, 2)}, {1, Subspace::full(kQ, 2)}});
}

/// Count 5 on {(0,0,*,*)}, 2 elsewhere; ω=5.
inline MVSpace split_q4() {
  return MVSpace::canonical(kQ, 4, 5,
                            {{5, span_of(4, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})})}, {2, Subspace::full(kQ, 4)}});
}

inline std::vector<Vector> split_q4_trap_basis() {
  return {vec({0, 0, 0, 1}), vec({-1, 1, 1, 1}), vec({1, -1, 1, 1}), vec({1, 1, -1, 1})};
}

/// V: θ/5, (0,a)/3, rest 1. ω=6.
inline MVSpace dominant_v() {
  return MVSpace::canonical(kQ, 2, 6,
                            {{5, Subspace::zero(kQ, 2)}, {3, span_of(2, {vec({0, 1})})}, {1, Subspace::full(kQ, 2)}});
}

/// W: θ/6, (x,x)/2, rest 1. ω=6.
inline MVSpace dominant_w() {
  return MVSpace::canonical(kQ, 2, 6,
                            {{6, Subspace::zero(kQ, 2)}, {2, span_of(2, {vec({1, 1})})}, {1, Subspace::full(kQ, 2)}});
}

// Seeded generators.

inline Scalar random_scalar(Field f, std::mt19937_64& rng, long range = 3) {
  if (f.is_rational()) {
    const long num = std::uniform_int_distribution<long>(-range, range)(rng);
    const long den = std::uniform_int_distribution<long>(1, 2)(rng);
    return Scalar(f, mpz_class(num), mpz_class(den));
  }
  return Scalar(f, static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, f.characteristic() - 1)(rng)));
}

inline Vector random_vector(Field f, std::size_t m, std::mt19937_64& rng) {
  Vector v(f, m);
  for (std::size_t i = 0; i < m; ++i) v[i] = random_scalar(f, rng);
  return v;
}

inline Scalar random_nonzero_scalar(Field f, std::mt19937_64& rng) {
  while (true) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

/// Random combination of the rows of S.
inline Vector random_member(const Subspace& s, std::mt19937_64& rng) {
  Vector v(s.field(), s.ambient());
  for (const auto& row : s.rows()) v += random_scalar(s.field(), rng) * row;
  return v;
}

inline std::vector<Vector> random_basis(Field f, std::size_t m, std::mt19937_64& rng) {
  std::vector<Vector> basis;
  while (basis.size() < m) {
    basis.push_back(random_vector(f, m, rng));
    if (!linearly_independent(basis)) basis.pop_back();
  }
  return basis;
}

inline Subspace random_subspace(Field f, std::size_t m, std::size_t rank, std::mt19937_64& rng) {
  auto basis = random_basis(f, m, rng);
  basis.resize(rank);
  return subspace_from_generators(f, m, basis);
}

/// `count` distinct values from [lo, hi], decreasing.
inline std::vector<unsigned> distinct_counts(std::size_t count, unsigned lo, unsigned hi, std::mt19937_64& rng) {
  std::vector<unsigned> pool;
  for (unsigned c = lo; c <= hi; ++c) pool.push_back(c);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.rbegin(), pool.rend());
  return pool;
}

struct ChainShape {
  bool allow_proper_support = true;
  bool theta_head = false;  // force U₀ = {θ}
};

/// Random valid chain with counts drawn from [lo, hi].
inline MVSpace random_mvspace(Field f, std::size_t m, unsigned omega, std::mt19937_64& rng, unsigned lo, unsigned hi,
                              ChainShape shape = {}) {
  const auto basis = random_basis(f, m, rng);
  // Distinct ranks r₀ < r₁ < … chosen from 0..m.
  std::vector<std::size_t> ranks;
  for (std::size_t r = 0; r <= m; ++r) ranks.push_back(r);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  const std::size_t max_levels = std::min<std::size_t>(m + 1, hi - lo + 1);
  std::size_t levels = std::uniform_int_distribution<std::size_t>(1, max_levels)(rng);
  ranks.resize(levels);
  std::sort(ranks.begin(), ranks.end());
  if (shape.theta_head && ranks.front() != 0) {
    ranks.insert(ranks.begin(), 0);
    if (ranks.size() > max_levels) ranks.pop_back();
  }
  if (!shape.allow_proper_support || std::bernoulli_distribution(0.7)(rng)) {
    if (ranks.back() != m) {
      if (ranks.size() < max_levels) {
        ranks.push_back(m);
      } else {
        ranks.back() = m;
      }
    }
  }
  // Keep strictly increasing after the adjustments.
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  const auto counts = distinct_counts(ranks.size(), lo, hi, rng);
  std::vector<Level> chain;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    std::vector<Vector> gens(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(ranks[i]));
    chain.push_back({counts[i], subspace_from_generators(f, m, gens)});
  }
  return MVSpace::canonical(f, m, omega, std::move(chain));
}

inline MVSpace random_mvspace(Field f, std::size_t m, unsigned omega, std::mt19937_64& rng) {
  return random_mvspace(f, m, omega, rng, 1, omega);
}

/// A pair satisfying theta dominance. Mostly θ-headed chains with large top
/// counts; occasionally equal tops with a non-trivial head.
inline std::pair<MVSpace, MVSpace> random_dominant_pair(Field f, std::size_t m, unsigned omega, std::mt19937_64& rng) {
  while (true) {
    MVSpace v = random_mvspace(f, m, omega, rng);
    MVSpace w = random_mvspace(f, m, omega, rng);
    if (theta_dominance(v, w)) return {std::move(v), std::move(w)};
    const unsigned tv = std::uniform_int_distribution<unsigned>(omega / 2 + 1, omega)(rng);
    const unsigned tw = std::uniform_int_distribution<unsigned>(omega / 2 + 1, omega)(rng);
    auto rebuild = [&](unsigned top, unsigned cap) {
      MVSpace body = random_mvspace(f, m, omega, rng, 1, std::max(1U, std::min(top - 1, cap)), {true, true});
      std::vector<Level> chain = body.chain();
      chain.front().count = top;
      return MVSpace::canonical(f, m, omega, std::move(chain));
    };
    v = rebuild(tv, tw);
    w = rebuild(tw, tv);
    if (theta_dominance(v, w)) return {std::move(v), std::move(w)};
  }
}

inline LinearMap random_map(Field f, std::size_t domain, std::size_t codomain, std::mt19937_64& rng) {
  Matrix a(f, codomain, domain);
  const std::size_t rank_cap = std::uniform_int_distribution<std::size_t>(0, std::min(domain, codomain))(rng);
  // Product of random thin factors gives a spread of ranks.
  Matrix left(f, codomain, rank_cap);
  Matrix right(f, rank_cap, domain);
  for (std::size_t r = 0; r < codomain; ++r)
    for (std::size_t c = 0; c < rank_cap; ++c) left(r, c) = random_scalar(f, rng);
  for (std::size_t r = 0; r < rank_cap; ++r)
    for (std::size_t c = 0; c < domain; ++c) right(r, c) = random_scalar(f, rng);
  return LinearMap(rank_cap == 0 ? a : left * right);
}

}  // namespace mvs::testing
