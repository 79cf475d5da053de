#include "mvs/oracle.hpp"

#include <algorithm>
#include <set>

#include "mvs/errors.hpp"

namespace mvs::oracle {

namespace {

void charge(std::uint64_t work) {
  if (work > kWorkBudget) throw BudgetExceeded("oracle enumeration exceeds its work budget");
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    charge(r);
  }
  return r;
}

// Every coefficient tuple over {lo, ..., p-1}^k, fed to `visit` as digits.
template <typename Visit>
void for_each_tuple(std::size_t k, std::uint64_t lo, std::uint64_t p, Visit visit) {
  const std::uint64_t total = ipow(p - lo, k);
  std::vector<std::uint64_t> digits(k, lo);
  for (std::uint64_t n = 0; n < total; ++n) {
    visit(digits);
    for (std::size_t i = 0; i < k; ++i) {
      if (++digits[i] < p) break;
      digits[i] = lo;
    }
  }
}

ElementIndex combine(const Universe& u, std::span<const std::uint64_t> coeffs, std::span<const ElementIndex> xs) {
  ElementIndex acc = Universe::zero();
  for (std::size_t i = 0; i < xs.size(); ++i) acc = u.add(acc, u.scale(coeffs[i], xs[i]));
  return acc;
}

bool linearly_independent(const Universe& u, std::span<const ElementIndex> xs) {
  bool independent = true;
  for_each_tuple(xs.size(), 0, u.prime(), [&](const std::vector<std::uint64_t>& a) {
    const bool trivial = std::all_of(a.begin(), a.end(), [](std::uint64_t d) { return d == 0; });
    if (!trivial && combine(u, a, xs) == Universe::zero()) independent = false;
  });
  return independent;
}

}  // namespace

MVSpaceVerdict is_mvspace(const FiniteMSet& m) {
  const Universe& u = m.universe();
  charge(static_cast<std::uint64_t>(u.size()) * u.size());
  for (ElementIndex x = 0; x < u.size(); ++x) {
    for (ElementIndex y = 0; y < u.size(); ++y) {
      if (m.count(u.add(x, y)) < std::min(m.count(x), m.count(y))) {
        return {false, "sum " + std::to_string(x) + " " + std::to_string(y)};
      }
    }
    for (std::uint64_t lambda = 0; lambda < u.prime(); ++lambda) {
      if (m.count(u.scale(lambda, x)) < m.count(x)) {
        return {false, "scale " + std::to_string(lambda) + " " + std::to_string(x)};
      }
    }
  }
  return {};
}

FiniteMSet sum(const FiniteMSet& a, const FiniteMSet& b) {
  if (a.universe() != b.universe() || a.omega() != b.omega()) throw PreconditionError("msets over different spaces");
  const Universe& u = a.universe();
  charge(static_cast<std::uint64_t>(u.size()) * u.size());
  std::vector<unsigned> out(u.size(), 0);
  for (ElementIndex x = 0; x < u.size(); ++x) {
    unsigned best = 0;
    for (ElementIndex x1 = 0; x1 < u.size(); ++x1) {
      best = std::max(best, std::min(a.count(x1), b.count(u.subtract(x, x1))));
    }
    out[x] = best;
  }
  return FiniteMSet(u, a.omega(), std::move(out));
}

bool multi_independent(const FiniteMSet& m, std::span<const ElementIndex> xs) {
  const Universe& u = m.universe();
  if (!linearly_independent(u, xs)) return false;
  bool holds = true;
  for_each_tuple(xs.size(), 1, u.prime(), [&](const std::vector<std::uint64_t>& a) {
    unsigned least = m.omega();
    for (std::size_t i = 0; i < xs.size(); ++i) least = std::min(least, m.count(u.scale(a[i], xs[i])));
    if (xs.empty()) least = m.count(Universe::zero());
    if (m.count(combine(u, a, xs)) != least) holds = false;
  });
  return holds;
}

bool multi_independent_every_subset(const FiniteMSet& m, std::span<const ElementIndex> xs) {
  const Universe& u = m.universe();
  if (!linearly_independent(u, xs)) return false;
  bool holds = true;
  for_each_tuple(xs.size(), 0, u.prime(), [&](const std::vector<std::uint64_t>& a) {
    bool trivial = true;
    unsigned least = m.omega();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (a[i] == 0) continue;
      trivial = false;
      least = std::min(least, m.count(u.scale(a[i], xs[i])));
    }
    if (!trivial && m.count(combine(u, a, xs)) != least) holds = false;
  });
  return holds;
}

std::uint64_t mdim(const FiniteMSet& m) {
  const Universe& u = m.universe();
  const std::size_t n = u.dimension();
  // Unordered bases: Π (pⁿ − pⁱ) / n!.
  {
    const std::uint64_t pn = ipow(u.prime(), n);
    std::uint64_t bases = 1;
    for (std::size_t i = 0; i < n; ++i) {
      // Independent (i+1)-subsets; each partial quotient is exact.
      bases = bases * (pn - ipow(u.prime(), i)) / (i + 1);
      charge(bases);
    }
  }
  std::uint64_t best = 0;
  std::uint64_t visited = 0;
  // Depth-first over increasing element indices, keeping the spanned set so
  // that only independent extensions are explored.
  std::vector<ElementIndex> chosen;
  auto dfs = [&](auto&& self, ElementIndex from, const std::set<ElementIndex>& span, std::uint64_t total) -> void {
    charge(++visited);
    if (chosen.size() == n) {
      best = std::max(best, total);
      return;
    }
    for (ElementIndex x = from; x < u.size(); ++x) {
      if (span.contains(x)) continue;
      std::set<ElementIndex> grown;
      for (auto s : span) {
        for (std::uint64_t lambda = 0; lambda < u.prime(); ++lambda) grown.insert(u.add(s, u.scale(lambda, x)));
      }
      chosen.push_back(x);
      self(self, x + 1, grown, total + m.count(x));
      chosen.pop_back();
    }
  };
  dfs(dfs, 1, {Universe::zero()}, 0);
  return best;
}

FiniteMSet image(std::span<const std::vector<Scalar>> rows, const FiniteMSet& m) {
  const Universe& source = m.universe();
  const Universe target(source.field(), rows.size());
  std::vector<unsigned> out(target.size(), 0);
  for (ElementIndex x = 0; x < source.size(); ++x) {
    const auto coords = source.coordinates(x);
    std::vector<Scalar> y;
    for (const auto& row : rows) {
      if (row.size() != coords.size()) throw DimensionMismatch("map row length differs from the source dimension");
      Scalar acc = Scalar::zero(source.field());
      for (std::size_t j = 0; j < coords.size(); ++j) acc += row[j] * coords[j];
      y.push_back(acc);
    }
    auto& slot = out[target.index_of(y)];
    slot = std::max(slot, m.count(x));
  }
  return FiniteMSet(target, m.omega(), std::move(out));
}

}  // namespace mvs::oracle
