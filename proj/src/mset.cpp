#include "mvs/mset.hpp"

#include <algorithm>

#include "mvs/errors.hpp"

namespace mvs {

Universe::Universe(Field field, std::size_t dimension) : field_(field), dimension_(dimension) {
  if (!field.is_prime()) throw PreconditionError("finite universes need a prime field");
  for (std::size_t i = 0; i < dimension; ++i) {
    size_ *= field.characteristic();
    if (size_ > kMaxElements) {
      throw BudgetExceeded(field.to_string() + "^" + std::to_string(dimension) + " exceeds " +
                           std::to_string(kMaxElements) + " elements");
    }
  }
}

std::vector<std::uint64_t> Universe::digits(ElementIndex x) const {
  if (x >= size_) throw PreconditionError("element index outside the universe");
  std::vector<std::uint64_t> out(dimension_);
  for (std::size_t i = dimension_; i-- > 0;) {
    out[i] = x % prime();
    x /= prime();
  }
  return out;
}

ElementIndex Universe::from_digits(std::span<const std::uint64_t> digits) const {
  if (digits.size() != dimension_) throw PreconditionError("element of wrong dimension");
  ElementIndex x = 0;
  for (auto d : digits) {
    if (d >= prime()) throw PreconditionError("digit outside GF(p)");
    x = x * prime() + d;
  }
  return x;
}

std::vector<Scalar> Universe::coordinates(ElementIndex x) const {
  std::vector<Scalar> out;
  for (auto d : digits(x)) out.emplace_back(field_, static_cast<long>(d));
  return out;
}

ElementIndex Universe::index_of(std::span<const Scalar> coords) const {
  std::vector<std::uint64_t> d;
  for (const auto& c : coords) {
    if (c.field() != field_) throw PreconditionError("coordinate outside " + field_.to_string());
    d.push_back(c.residue());
  }
  return from_digits(d);
}

ElementIndex Universe::add(ElementIndex x, ElementIndex y) const {
  auto a = digits(x);
  const auto b = digits(y);
  for (std::size_t i = 0; i < dimension_; ++i) a[i] = (a[i] + b[i]) % prime();
  return from_digits(a);
}

ElementIndex Universe::negate(ElementIndex x) const {
  auto a = digits(x);
  for (auto& d : a) d = (prime() - d) % prime();
  return from_digits(a);
}

ElementIndex Universe::scale(std::uint64_t lambda, ElementIndex x) const {
  auto a = digits(x);
  for (auto& d : a) d = d * (lambda % prime()) % prime();
  return from_digits(a);
}

FiniteMSet::FiniteMSet(Universe universe, unsigned omega, std::vector<unsigned> counts)
    : universe_(universe), omega_(omega), counts_(std::move(counts)) {
  if (counts_.size() != universe_.size()) throw PreconditionError("count table does not cover the universe");
  for (unsigned c : counts_) {
    if (c > omega_) {
      throw InvariantViolation("count " + std::to_string(c) + " exceeds omega " + std::to_string(omega_));
    }
  }
}

FiniteMSet FiniteMSet::empty(Universe universe, unsigned omega) {
  return FiniteMSet(universe, omega, std::vector<unsigned>(universe.size(), 0));
}

FiniteMSet FiniteMSet::from_function(Universe universe, unsigned omega,
                                     const std::function<unsigned(ElementIndex)>& count) {
  std::vector<unsigned> counts(universe.size());
  for (ElementIndex x = 0; x < universe.size(); ++x) counts[x] = count(x);
  return FiniteMSet(universe, omega, std::move(counts));
}

unsigned FiniteMSet::count(ElementIndex x) const {
  if (x >= counts_.size()) throw PreconditionError("element outside the universe");
  return counts_[x];
}

unsigned FiniteMSet::max_count() const { return *std::max_element(counts_.begin(), counts_.end()); }

namespace {

void require_same_space(const FiniteMSet& a, const FiniteMSet& b) {
  if (a.universe() != b.universe()) throw PreconditionError("msets over different universes");
  if (a.omega() != b.omega()) throw PreconditionError("msets with different omega");
}

template <typename Op>
FiniteMSet pointwise(const FiniteMSet& a, const FiniteMSet& b, Op op) {
  require_same_space(a, b);
  std::vector<unsigned> out(a.counts().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.counts()[i], b.counts()[i]);
  return FiniteMSet(a.universe(), a.omega(), std::move(out));
}

}  // namespace

std::vector<ElementIndex> level_set(const FiniteMSet& m, unsigned n) {
  if (n == 0) throw PreconditionError("level 0 is not a level set");
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < m.counts().size(); ++x) {
    if (m.counts()[x] >= n) out.push_back(x);
  }
  return out;
}

FiniteMSet mset_union(const FiniteMSet& a, const FiniteMSet& b) {
  return pointwise(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
}

FiniteMSet mset_intersection(const FiniteMSet& a, const FiniteMSet& b) {
  return pointwise(a, b, [](unsigned x, unsigned y) { return std::min(x, y); });
}

bool is_submset(const FiniteMSet& a, const FiniteMSet& b) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    if (a.counts()[i] > b.counts()[i]) return false;
  }
  return true;
}

FiniteMSet const_mset(const Universe& universe, unsigned omega, std::span<const ElementIndex> p, unsigned n) {
  if (n > omega) throw PreconditionError("constant count exceeds omega");
  std::vector<unsigned> counts(universe.size(), 0);
  for (auto x : p) {
    if (x >= universe.size()) throw PreconditionError("element outside the universe");
    counts[x] = n;
  }
  return FiniteMSet(universe, omega, std::move(counts));
}

FiniteMSet mset_sum(const FiniteMSet& a, const FiniteMSet& b) {
  require_same_space(a, b);
  const Universe& u = a.universe();
  std::vector<unsigned> out(u.size(), 0);
  for (ElementIndex x1 = 0; x1 < u.size(); ++x1) {
    const unsigned ca = a.counts()[x1];
    if (ca == 0) continue;
    for (ElementIndex x2 = 0; x2 < u.size(); ++x2) {
      const unsigned c = std::min(ca, b.counts()[x2]);
      auto& slot = out[u.add(x1, x2)];
      slot = std::max(slot, c);
    }
  }
  return FiniteMSet(u, a.omega(), std::move(out));
}

FiniteMSet mset_scalar(const Scalar& lambda, const FiniteMSet& b) {
  const Universe& u = b.universe();
  if (lambda.field() != u.field()) throw FieldMismatch("scalar outside the universe's field");
  std::vector<unsigned> out(u.size(), 0);
  for (ElementIndex x = 0; x < u.size(); ++x) {
    auto& slot = out[u.scale(lambda.residue(), x)];
    slot = std::max(slot, b.counts()[x]);
  }
  return FiniteMSet(u, b.omega(), std::move(out));
}

FiniteMSet mset_image(const Universe& target, std::span<const ElementIndex> f, const FiniteMSet& m) {
  if (f.size() != m.universe().size()) throw PreconditionError("map is not total on the source universe");
  std::vector<unsigned> out(target.size(), 0);
  for (ElementIndex x = 0; x < f.size(); ++x) {
    if (f[x] >= target.size()) throw PreconditionError("map leaves the target universe");
    out[f[x]] = std::max(out[f[x]], m.counts()[x]);
  }
  return FiniteMSet(target, m.omega(), std::move(out));
}

FiniteMSet mset_preimage(const Universe& source, std::span<const ElementIndex> f, const FiniteMSet& n) {
  if (f.size() != source.size()) throw PreconditionError("map is not total on the source universe");
  std::vector<unsigned> out(source.size(), 0);
  for (ElementIndex x = 0; x < f.size(); ++x) out[x] = n.count(f[x]);
  return FiniteMSet(source, n.omega(), std::move(out));
}

}  // namespace mvs
