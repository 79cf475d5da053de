#include "mvs/mvspace.hpp"

#include <algorithm>
#include <set>

namespace mvs {

MVSpace::MVSpace(Field field, std::size_t ambient, unsigned omega, std::vector<Level> chain)
    : field_(field), ambient_(ambient), omega_(omega), chain_(std::move(chain)) {}

MVSpace MVSpace::canonical(Field field, std::size_t ambient, unsigned omega, std::vector<Level> levels) {
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& a, const Level& b) { return a.count > b.count; });
  std::vector<Level> chain;
  for (auto& level : levels) {
    if (level.count == 0) continue;
    if (!chain.empty() && chain.back().subspace == level.subspace) continue;
    chain.push_back(std::move(level));
  }
  MVSpace v(field, ambient, omega, std::move(chain));
  if (const auto report = v.validate(); !report) throw InvariantViolation(report.violation);
  return v;
}

MVSpace MVSpace::constant(unsigned omega, unsigned n, const Subspace& s) {
  return canonical(s.field(), s.ambient(), omega, {Level{n, s}});
}

ValidationReport MVSpace::validate() const {
  auto fail = [](std::string what) { return ValidationReport{false, std::move(what)}; };
  if (chain_.empty()) return fail("empty chain");
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    const Level& l = chain_[i];
    const std::string where = "level " + std::to_string(i) + ": ";
    if (l.subspace.field() != field_ || l.subspace.ambient() != ambient_) {
      return fail(where + "subspace outside " + field_.to_string() + "^" + std::to_string(ambient_));
    }
    if (l.count > omega_) return fail(where + "count exceeds omega");
    if (l.count == 0) return fail(where + "count is zero");
  }
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (chain_[i].count >= chain_[i - 1].count) return fail("counts not strictly decreasing");
  }
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    const Subspace& lo = chain_[i - 1].subspace;
    const Subspace& hi = chain_[i].subspace;
    if (!is_subspace_of(lo, hi) || lo.rank() == hi.rank()) return fail("levels not strictly nested");
  }
  if (chain_.size() > ambient_ + 1) return fail("more than m+1 distinct counts");
  return {};
}

unsigned MVSpace::count(const Vector& x) const {
  for (const Level& l : chain_) {
    if (l.subspace.contains(x)) return l.count;
  }
  return 0;
}

Subspace MVSpace::level(unsigned n) const {
  if (n == 0 || n > omega_) {
    throw PreconditionError("level " + std::to_string(n) + " outside [1, " + std::to_string(omega_) + "]");
  }
  const Subspace* found = nullptr;
  for (const Level& l : chain_) {
    if (l.count >= n) found = &l.subspace;
  }
  return found ? *found : Subspace::zero(field_, ambient_);
}

unsigned MVSpace::top_nonzero_count() const {
  if (ambient_ == 0) return 0;
  for (const Level& l : chain_) {
    if (!l.subspace.is_zero()) return l.count;
  }
  return 0;
}

std::vector<unsigned> MVSpace::nonzero_count_range() const {
  std::vector<unsigned> out;
  for (const Level& l : chain_) {
    if (!l.subspace.is_zero()) out.push_back(l.count);
  }
  if (support().rank() < ambient_) out.push_back(0);
  return out;
}

namespace {

void require_same_space(const MVSpace& v, const MVSpace& w) {
  if (v.field() != w.field()) throw FieldMismatch("multi vector spaces over different fields");
  if (v.ambient() != w.ambient()) throw DimensionMismatch("multi vector spaces over different ambients");
  if (v.omega() != w.omega()) {
    throw PreconditionError("omega mismatch: " + std::to_string(v.omega()) + " vs " + std::to_string(w.omega()));
  }
}

template <typename Combine>
MVSpace levelwise(const MVSpace& v, const MVSpace& w, Combine combine) {
  require_same_space(v, w);
  const unsigned ceiling = std::min(v.top_count(), w.top_count());
  std::set<unsigned> candidates;
  for (const auto* s : {&v, &w}) {
    for (const Level& l : s->chain()) {
      if (l.count <= ceiling) candidates.insert(l.count);
    }
  }
  candidates.insert(ceiling);
  std::vector<Level> levels;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    levels.push_back(Level{*it, combine(v.level(*it), w.level(*it))});
  }
  return MVSpace::canonical(v.field(), v.ambient(), v.omega(), std::move(levels));
}

}  // namespace

MVSpace scale(const Scalar& lambda, const MVSpace& v) {
  if (lambda.field() != v.field()) throw FieldMismatch("scalar outside the space's field");
  if (!lambda.is_zero()) return v;
  return MVSpace::canonical(v.field(), v.ambient(), v.omega(),
                            {Level{v.top_count(), Subspace::zero(v.field(), v.ambient())}});
}

MVSpace sum(const MVSpace& v, const MVSpace& w) { return levelwise(v, w, subspace_sum); }

MVSpace intersect(const MVSpace& v, const MVSpace& w) { return levelwise(v, w, subspace_intersection); }

MVSpace restrict_to(const MVSpace& v, const Subspace& carrier) {
  if (carrier.field() != v.field() || carrier.ambient() != v.ambient()) {
    throw DimensionMismatch("carrier outside the space's ambient");
  }
  std::vector<Level> levels;
  for (const Level& l : v.chain()) levels.push_back(Level{l.count, subspace_intersection(l.subspace, carrier)});
  return MVSpace::canonical(v.field(), v.ambient(), v.omega(), std::move(levels));
}

bool equals(const MVSpace& v, const MVSpace& w) { return v == w; }

namespace {

ClosureWitness find_closure_witness(const Universe& u, const std::vector<ElementIndex>& set, unsigned level) {
  const std::set<ElementIndex> members(set.begin(), set.end());
  for (auto x : set) {
    for (std::uint64_t lambda = 0; lambda < u.prime(); ++lambda) {
      if (!members.contains(u.scale(lambda, x))) {
        return ClosureWitness{ClosureWitness::Kind::kScale, level, u.coordinates(x), {}, lambda};
      }
    }
  }
  for (auto x : set) {
    for (auto y : set) {
      if (!members.contains(u.add(x, y))) {
        return ClosureWitness{ClosureWitness::Kind::kSum, level, u.coordinates(x), u.coordinates(y), 0};
      }
    }
  }
  throw std::logic_error("level set closed under the operations but not a subspace");
}

std::string describe(const ClosureWitness& w) {
  auto vec = [](const std::vector<Scalar>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].to_string();
    return s + ")";
  };
  const std::string lvl = "level " + std::to_string(w.level) + " is not a subspace: ";
  switch (w.kind) {
    case ClosureWitness::Kind::kScale:
      return lvl + std::to_string(w.lambda) + "*" + vec(w.x) + " leaves the level";
    case ClosureWitness::Kind::kSum:
      return lvl + vec(w.x) + "+" + vec(w.y) + " leaves the level";
    case ClosureWitness::Kind::kEmpty:
      break;
  }
  return "count function is identically zero";
}

}  // namespace

MVSpace from_count_function(const FiniteMSet& m) {
  const Universe& u = m.universe();
  const Field field = u.field();
  const std::size_t dim = u.dimension();
  if (m.max_count() == 0) {
    const ClosureWitness w{ClosureWitness::Kind::kEmpty, 0, {}, {}, 0};
    throw NotAMultiVectorSpace(describe(w), w);
  }
  std::set<unsigned, std::greater<>> values(m.counts().begin(), m.counts().end());
  values.erase(0);
  std::vector<Level> levels;
  for (unsigned c : values) {
    const auto members = level_set(m, c);
    std::vector<Vector> gens;
    for (auto x : members) gens.emplace_back(field, u.coordinates(x));
    Subspace span = subspace_from_generators(field, dim, gens);
    std::size_t span_size = 1;
    for (std::size_t i = 0; i < span.rank(); ++i) span_size *= u.prime();
    if (span_size != members.size()) {
      const ClosureWitness w = find_closure_witness(u, members, c);
      throw NotAMultiVectorSpace(describe(w), w);
    }
    levels.push_back(Level{c, std::move(span)});
  }
  return MVSpace::canonical(field, dim, m.omega(), std::move(levels));
}

FiniteMSet to_count_function(const MVSpace& v) {
  if (!v.field().is_prime()) throw PreconditionError("count functions are enumerable only over GF(p)");
  const Universe u(v.field(), v.ambient());
  return FiniteMSet::from_function(u, v.omega(), [&](ElementIndex x) {
    return v.count(Vector(v.field(), u.coordinates(x)));
  });
}

std::string to_string(const MVSpace& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.chain().size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(v.chain()[i].count) + ":" + v.chain()[i].subspace.to_string();
  }
  return out + "]";
}

}  // namespace mvs
