#include "mvs/independence.hpp"

#include <algorithm>
#include <map>

namespace mvs {

namespace {

constexpr std::uint64_t kEnumerationBudget = 1'000'000;

void require_vectors_in(const MVSpace& v, std::span<const Vector> xs) {
  for (const auto& x : xs) {
    if (x.field() != v.field()) throw FieldMismatch("vector outside the space's field");
    if (x.size() != v.ambient()) {
      throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in F^" +
                              std::to_string(v.ambient()));
    }
  }
}

// Over GF(p) with k < p: fix zero coordinates one at a time. Moving along a
// row that is nonzero at coordinate i kills at most one value of s per
// currently nonzero coordinate, so some s ∈ F* survives.
std::optional<Vector> all_nonzero_in_window(const Subspace& w) {
  const std::size_t k = w.ambient();
  const Field field = w.field();
  if (k == 0) return Vector(field, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::none_of(w.rows().begin(), w.rows().end(), [&](const Vector& r) { return !r[i].is_zero(); })) {
      return std::nullopt;
    }
  }
  Vector a = w.rows().front();
  for (std::size_t i = 0; i < k; ++i) {
    if (!a[i].is_zero()) continue;
    const auto row = std::find_if(w.rows().begin(), w.rows().end(), [&](const Vector& r) { return !r[i].is_zero(); });
    bool moved = false;
    for (std::uint64_t s = 1; s < field.characteristic() && !moved; ++s) {
      const Vector candidate = a + Scalar(field, static_cast<long>(s)) * *row;
      bool keeps = !candidate[i].is_zero();
      for (std::size_t l = 0; l < k && keeps; ++l) keeps = a[l].is_zero() || !candidate[l].is_zero();
      if (keeps) {
        a = candidate;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("all-nonzero search left its validity window");
  }
  return a;
}

std::optional<Vector> all_nonzero_by_enumeration(const Subspace& w) {
  const std::size_t k = w.ambient();
  const Field field = w.field();
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= (p - 1);
    if (total > kEnumerationBudget) throw BudgetExceeded("too many coefficient tuples to enumerate");
  }
  std::vector<std::uint64_t> digits(k, 1);
  for (std::uint64_t n = 0; n < total; ++n) {
    Vector a(field, k);
    for (std::size_t i = 0; i < k; ++i) a[i] = Scalar(field, static_cast<long>(digits[i]));
    if (w.contains(a)) return a;
    for (std::size_t i = 0; i < k; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 1;
    }
  }
  return std::nullopt;
}

std::optional<Vector> find_all_nonzero(const Subspace& w) {
  if (w.field().is_rational()) return has_all_nonzero_vector(w);
  if (w.ambient() < w.field().characteristic()) return all_nonzero_in_window(w);
  return all_nonzero_by_enumeration(w);
}

const Subspace& full_space_of(const MVSpace& v, std::optional<Subspace>& storage) {
  storage = Subspace::full(v.field(), v.ambient());
  return *storage;
}

Vector random_member_outside(const Subspace& level, const Subspace& y, std::mt19937_64& rng) {
  const Field field = level.field();
  while (true) {
    Vector t(field, level.ambient());
    for (const auto& row : level.rows()) {
      long c = 0;
      if (field.is_rational()) {
        c = std::uniform_int_distribution<long>(-3, 3)(rng);
      } else {
        c = static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, field.characteristic() - 1)(rng));
      }
      if (c != 0) t += Scalar(field, c) * row;
    }
    if (!y.contains(t)) return t;
  }
}

template <typename Pick>
std::vector<Vector> build_mbasis(const MVSpace& v, const Subspace& carrier, Pick pick) {
  std::vector<Vector> basis;
  Subspace y = Subspace::zero(v.field(), v.ambient());
  while (y.rank() < carrier.rank()) {
    basis.push_back(pick(y));
    y = subspace_from_generators(v.field(), v.ambient(), basis);
  }
  return basis;
}

}  // namespace

IndependenceResult is_multi_linearly_independent(const MVSpace& v, std::span<const Vector> xs) {
  require_vectors_in(v, xs);
  IndependenceResult result;
  if (!linearly_independent(xs)) {
    result.linearly_dependent = true;
    return result;
  }
  if (xs.empty()) {
    result.independent = true;
    result.min_count = v.top_count();
    return result;
  }
  unsigned n_star = v.top_count();
  for (const auto& x : xs) n_star = std::min(n_star, v.count(x));
  result.min_count = n_star;

  // Only the largest level above n* matters: the deeper ones sit inside it.
  const Subspace* target = nullptr;
  for (const Level& l : v.chain()) {
    if (l.count > n_star) target = &l.subspace;
  }
  if (target == nullptr) {
    result.independent = true;
    return result;
  }
  const Subspace coeffs = coefficient_space(xs, *target);
  const auto a = find_all_nonzero(coeffs);
  if (!a) {
    result.independent = true;
    return result;
  }
  std::vector<Scalar> witness(a->coords().begin(), a->coords().end());
  result.witness_count = v.count(linear_combination(witness, xs, Vector(v.field(), v.ambient())));
  result.witness = std::move(witness);
  return result;
}

IndependenceResult is_hereditarily_multi_independent(const MVSpace& v, std::span<const Vector> xs) {
  require_vectors_in(v, xs);
  IndependenceResult result;
  if (!linearly_independent(xs)) {
    result.linearly_dependent = true;
    return result;
  }
  result.min_count = v.top_count();
  for (const auto& x : xs) result.min_count = std::min(result.min_count, v.count(x));
  if (xs.empty()) {
    result.independent = true;
    return result;
  }
  for (const Level& l : v.chain()) {
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!l.subspace.contains(xs[i])) outside.push_back(i);
    }
    if (outside.empty()) continue;
    const Subspace coeffs = coefficient_space(xs, l.subspace);
    for (const auto& row : coeffs.rows()) {
      if (std::none_of(outside.begin(), outside.end(), [&](std::size_t i) { return !row[i].is_zero(); })) continue;
      std::vector<Scalar> witness(row.coords().begin(), row.coords().end());
      result.witness_count = v.count(linear_combination(witness, xs, Vector(v.field(), v.ambient())));
      result.witness = std::move(witness);
      return result;
    }
  }
  result.independent = true;
  return result;
}

Vector extend_step(const MVSpace& v, const Subspace& y, const Subspace& carrier) {
  if (y.field() != v.field() || y.ambient() != v.ambient()) throw DimensionMismatch("Y outside the space's ambient");
  if (!is_subspace_of(y, carrier) || y.rank() == carrier.rank()) {
    throw PreconditionError("extend_step needs a proper subspace of the carrier");
  }
  for (const Level& l : v.chain()) {
    const Subspace region = subspace_intersection(l.subspace, carrier);
    for (const auto& row : region.rows()) {
      if (!y.contains(row)) return row;
    }
  }
  for (const auto& row : carrier.rows()) {
    if (!y.contains(row)) return row;
  }
  throw std::logic_error("no carrier row outside a proper subspace");
}

Vector extend_step(const MVSpace& v, const Subspace& y) {
  std::optional<Subspace> full;
  return extend_step(v, y, full_space_of(v, full));
}

MBasis MBasis::certify(const MVSpace& v, std::vector<Vector> vectors) {
  require_vectors_in(v, vectors);
  if (vectors.size() != v.ambient() || !is_hereditarily_multi_independent(v, vectors).independent) {
    throw InvariantViolation("vectors do not form an M-basis");
  }
  MBasis b;
  b.space_ = v;
  b.counts_.reserve(vectors.size());
  for (const auto& e : vectors) b.counts_.push_back(v.count(e));
  b.vectors_ = std::move(vectors);
  return b;
}

bool MBasis::extends_beyond_support() const {
  return std::any_of(counts_.begin(), counts_.end(), [](unsigned c) { return c == 0; });
}

std::vector<Vector> find_mbasis_within(const MVSpace& v, const Subspace& carrier) {
  return build_mbasis(v, carrier, [&](const Subspace& y) { return extend_step(v, y, carrier); });
}

MBasis find_mbasis(const MVSpace& v) {
  std::optional<Subspace> full;
  return MBasis::certify(v, find_mbasis_within(v, full_space_of(v, full)));
}

MBasis find_mbasis_randomized(const MVSpace& v, std::mt19937_64& rng) {
  const Subspace full = Subspace::full(v.field(), v.ambient());
  auto basis = build_mbasis(v, full, [&](const Subspace& y) {
    for (const Level& l : v.chain()) {
      if (!is_subspace_of(l.subspace, y)) return random_member_outside(l.subspace, y, rng);
    }
    return random_member_outside(full, y, rng);
  });
  return MBasis::certify(v, std::move(basis));
}

bool is_mbasis(const MVSpace& v, std::span<const Vector> b) {
  require_vectors_in(v, b);
  if (b.size() != v.ambient() || !linearly_independent(b)) return false;
  for (const Level& l : v.chain()) {
    const auto inside = std::count_if(b.begin(), b.end(), [&](const Vector& e) { return l.subspace.contains(e); });
    if (static_cast<std::size_t>(inside) != l.subspace.rank()) return false;
  }
  return true;
}

std::size_t MultiIndex::total() const {
  std::size_t t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

MultiIndex multi_index(const MVSpace& v) {
  MultiIndex index;
  std::size_t previous = 0;
  for (const Level& l : v.chain()) {
    const std::size_t r = l.subspace.rank() - previous;
    if (r > 0) index.entries.push_back({l.count, r});
    previous = l.subspace.rank();
  }
  if (previous < v.ambient()) index.entries.push_back({0, v.ambient() - previous});
  return index;
}

MultiIndex basis_index(const MVSpace& v, std::span<const Vector> b) {
  require_vectors_in(v, b);
  if (b.size() != v.ambient() || !linearly_independent(b)) throw PreconditionError("not a basis of the ambient space");
  std::map<unsigned, std::size_t, std::greater<>> histogram;
  for (const auto& e : b) ++histogram[v.count(e)];
  MultiIndex index;
  for (const auto& [count, mult] : histogram) index.entries.push_back({count, mult});
  return index;
}

bool mbasis_by_index_test(const MVSpace& v, std::span<const Vector> b) {
  const MultiIndex index = basis_index(v, b);
  std::vector<unsigned> counts;
  for (const auto& e : index.entries) counts.push_back(e.count);
  if (counts != v.nonzero_count_range()) {
    throw PreconditionError("basis counts do not cover the count range of the space");
  }
  const bool matches = index == multi_index(v);
  if (matches && !is_mbasis(v, b)) throw std::logic_error("index test accepted a non-M-basis");
  return matches;
}

std::string to_string(const MultiIndex& index) {
  std::string out;
  for (const auto& e : index.entries) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(e.count) + "," + std::to_string(e.multiplicity) + ")";
  }
  return out;
}

unsigned MultiBasis::count(const Vector& x) const {
  for (const auto& e : entries_) {
    if (e.vector == x) return e.count;
  }
  return 0;
}

std::vector<Vector> MultiBasis::level(unsigned n) const {
  std::vector<Vector> out;
  for (const auto& e : entries_) {
    if (e.count >= n) out.push_back(e.vector);
  }
  return out;
}

MultiBasis to_multi_basis(const MVSpace& v, const MBasis& b) {
  if (!(b.space() == v)) throw PreconditionError("M-basis certified against a different space");
  std::vector<MultiBasisEntry> entries;
  for (const auto& e : b.vectors()) {
    unsigned c = 0;
    for (const Level& l : v.chain()) {
      if (l.subspace.contains(e)) c = std::max(c, l.count);
    }
    entries.push_back({e, c});
  }
  return MultiBasis(v, std::move(entries));
}

MBasis from_multi_basis(const MultiBasis& beta) {
  const MVSpace& v = beta.space();
  std::vector<Vector> vectors;
  for (const auto& e : beta.entries()) {
    if (e.count != v.count(e.vector)) throw InvariantViolation("multi basis count disagrees with the space");
    vectors.push_back(e.vector);
  }
  for (const Level& l : v.chain()) {
    const auto members = beta.level(l.count);
    if (members.size() != l.subspace.rank() ||
        subspace_from_generators(v.field(), v.ambient(), members) != l.subspace) {
      throw InvariantViolation("multi basis level is not a basis of the matching level");
    }
  }
  return MBasis::certify(v, std::move(vectors));
}

}  // namespace mvs
