#include "mvs/scalar.hpp"


#include "mvs/errors.hpp"

namespace mvs {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw PreconditionError("malformed integer '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw PreconditionError("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime_number(p)) {
    throw PreconditionError("GF(" + std::to_string(p) + ") is not a supported prime field");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "GF " + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_mod(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint64_t p = field.characteristic();
    const std::uint64_t d = reduce_mod(den, p);
    if (d == 0) throw PreconditionError("denominator vanishes in " + field.to_string());
    value_ = reduce_mod(num, p) * pow_mod(d, p - 2, p) % p;
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, parse_integer(text), mpz_class(1));
  return Scalar(field, parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("scalar is not a residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("mixed fields " + field_.to_string() + " and " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* q = std::get_if<mpq_class>(&out.value_)) {
    *q = -*q;
  } else {
    auto& r = std::get<std::uint64_t>(out.value_);
    r = (r == 0) ? 0 : field_.characteristic() - r;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar out = *this;
  if (auto* q = std::get_if<mpq_class>(&out.value_)) {
    *q = 1 / *q;
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(out.value_);
    r = pow_mod(r, p - 2, p);
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(rhs.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_rational()) {
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace mvs
