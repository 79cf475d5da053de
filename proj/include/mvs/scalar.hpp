#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace mvs {

/// The coefficient field: either the rationals or GF(p) for a prime p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field{}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  constexpr std::uint64_t characteristic() const { return p_; }

  /// "Q" or "GF <p>", the spelling used by space files.
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept normalized (gcd 1, positive
/// denominator); residues live in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  /// Accepts an optionally signed integer or "p/q".
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rational scalars.
  const mpq_class& rational() const;
  /// Only valid for prime-field scalars.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for deterministic sorting: numeric order on the
  /// rationals, residue order on GF(p).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "3", "-1/2"; residues print as their representative in [0, p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace mvs
