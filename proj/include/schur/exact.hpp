#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace schur::exact {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a configurable resource guard (grid size, closure cap,
/// rewrite step cap) is exceeded. Never silently truncates a result.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Trial-division primality test; adequate for desk-scale moduli.
bool is_prime(long p);

/// Generalized binomial coefficient.
/// For a >= 0 the standard value (0 when b > a); for a < 0 the signed
/// reflection binom(a,b) = (-1)^b binom(-a+b-1, b). Requires b >= 0.
Int binomial(const Int& a, const Int& b);
Int binomial(long a, long b);

/// Base-p expansion of a nonnegative integer, least significant digit first.
/// Zero is represented as the single digit [0].
struct PAdicDigits {
  long prime = 0;
  std::vector<long> digits;

  Int value() const;
};

PAdicDigits p_adic_digits(const Int& a, long p);

/// binom(a,b) mod p computed digitwise over the p-adic expansions
/// (Lucas). Requires a, b >= 0 and p prime. Returns the residue in [0,p).
long binomial_mod_p_lucas(const Int& a, const Int& b, long p);

/// Residue of the generalized binomial binom(a,k) mod p for word-sized
/// arguments; a may be negative (reflection rule). Exact, no overflow for
/// |a|, k below ~2^62.
long binomial_mod_p(long a, long k, long p);

/// Number of base-p carries when adding (a-b) to b; equals the p-adic
/// valuation of binom(a,b) (Kummer). Requires a >= b >= 0 and p prime.
long kummer_carry_count(const Int& a, const Int& b, long p);

/// p-adic valuation of a! via the Legendre sum. Used as an independent
/// oracle for the carry count.
Int factorial_valuation(const Int& a, long p);

class Scalar;

/// Ground field descriptor: the rationals (characteristic 0) or the prime
/// field F_p. Primality is validated once here, at construction.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(long p);

  long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(const Int& v) const;
  Scalar from_long(long v) const;
  /// Exact generalized binomial embedded into the field.
  Scalar binomial(const Int& a, const Int& b) const;
  Scalar binomial(long a, long b) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(long p) : p_(p) {}
  long p_;
};

/// Exact field element: a reduced rational or a prime-field residue.
/// Operands of any arithmetic operation must share their characteristic.
class Scalar {
 public:
  Scalar() : p_(0) {}  // rational zero

  static Scalar rational(Rat v);
  static Scalar rational(long num, long den = 1);
  static Scalar residue(long v, long p);

  long characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  const Rat& rat() const;
  long res() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact decimal rendering: "num/den" (den omitted when 1) or the residue.
  std::string str() const;

 private:
  explicit Scalar(long p) : p_(p) {}
  static void match(const Scalar& a, const Scalar& b);
  long p_;     // 0 = rational
  Rat q_;      // value when p_ == 0
  long r_ = 0; // value in [0, p_) when p_ > 0
};

}  // namespace schur::exact
