#include "schur/exact.hpp"

#include <sstream>

namespace schur::exact {

bool is_prime(long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

static void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Int binomial(const Int& a, const Int& b) {
  if (b < 0) throw std::invalid_argument("binomial: lower index must be nonnegative");
  if (a >= 0 && a < b) return 0;
  if (!b.fits_ulong_p()) throw cap_exceeded("binomial: lower index too large");
  unsigned long k = b.get_ui();
  if (a < 0) {
    // binom(a,b) = (-1)^b binom(-a+b-1, b)
    Int refl = binomial(Int(-a + b - 1), b);
    return (k % 2 == 0) ? refl : Int(-refl);
  }
  // falling-factorial product with exact stepwise division
  Int r = 1;
  for (unsigned long t = 0; t < k; ++t) {
    r *= a - static_cast<long>(t);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), t + 1);
  }
  return r;
}

Int binomial(long a, long b) { return binomial(Int(a), Int(b)); }

Int PAdicDigits::value() const {
  Int v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * prime + *it;
  return v;
}

PAdicDigits p_adic_digits(const Int& a, long p) {
  require_prime(p);
  if (a < 0) throw std::invalid_argument("p_adic_digits: negative argument");
  PAdicDigits out;
  out.prime = p;
  Int v = a;
  if (v == 0) {
    out.digits.push_back(0);
    return out;
  }
  while (v != 0) {
    out.digits.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
    v /= p;
  }
  return out;
}

// binom(x,y) mod p for digits 0 <= x,y < p.
static long digit_binomial_mod(long x, long y, long p) {
  if (y > x) return 0;
  long num = 1, den = 1;
  for (long t = 0; t < y; ++t) {
    num = (num * ((x - t) % p)) % p;
    den = (den * ((t + 1) % p)) % p;
  }
  // den is invertible mod p (all factors < p)
  long inv = 1, base = den % p, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = (inv * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return (num * inv) % p;
}

long binomial_mod_p_lucas(const Int& a, const Int& b, long p) {
  require_prime(p);
  if (a < 0 || b < 0) throw std::invalid_argument("binomial_mod_p_lucas: negative argument");
  Int x = a, y = b;
  long r = 1;
  while ((x != 0 || y != 0) && r != 0) {
    long xd = mpz_fdiv_ui(x.get_mpz_t(), p);
    long yd = mpz_fdiv_ui(y.get_mpz_t(), p);
    r = (r * digit_binomial_mod(xd, yd, p)) % p;
    x /= p;
    y /= p;
  }
  return r;
}

long binomial_mod_p(long a, long k, long p) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("binomial_mod_p: negative lower index");
  if (a < 0) {
    long r = binomial_mod_p(-a + k - 1, k, p);
    if (k % 2 != 0) r = (p - r) % p;
    return r;
  }
  if (k > a) return 0;
  long r = 1;
  while ((a != 0 || k != 0) && r != 0) {
    r = (r * digit_binomial_mod(a % p, k % p, p)) % p;
    a /= p;
    k /= p;
  }
  return r;
}

long kummer_carry_count(const Int& a, const Int& b, long p) {
  require_prime(p);
  if (b < 0 || a < b) throw std::invalid_argument("kummer_carry_count: requires a >= b >= 0");
  Int x = a - b, y = b;
  long carries = 0, carry = 0;
  while (x != 0 || y != 0 || carry != 0) {
    long xd = mpz_fdiv_ui(x.get_mpz_t(), p);
    long yd = mpz_fdiv_ui(y.get_mpz_t(), p);
    long s = xd + yd + carry;
    carry = (s >= p) ? 1 : 0;
    carries += carry;
    x /= p;
    y /= p;
  }
  return carries;
}

Int factorial_valuation(const Int& a, long p) {
  require_prime(p);
  if (a < 0) throw std::invalid_argument("factorial_valuation: negative argument");
  Int v = 0, q = a / p;
  while (q != 0) {
    v += q;
    q /= p;
  }
  return v;
}

Field Field::prime(long p) {
  require_prime(p);
  return Field(p);
}

Scalar Field::zero() const { return is_rational() ? Scalar::rational(0) : Scalar::residue(0, p_); }
Scalar Field::one() const { return is_rational() ? Scalar::rational(1) : Scalar::residue(1, p_); }

Scalar Field::from_int(const Int& v) const {
  if (is_rational()) return Scalar::rational(Rat(v));
  return Scalar::residue(static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), p_)), p_);
}

Scalar Field::from_long(long v) const {
  if (is_rational()) return Scalar::rational(v);
  return Scalar::residue(v % p_, p_);
}

Scalar Field::binomial(const Int& a, const Int& b) const {
  if (is_rational()) return Scalar::rational(Rat(exact::binomial(a, b)));
  if (a.fits_slong_p() && b.fits_slong_p())
    return Scalar::residue(binomial_mod_p(a.get_si(), b.get_si(), p_), p_);
  return from_int(exact::binomial(a, b));
}

Scalar Field::binomial(long a, long b) const {
  if (is_rational()) return Scalar::rational(Rat(exact::binomial(a, b)));
  return Scalar::residue(binomial_mod_p(a, b, p_), p_);
}

Scalar Scalar::rational(Rat v) {
  Scalar s(0);
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  return rational(Rat(num, den));
}

Scalar Scalar::residue(long v, long p) {
  if (p < 2) throw std::invalid_argument("Scalar: invalid modulus");
  Scalar s(p);
  s.r_ = ((v % p) + p) % p;
  return s;
}

void Scalar::match(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_)
    throw std::invalid_argument("Scalar: mismatched characteristics " + std::to_string(a.p_) +
                                " vs " + std::to_string(b.p_));
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

const Rat& Scalar::rat() const {
  if (p_ != 0) throw std::logic_error("Scalar: not a rational");
  return q_;
}

long Scalar::res() const {
  if (p_ == 0) throw std::logic_error("Scalar: not a prime-field residue");
  return r_;
}

Scalar Scalar::operator-() const {
  Scalar s(p_);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = (p_ - r_) % p_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar s(p_);
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    long inv = 1, base = r_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) inv = (inv * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    s.r_ = inv;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::match(a, b);
  Scalar s(a.p_);
  if (a.p_ == 0)
    s.q_ = a.q_ + b.q_;
  else
    s.r_ = (a.r_ + b.r_) % a.p_;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::match(a, b);
  Scalar s(a.p_);
  if (a.p_ == 0)
    s.q_ = a.q_ - b.q_;
  else
    s.r_ = (a.r_ - b.r_ + a.p_) % a.p_;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::match(a, b);
  Scalar s(a.p_);
  if (a.p_ == 0)
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = (a.r_ * b.r_) % a.p_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  match(*this, o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  std::ostringstream os;
  os << q_;
  return os.str();
}

}  // namespace schur::exact
