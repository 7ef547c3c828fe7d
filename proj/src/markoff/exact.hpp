#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace markoff {

using BigInt = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
Rational make_rational(const BigInt& num, const BigInt& den);
BigInt floor(const Rational& x);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
BigInt parse_bigint(const std::string& text);

// Multiprecision real with precision carried by each value.
class Real {
 public:
  static constexpr long kDefaultDigits = 64;

  explicit Real(long bits = bits_for_digits(kDefaultDigits));
  Real(long value, long bits);
  Real(const BigInt& value, long bits);
  Real(const Rational& value, long bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static long bits_for_digits(long digits);
  static Real parse(const std::string& text, long bits);

  long precision() const;
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  int sign() const;
  bool is_zero() const;
  double to_double() const;
  std::string to_string(long digits) const;

 private:
  void promote(const Real& o);
  mpfr_t value_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow_int(const Real& x, long e);
Real max(const Real& a, const Real& b);
// |a - b| <= 10^{-digits} * max(1, |a|, |b|)
bool approx_equal(const Real& a, const Real& b, long digits);

// Exact element (p + q*sqrt(d)) / r of Q(sqrt(d)).
class QuadraticSurd {
 public:
  QuadraticSurd();
  QuadraticSurd(long value);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const BigInt& value);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Rational& value);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(BigInt p, BigInt q, BigInt r, BigInt d);

  static QuadraticSurd sqrt_of(const Rational& x);
  static QuadraticSurd parse(const std::string& text);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  Rational rational_part() const;
  Rational irrational_coefficient() const;

  QuadraticSurd conjugate() const;
  QuadraticSurd reciprocal() const;
  // Field norm (x * conjugate(x)) as a rational.
  Rational norm() const;

  QuadraticSurd operator-() const;
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);
  QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
  QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
  QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }
  QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this = *this / o; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b);

  int sign() const;
  BigInt floor() const;
  Real to_real(long bits) const;
  std::string to_string(long digits) const;
  // "(p+q√d)/r" with explicit components.
  std::string exact_string() const;

 private:
  void normalize();
  BigInt p_, q_, r_, d_;
};

std::strong_ordering surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y);
BigInt surd_floor(const QuadraticSurd& x);
// Squarefree part s and factor f with n = f^2 * s; exact for the square
// factors found by trial division plus a perfect-square test on the cofactor.
void split_square_factor(const BigInt& n, BigInt& f, BigInt& s);

}  // namespace markoff
