#include "markoff/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

namespace markoff {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt parse_bigint(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty integer");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size()) throw ParseError("malformed integer: " + text);
  for (std::size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("malformed integer: " + text);
  if (t[0] == '+') t.erase(0, 1);
  return BigInt(t, 10);
}

// ---------------------------------------------------------------- Real

long Real::bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

Real::Real(long bits) {
  mpfr_init2(value_, std::max<long>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const BigInt& value, long bits) : Real(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, long bits) : Real(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other) {}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(const std::string& text, long bits) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("malformed real: " + text);
  return r;
}

long Real::precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

void Real::promote(const Real& o) {
  if (mpfr_get_prec(o.value_) > mpfr_get_prec(value_))
    mpfr_prec_round(value_, mpfr_get_prec(o.value_), MPFR_RNDN);
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  promote(o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  promote(o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  promote(o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (mpfr_zero_p(o.value_)) throw DomainError("real division by zero");
  promote(o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

int Real::sign() const { return mpfr_sgn(value_); }

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string(long digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of negative real");
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) { return x.sign() < 0 ? -x : x; }

Real pow_int(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

bool approx_equal(const Real& a, const Real& b, long digits) {
  long bits = std::max(a.precision(), b.precision());
  Real scale(1L, bits);
  scale = max(scale, max(abs(a), abs(b)));
  Real tol(bits);
  mpfr_ui_pow_ui(tol.get(), 10UL, static_cast<unsigned long>(digits), MPFR_RNDN);
  return abs(a - b) * tol <= scale;
}

// ------------------------------------------------------- QuadraticSurd

namespace {

int sign_int(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

// Sign of A + B*sqrt(d), d >= 0.
int sign_of(const BigInt& A, const BigInt& B, const BigInt& d) {
  int sa = sign_int(A);
  int sb = (d == 0) ? 0 : sign_int(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  BigInt lhs = A * A;
  BigInt rhs = B * B * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// Sign of A + B*sqrt(d1) + C*sqrt(d2).
int sign_of(const BigInt& A, const BigInt& B, const BigInt& d1, const BigInt& C, const BigInt& d2) {
  int s1 = sign_of(A, B, d1);
  int s2 = (d2 == 0) ? 0 : sign_int(C);
  if (s2 == 0) return s1;
  if (s1 == 0 || s1 == s2) return s2;
  // Compare (A + B sqrt d1)^2 with C^2 d2.
  int c = sign_of(A * A + B * B * d1 - C * C * d2, 2 * A * B, d1);
  if (c > 0) return s1;
  if (c < 0) return s2;
  return 0;
}

constexpr unsigned long kTrialLimit = 1UL << 17;

struct Parts {
  BigInt p, q, r, d;
};

// Rewrite y over sqrt(dx) when dx*dy is a perfect square.
bool align(const BigInt& dx, Parts& y) {
  if (y.d == 0 || y.d == dx) return true;
  BigInt prod = dx * y.d;
  if (!is_square(prod)) return false;
  BigInt g = isqrt(prod);
  y.p *= dx;
  y.q *= g;
  y.r *= dx;
  y.d = dx;
  return true;
}

}  // namespace

void split_square_factor(const BigInt& n, BigInt& f, BigInt& s) {
  if (n < 0) throw DomainError("negative radicand");
  f = 1;
  s = n;
  if (s == 0) return;
  auto strip = [&](unsigned long p) {
    BigInt pp = BigInt(p) * p;
    while (mpz_divisible_p(s.get_mpz_t(), pp.get_mpz_t())) {
      s /= pp;
      f *= p;
    }
  };
  strip(2);
  for (unsigned long p = 3; p < kTrialLimit; p += 2) {
    BigInt pp = BigInt(p) * p;
    if (pp > s) break;
    strip(p);
  }
  if (s > 1 && is_square(s)) {
    f *= isqrt(s);
    s = 1;
  }
}

QuadraticSurd::QuadraticSurd() : p_(0), q_(0), r_(1), d_(0) {}

QuadraticSurd::QuadraticSurd(long value) : p_(value), q_(0), r_(1), d_(0) {}

QuadraticSurd::QuadraticSurd(const BigInt& value) : p_(value), q_(0), r_(1), d_(0) {}

QuadraticSurd::QuadraticSurd(const Rational& value)
    : p_(value.get_num()), q_(0), r_(value.get_den()), d_(0) {}

QuadraticSurd::QuadraticSurd(BigInt p, BigInt q, BigInt r, BigInt d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  if (d_ < 0) throw DomainError("negative radicand");
  if (d_ != 0 && q_ != 0) {
    BigInt f, s;
    split_square_factor(d_, f, s);
    q_ *= f;
    d_ = s;
  }
  normalize();
}

void QuadraticSurd::normalize() {
  if (r_ == 0) throw DomainError("zero denominator in surd");
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticSurd QuadraticSurd::sqrt_of(const Rational& x) {
  if (x < 0) throw DomainError("square root of negative rational");
  // sqrt(a/b) = sqrt(a*b)/b
  return QuadraticSurd(0, 1, x.get_den(), x.get_num() * x.get_den());
}

Rational QuadraticSurd::rational_part() const { return make_rational(p_, r_); }

Rational QuadraticSurd::irrational_coefficient() const { return make_rational(q_, r_); }

QuadraticSurd QuadraticSurd::conjugate() const {
  QuadraticSurd c = *this;
  c.q_ = -c.q_;
  return c;
}

Rational QuadraticSurd::norm() const {
  return make_rational(p_ * p_ - q_ * q_ * d_, r_ * r_);
}

QuadraticSurd QuadraticSurd::reciprocal() const {
  BigInt n = p_ * p_ - q_ * q_ * d_;
  if (n == 0) throw DomainError("reciprocal of zero surd");
  QuadraticSurd out;
  out.p_ = r_ * p_;
  out.q_ = -r_ * q_;
  out.r_ = n;
  out.d_ = d_;
  out.normalize();
  return out;
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd c = *this;
  c.p_ = -c.p_;
  c.q_ = -c.q_;
  return c;
}

namespace {

std::pair<Parts, Parts> common_field(const QuadraticSurd& a, const QuadraticSurd& b) {
  Parts x{a.p(), a.q(), a.r(), a.d()};
  Parts y{b.p(), b.q(), b.r(), b.d()};
  if (x.d == 0) {
    x.d = y.d;
  } else if (!align(x.d, y)) {
    throw DomainError("surds lie in different quadratic fields");
  }
  return {x, y};
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  auto [x, y] = common_field(a, b);
  QuadraticSurd out;
  out.p_ = x.p * y.r + y.p * x.r;
  out.q_ = x.q * y.r + y.q * x.r;
  out.r_ = x.r * y.r;
  out.d_ = x.d;
  out.normalize();
  return out;
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  auto [x, y] = common_field(a, b);
  QuadraticSurd out;
  out.p_ = x.p * y.p + x.q * y.q * x.d;
  out.q_ = x.p * y.q + x.q * y.p;
  out.r_ = x.r * y.r;
  out.d_ = x.d;
  out.normalize();
  return out;
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) { return a * b.reciprocal(); }

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
  return surd_cmp(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  return surd_cmp(a, b);
}

int QuadraticSurd::sign() const { return sign_of(p_, q_, d_); }

BigInt QuadraticSurd::floor() const {
  // floor((p + w)/r) = floor((p + floor(w))/r) for r > 0 and integer p.
  BigInt w = 0;
  if (d_ != 0) {
    BigInt sq = q_ * q_ * d_;
    BigInt root = isqrt(sq);
    if (q_ >= 0) {
      w = root;
    } else {
      w = (root * root == sq) ? BigInt(-root) : BigInt(-root - 1);
    }
  }
  return floor_div(p_ + w, r_);
}

Real QuadraticSurd::to_real(long bits) const {
  Real x(p_, bits);
  if (d_ != 0) x += Real(q_, bits) * sqrt(Real(d_, bits));
  return x / Real(r_, bits);
}

std::string QuadraticSurd::to_string(long digits) const {
  long extra = static_cast<long>(mpz_sizeinbase(p_.get_mpz_t(), 2) + mpz_sizeinbase(q_.get_mpz_t(), 2) +
                                 mpz_sizeinbase(d_.get_mpz_t(), 2));
  if (d_ == 0 && r_ == 1) return p_.get_str();
  return to_real(Real::bits_for_digits(digits) + extra).to_string(digits);
}

std::string QuadraticSurd::exact_string() const {
  std::string s = "(" + p_.get_str();
  if (d_ != 0) {
    s += (q_ < 0 ? "-" : "+");
    BigInt aq = markoff::abs(q_);
    if (aq != 1) s += aq.get_str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
  }
  s += ")";
  if (r_ != 1) s += "/" + r_.get_str();
  return s;
}

std::strong_ordering surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y) {
  // sign of x - y = (p1 r2 - p2 r1 + q1 r2 sqrt(d1) - q2 r1 sqrt(d2)) / (r1 r2)
  BigInt A = x.p() * y.r() - y.p() * x.r();
  int s = sign_of(A, x.q() * y.r(), x.d(), -y.q() * x.r(), y.d());
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt surd_floor(const QuadraticSurd& x) { return x.floor(); }

namespace {

std::string strip_spaces(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  return t;
}

Rational parse_rational_token(const std::string& t) {
  if (t.empty()) throw ParseError("empty number");
  auto slash = t.find('/');
  if (slash != std::string::npos)
    return make_rational(parse_bigint(t.substr(0, slash)), parse_bigint(t.substr(slash + 1)));
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot);
    std::string fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) fp = "0";
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    BigInt num = markoff::abs(parse_bigint(ip)) * den + parse_bigint(fp);
    if (neg) num = -num;
    return make_rational(num, den);
  }
  return Rational(parse_bigint(t));
}

}  // namespace

QuadraticSurd QuadraticSurd::parse(const std::string& text) {
  std::string t = strip_spaces(text);
  if (t.empty()) throw ParseError("empty surd");
  // Four comma-separated integers p,q,r,d.
  if (std::count(t.begin(), t.end(), ',') == 3) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      if (i == t.size() || t[i] == ',') {
        parts.push_back(t.substr(start, i - start));
        start = i + 1;
      }
    }
    return QuadraticSurd(parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2]),
                         parse_bigint(parts[3]));
  }
  Rational den = 1;
  std::string body = t;
  if (t[0] == '(') {
    auto close = t.rfind(')');
    if (close == std::string::npos) throw ParseError("unbalanced parentheses: " + text);
    body = t.substr(1, close - 1);
    std::string rest = t.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '/') throw ParseError("malformed surd: " + text);
      den = parse_rational_token(rest.substr(1));
    }
  }
  auto pos = body.find("sqrt");
  if (pos == std::string::npos) return QuadraticSurd(parse_rational_token(body) / den);
  // Split rational part from the radical term at the last sign before "sqrt".
  std::size_t split = std::string::npos;
  for (std::size_t i = pos; i-- > 0;) {
    if ((body[i] == '+' || body[i] == '-') && i > 0 && body[i - 1] != '(' && body[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational rational_part = 0;
  std::string term = body;
  if (split != std::string::npos) {
    rational_part = parse_rational_token(body.substr(0, split));
    term = body.substr(split);
  }
  auto sq = term.find("sqrt");
  std::string coef = term.substr(0, sq);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rational c = 1;
  if (coef == "-") c = -1;
  else if (!coef.empty() && coef != "+") c = parse_rational_token(coef);
  std::string rad = term.substr(sq + 4);
  Rational tail_den = 1;
  std::string radicand;
  if (!rad.empty() && rad[0] == '(') {
    auto close = rad.find(')');
    if (close == std::string::npos) throw ParseError("unbalanced sqrt: " + text);
    radicand = rad.substr(1, close - 1);
    std::string after = rad.substr(close + 1);
    if (!after.empty()) {
      if (after[0] != '/') throw ParseError("malformed surd: " + text);
      tail_den = parse_rational_token(after.substr(1));
    }
  } else {
    auto slash = rad.find('/');
    radicand = rad.substr(0, slash);
    if (slash != std::string::npos) tail_den = parse_rational_token(rad.substr(slash + 1));
  }
  QuadraticSurd root = sqrt_of(parse_rational_token(radicand));
  QuadraticSurd value = QuadraticSurd(rational_part) + QuadraticSurd(Rational(c / tail_den)) * root;
  return value / QuadraticSurd(den);
}

}  // namespace markoff
