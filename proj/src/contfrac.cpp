#include "markoff/contfrac.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace markoff {

void validate(const Sequence& s) {
  for (const auto& a : s)
    if (a < 1) throw DomainError("sequence terms must be strictly positive");
}

Sequence parse_sequence(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw ParseError("unbalanced sequence literal: " + text);
    t = t.substr(1, t.size() - 2);
  }
  Sequence s;
  if (t.empty()) return s;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || t[i] == ',') {
      s.push_back(parse_bigint(t.substr(start, i - start)));
      start = i + 1;
    }
  }
  for (const auto& a : s)
    if (a < 1) throw ParseError("sequence terms must be strictly positive: " + text);
  return s;
}

std::string format_sequence(const Sequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].get_str();
  }
  return out + ")";
}

Sequence concat(const Sequence& a, const Sequence& b) {
  Sequence r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Sequence concat(std::initializer_list<Sequence> parts) {
  Sequence r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

SeqMatrix matrix_of(const Sequence& s) {
  Mat2 M;
  for (const auto& a : s) M = M * Mat2{a, 1, 1, 0};
  SeqMatrix out;
  out.M = M;
  out.m = M.a;
  out.K1 = M.b;
  out.K2 = M.a - M.c;
  out.l = M.b - M.d;
  out.eps = (s.size() % 2 == 0) ? 1 : -1;
  return out;
}

Sequence mirror(const Sequence& s) { return Sequence(s.rbegin(), s.rend()); }

Sequence left_extend(const Sequence& s) {
  if (s.empty()) throw DomainError("left extension of the empty sequence");
  Sequence r;
  if (s[0] != 1) {
    r.push_back(1);
    r.push_back(s[0] - 1);
    r.insert(r.end(), s.begin() + 1, s.end());
  } else if (s.size() > 1) {
    r.push_back(s[1] + 1);
    r.insert(r.end(), s.begin() + 2, s.end());
  }
  return r;
}

Sequence right_extend(const Sequence& s) { return mirror(left_extend(mirror(s))); }

Rational eval(const Sequence& s) {
  if (s.empty()) throw DomainError("value of the empty sequence");
  SeqMatrix sm = matrix_of(s);
  return make_rational(sm.M.a, sm.M.c);
}

Sequence cf_expand(const BigInt& p0, const BigInt& q0) {
  if (p0 < 0 || q0 < 0) throw DomainError("continued fraction of a negative ratio");
  Sequence out;
  BigInt p = p0, q = q0;
  while (q != 0) {
    BigInt a = floor_div(p, q);
    out.push_back(a);
    BigInt r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

bool cf_with_determinant(const BigInt& p, const BigInt& q, int eps, Sequence& out) {
  if (q == 0) {
    out.clear();
    return eps == 1 && p == 1;
  }
  if (p < q || q < 0) return false;
  Sequence s = cf_expand(p, q);
  auto det_of = [](const Sequence& x) { return (x.size() % 2 == 0) ? 1 : -1; };
  if (det_of(s) != eps) {
    if (s.back() > 1) {
      s.back() -= 1;
      s.push_back(1);
    } else if (s.size() >= 2) {
      s.pop_back();
      s.back() += 1;
    } else {
      return false;
    }
  }
  out = s;
  return true;
}

QuadraticSurd periodic_surd(const Sequence& period) {
  if (period.empty()) throw DomainError("empty period");
  validate(period);
  Mat2 M = matrix_of(period).M;
  BigInt disc = M.trace() * M.trace() - 4 * M.det();
  return QuadraticSurd(M.d - M.a, 1, 2 * M.b, disc);
}

QuadraticSurd periodic_surd_conjugate(const Sequence& period) {
  if (period.empty()) throw DomainError("empty period");
  validate(period);
  Mat2 M = matrix_of(period).M;
  BigInt disc = M.trace() * M.trace() - 4 * M.det();
  return QuadraticSurd(M.d - M.a, -1, 2 * M.b, disc);
}

SurdExpansion expand(const QuadraticSurd& x) {
  SurdExpansion out;
  if (x.is_rational()) {
    BigInt num = x.p(), den = x.r();
    BigInt a0 = floor_div(num, den);
    out.preperiod.push_back(a0);
    Sequence rest = cf_expand(den, num - a0 * den);
    out.preperiod.insert(out.preperiod.end(), rest.begin(), rest.end());
    return out;
  }
  // x = (P + sqrt(D)) / Q with Q | D - P^2
  BigInt D = x.q() * x.q() * x.d() * x.r() * x.r();
  BigInt P = x.p() * x.r();
  BigInt Q = x.r() * x.r();
  if (x.q() < 0) {
    P = -P;
    Q = -Q;
  }
  BigInt root = isqrt(D);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  Sequence terms;
  while (true) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
      return out;
    }
    seen.emplace(key, terms.size());
    BigInt a = (Q > 0) ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

std::vector<BigInt> to_reduced_cf(const Sequence& s, const BigInt& tail) {
  if (s.size() < 2) throw DomainError("reduced conversion needs at least two terms");
  validate(s);
  if (tail < 1) throw DomainError("tail must be positive");
  Sequence t = s;
  t.push_back(tail);
  std::vector<BigInt> out;
  BigInt carry = 0;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t left = t.size() - i;
    if (left == 1) {
      out.push_back(t[i] + carry);
      break;
    }
    out.push_back(t[i] + carry + 1);
    for (BigInt k = 1; k < t[i + 1]; ++k) out.push_back(2);
    if (left == 2) break;
    carry = 1;
    i += 2;
  }
  return out;
}

Rational eval_reduced(const std::vector<BigInt>& b) {
  if (b.empty()) throw DomainError("empty reduced expansion");
  Rational x = b.back();
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    if (x == 0) throw DomainError("singular reduced expansion");
    x = Rational(b[i]) - 1 / x;
  }
  return x;
}

Rational eval_with_tail(const Sequence& s, const BigInt& tail) {
  Sequence t = s;
  t.push_back(tail);
  return eval(t);
}

}  // namespace markoff
