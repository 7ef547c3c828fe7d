#include "markoff/constructions.hpp"

#include <algorithm>

namespace markoff {

namespace {

// Solutions x ∈ [lo, hi] of A·x ≡ B (mod M), M ≥ 1.
std::vector<BigInt> congruence_solutions(const BigInt& A, const BigInt& B, const BigInt& M,
                                         const BigInt& lo, const BigInt& hi) {
  std::vector<BigInt> out;
  BigInt g = gcd(A, M);
  if (g == 0 || B % g != 0) return out;
  BigInt a = A / g, b = B / g, mod = M / g;
  BigInt x0 = 0;
  if (mod > 1) {
    BigInt ar = ((a % mod) + mod) % mod;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), ar.get_mpz_t(), mod.get_mpz_t()) == 0) return out;
    x0 = ((b % mod + mod) % mod) * inv % mod;
  }
  BigInt start = x0 + mod * floor_div(lo - x0 + mod - 1, mod);
  for (BigInt x = start; x <= hi; x += mod) out.push_back(x);
  return out;
}

bool starts_with(const Sequence& s, const Sequence& prefix) {
  return s.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

void find_structure(Decomposition& d) {
  d.structured = false;
  if (d.X1.empty()) return;
  Sequence L = left_extend(d.X1);
  Sequence x2s = mirror(d.X2);
  if (L.size() <= x2s.size() || !starts_with(L, x2s)) return;
  d.c = L[x2s.size()];
  d.T.assign(L.begin() + static_cast<std::ptrdiff_t>(x2s.size()) + 1, L.end());
  d.structured = true;
}

std::string swap_letters(const std::string& w, char p, char q) {
  std::string out = w;
  for (char& ch : out) {
    if (ch == p)
      ch = q;
    else if (ch == q)
      ch = p;
  }
  return out;
}

}  // namespace

Sequence Decomposition::star() const { return concat({X1, Sequence{b}, X2}); }

Sequence Decomposition::sequence() const { return mirror(star()); }

Equation Decomposition::equation(const BigInt& a) const {
  Equation eq;
  eq.eps1 = eps1;
  eq.eps2 = eps2;
  eq.a = a;
  eq.dK = dK;
  eq.u = u + (a - b) * m1 * m2;
  return eq;
}

Decomposition make_decomposition(const Sequence& X1, const BigInt& b, const Sequence& X2) {
  validate(X1);
  validate(X2);
  if (b < 1) throw DomainError("middle term b must be positive");
  Decomposition d;
  d.X1 = X1;
  d.X2 = X2;
  d.b = b;
  SeqMatrix S = matrix_of(d.sequence());
  d.m = S.m;
  d.K1 = S.K1;
  d.K2 = S.K2;
  d.l = S.l;
  SeqMatrix A = matrix_of(X1);
  d.m1 = A.M.a;
  d.k12 = d.m1 - A.M.b;
  d.k1 = A.M.c;
  d.l1 = d.k1 - A.M.d;
  d.eps1 = A.eps;
  SeqMatrix B = matrix_of(X2);
  d.m2 = B.M.a;
  d.k2 = d.m2 - B.M.b;
  d.k21 = B.M.c;
  d.l2 = d.k21 - B.M.d;
  d.eps2 = B.eps;
  d.t1 = d.k1 + d.k12 - d.m1;
  d.t2 = d.k2 + d.k21 - d.m2;
  d.u = d.m2 * d.t1 - d.m1 * d.t2;
  d.dK = d.eps2 * (d.K1 - d.K2);
  find_structure(d);
  return d;
}

Decomposition from_parts(const Sequence& X2, const BigInt& c, const Sequence& T, const BigInt& b) {
  if (c < 1) throw DomainError("term c must be positive");
  Sequence X1 = left_extend(concat({mirror(X2), Sequence{c}, T}));
  Decomposition d = make_decomposition(X1, b, X2);
  d.c = c;
  d.T = T;
  d.structured = true;
  return d;
}

Decomposition decompose(const Sequence& S) {
  validate(S);
  Sequence st = mirror(S);
  std::size_t n = st.size();
  for (std::size_t j = n; j-- > 0;) {
    if (j + 1 > n) continue;
    Sequence X1(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(n - j - 1));
    Sequence X2(st.begin() + static_cast<std::ptrdiff_t>(n - j), st.end());
    Decomposition d = make_decomposition(X1, st[n - j - 1], X2);
    if (d.structured) return d;
  }
  throw DomainError("sequence " + format_sequence(S) + " has no decomposition (X1, b, X2) with ◁X1 = (X2*, c, T)");
}

std::vector<std::string> identity_failures(const Decomposition& d) {
  std::vector<std::string> bad;
  if (d.m != (d.b + 1) * d.m1 * d.m2 + d.m1 * d.k21 - d.m2 * d.k12) bad.push_back("m = (b+1)m1m2 + m1k21 - m2k12");
  if (d.eps1 * d.m2 != d.K1 * d.m1 - d.k1 * d.m) bad.push_back("eps1 m2 = K1 m1 - k1 m");
  if (d.eps2 * d.m1 != d.k2 * d.m - d.K2 * d.m2) bad.push_back("eps2 m1 = k2 m - K2 m2");
  if (d.m1 * d.k2 - d.m2 * d.k1 != (d.b + 1) * d.m1 * d.m2 - d.m - d.u)
    bad.push_back("m1k2 - m2k1 = (b+1)m1m2 - m - u");
  if (d.t1 != d.k1 + d.k12 - d.m1) bad.push_back("t1 = k1 + k12 - m1");
  if (d.t2 != d.k2 + d.k21 - d.m2) bad.push_back("t2 = k2 + k21 - m2");
  if (d.dK != d.eps2 * (d.K1 - d.K2)) bad.push_back("dK = eps2 (K1 - K2)");
  if (!is_solution(d.equation(d.b), d.triple())) bad.push_back("triple solves M(b, dK, u)");
  if (matrix_of(d.X1).M.det() != d.eps1) bad.push_back("det M_X1 = eps1");
  if (matrix_of(d.X2).M.det() != d.eps2) bad.push_back("det M_X2 = eps2");
  if (d.structured && !d.X1.empty()) {
    if (left_extend(d.X1) != concat({mirror(d.X2), Sequence{d.c}, d.T})) bad.push_back("◁X1 = (X2*, c, T)");
  }
  return bad;
}

std::vector<Decomposition> reconstruct_all(const BigInt& m, const BigInt& m1, const BigInt& m2, int eps1,
                                           int eps2) {
  if (m < 1 || m1 < 1 || m2 < 1) throw DomainError("reconstruction needs a positive triple");
  std::vector<Decomposition> out;
  // ε₁m₂ = K₁m₁ − k₁m  and  ε₂m₁ = k₂m − K₂m₂
  auto k1s = congruence_solutions(m, -eps1 * m2, m1, 0, m1);
  auto k2s = congruence_solutions(m, eps2 * m1, m2, 0, m2);
  for (const auto& k1 : k1s) {
    Sequence X1;
    if (!cf_with_determinant(m1, k1, eps1, X1)) continue;
    SeqMatrix A = matrix_of(X1);
    if (A.M.a != m1 || A.M.c != k1) continue;
    for (const auto& k2 : k2s) {
      Sequence X2s;
      if (!cf_with_determinant(m2, m2 - k2, eps2, X2s)) continue;
      Sequence X2 = mirror(X2s);
      SeqMatrix B = matrix_of(X2);
      if (B.M.a != m2 || B.M.b != m2 - k2) continue;
      BigInt k12 = m1 - A.M.b;
      BigInt num = m - m1 * B.M.c + m2 * k12;
      if (num % (m1 * m2) != 0) continue;
      BigInt b = num / (m1 * m2) - 1;
      if (b < 1) continue;
      Decomposition d = make_decomposition(X1, b, X2);
      if (d.m != m || d.m1 != m1 || d.m2 != m2) continue;
      out.push_back(d);
    }
  }
  return out;
}

Reconstruction reconstruct(const BigInt& m, const BigInt& m1, const BigInt& m2, int eps1, int eps2,
                           const BigInt& a) {
  auto all = reconstruct_all(m, m1, m2, eps1, eps2);
  if (all.empty())
    throw DomainError("no sequence reconstruction for " + Triple{m, m1, m2}.to_string());
  auto it = std::find_if(all.begin(), all.end(), [](const Decomposition& d) { return d.structured; });
  const Decomposition& d = it != all.end() ? *it : all.front();
  return {d, d.equation(a)};
}

const char* construction_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::G: return "G";
    case ConstructionKind::DD: return "DD";
    case ConstructionKind::GD: return "GD";
  }
  return "?";
}

ConstructionKind construction_from_name(const std::string& name) {
  if (name == "G") return ConstructionKind::G;
  if (name == "DD") return ConstructionKind::DD;
  if (name == "GD" || name == "DG") return ConstructionKind::GD;
  throw ParseError("unknown construction '" + name + "' (expected G, DD or GD)");
}

ConstructionResult construct(ConstructionKind kind, const Decomposition& d) {
  if (!d.structured) throw DomainError("construction needs a decomposition with ◁X1 = (X2*, c, T)");
  ConstructionResult res;
  res.source = from_parts(d.X2, d.c, d.T, d.c);
  res.source_equation = res.source.equation(d.c);
  const Sequence& X2 = d.X2;
  const Sequence& T = d.T;
  const BigInt& c = d.c;
  Sequence x2s = mirror(X2);
  Sequence nX2, nT;
  switch (kind) {
    case ConstructionKind::G:
      nX2 = left_extend(concat({mirror(T), Sequence{c}, X2}));
      nT = T;
      break;
    case ConstructionKind::DD:
      nX2 = x2s;
      nT = right_extend(left_extend(concat({x2s, Sequence{c}, T, Sequence{c}, X2})));
      break;
    case ConstructionKind::GD:
      nX2 = left_extend(concat({x2s, Sequence{c}, T}));
      nT = concat({x2s, Sequence{c}, mirror(T), Sequence{c}, X2});
      break;
  }
  res.result = from_parts(nX2, c, nT, c);
  const Equation& e = res.source_equation;
  Equation target = e;
  switch (kind) {
    case ConstructionKind::G:
      target = {e.eps2, e.eps1, c, e.dK, e.eps1 * e.eps2 * e.u};
      break;
    case ConstructionKind::DD:
      target = {e.eps1, e.eps2, c, e.eps2 * e.dK, e.eps2 * e.u};
      break;
    case ConstructionKind::GD:
      target = {e.eps2, e.eps1, c, e.eps2 * e.dK, e.eps1 * e.u};
      break;
  }
  res.target_equation = target;
  res.solves = is_solution(target, res.result.triple());
  res.grows = height(res.result.triple()) > height(res.source.triple());
  if (!res.solves || !res.grows)
    throw DomainError(std::string("construction ") + construction_name(kind) + " is obstructed at " +
                      format_sequence(res.source.star()) + ": the bouquet is not a tree here");
  return res;
}

Triple apply_word(const Equation& eq, const Triple& t, const std::string& word) {
  Triple cur = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_involution(eq, cur, involution_from_letter(*it));
  return cur;
}

bool is_reduced_word(const std::string& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'X' && word[i] != 'Y' && word[i] != 'Z') return false;
    if (i > 0 && word[i] == word[i - 1]) return false;
  }
  return true;
}

std::string cohn_G(const std::string& w) {
  if (w.size() < 2 || w[0] != 'X') throw DomainError("Cohn word must start with X");
  return "XY" + swap_letters(w.substr(1), 'Y', 'Z');
}

std::string cohn_D(const std::string& w) {
  if (w.empty() || w[0] != 'X') throw DomainError("Cohn word must start with X");
  return "X" + swap_letters(w, 'X', 'Y');
}

std::vector<std::string> cohn_words(int n) {
  if (n < 2) throw DomainError("Cohn words have length at least 2");
  std::vector<std::string> level{"XY"};
  for (int len = 2; len < n; ++len) {
    std::vector<std::string> next;
    next.reserve(level.size() * 2);
    for (const auto& w : level) {
      next.push_back(cohn_G(w));
      next.push_back(cohn_D(w));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<std::string> cassels_words(int n) {
  if (n < 1) throw DomainError("Cassels words have length at least 1");
  std::vector<std::string> level{"X"};
  for (int len = 1; len < n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char ch : {'X', 'Y', 'Z'})
        if (ch != w.back()) next.push_back(w + ch);
    level = std::move(next);
  }
  return level;
}

bool is_cohn_triple(const Triple& t) { return t.m > t.m1 && t.m1 > t.m2; }

}  // namespace markoff
