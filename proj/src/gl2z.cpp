#include "markoff/gl2z.hpp"

#include <algorithm>

namespace markoff {

namespace {

BigInt sum_norm(const Mat2& M) {
  return markoff::abs(M.a) + markoff::abs(M.b) + markoff::abs(M.c) + markoff::abs(M.d);
}

void require_unimodular(const Mat2& M) {
  BigInt e = M.det();
  if (e != 1 && e != -1) throw DomainError("matrix " + M.to_string() + " is not in GL(2,Z)");
}

// Right-peel W into a reduced word over X, Y, Z; false when W is not in the image of T₃.
bool peel_ternary(Mat2 W, std::string& word) {
  const Mat2 I;
  const Mat2 Z = pi_Z0();
  std::string rev;
  char last = 0;
  while (!(W == I)) {
    if (W == Z && last != 'Z') {
      rev.push_back('Z');
      break;
    }
    BigInt n = sum_norm(W);
    char pick = 0;
    Mat2 next;
    for (char ch : {'X', 'Y'}) {
      if (ch == last) continue;
      Mat2 W2 = W * letter_matrix(ch);
      if (sum_norm(W2) < n) {
        pick = ch;
        next = W2;
        break;
      }
    }
    if (!pick && last != 'Z') {
      Mat2 W2 = W * Z;
      for (char ch : {'X', 'Y'}) {
        if (sum_norm(W2 * letter_matrix(ch)) < n) {
          pick = 'Z';
          next = W2;
          break;
        }
      }
    }
    if (!pick) return false;
    rev.push_back(pick);
    last = pick;
    W = next;
  }
  word.assign(rev.rbegin(), rev.rend());
  return true;
}

// Ping-pong region of W·z₀ for z₀ = 1/2 + i against the ideal quadrilateral (−1, 0, 1, ∞).
char ab_region(const Mat2& W) {
  BigInt P = W.a + 2 * W.b, Q = 2 * W.a, R = W.c + 2 * W.d, U = 2 * W.c;
  BigInt N = R * R + U * U;
  BigInt X = P * R + Q * U;
  BigInt M2 = P * P + Q * Q;
  if (M2 < X) return 'a';
  if (M2 < -X) return 'b';
  if (X < -N) return 'A';
  if (X > N) return 'B';
  return 0;
}

bool peel_ab(Mat2 W, std::string& word) {
  const Mat2 I;
  word.clear();
  while (true) {
    char g = ab_region(W);
    if (!g) break;
    W = letter_matrix(g).inverse() * W;
    word.push_back(g);
  }
  return W == I;
}

}  // namespace

Mat2 mat_S() { return {0, -1, 1, 0}; }
Mat2 mat_T() { return {1, 1, 0, 1}; }
Mat2 mat_O() { return {-1, 0, 0, 1}; }
Mat2 mat_A0() { return {1, 1, 1, 2}; }
Mat2 mat_B0() { return {1, -1, -1, 2}; }
Mat2 pi_t() { return {1, 1, -1, 0}; }
Mat2 pi_o() { return {0, -1, -1, 0}; }
Mat2 pi_X0() { return {1, 0, -2, -1}; }
Mat2 pi_Y0() { return {-1, -2, 0, 1}; }
Mat2 pi_Z0() { return {1, 0, 0, -1}; }

Mat2 letter_matrix(char letter) {
  switch (letter) {
    case 'X': return pi_X0();
    case 'Y': return pi_Y0();
    case 'Z': return pi_Z0();
    case 'a': return mat_A0();
    case 'A': return mat_A0().inverse();
    case 'b': return mat_B0();
    case 'B': return mat_B0().inverse();
    default: throw ParseError(std::string("unknown generator '") + letter + "'");
  }
}

Mat2 parse_matrix(const std::string& text) {
  std::vector<std::string> parts(1);
  for (char c : text) {
    if (c == ',')
      parts.emplace_back();
    else if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')')
      parts.back().push_back(c);
  }
  if (parts.size() != 4) throw ParseError("matrix literal needs four integers a,b,c,d: " + text);
  return {parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2]), parse_bigint(parts[3])};
}

Mat2 commutator(const Mat2& A, const Mat2& B) { return A * B * A.inverse() * B.inverse(); }

FrickeTrace fricke_commutator_trace(const Mat2& A, const Mat2& B) {
  require_unimodular(A);
  require_unimodular(B);
  FrickeTrace f;
  f.epsA = A.det() == 1 ? 1 : -1;
  f.epsB = B.det() == 1 ? 1 : -1;
  BigInt ta = A.trace(), tb = B.trace(), tab = (A * B).trace();
  int e = f.epsA * f.epsB;
  f.formula = f.epsA * ta * ta + f.epsB * tb * tb + e * tab * tab - e * ta * tb * tab - 2;
  f.direct = commutator(A, B).trace();
  return f;
}

std::vector<Mat2> dihedral_D6() {
  std::vector<Mat2> out;
  for (int h = 0; h < 2; ++h) {
    Mat2 M = h ? pi_o() : Mat2{};
    for (int k = 0; k < 6; ++k) {
      out.push_back(M);
      M = M * pi_t();
    }
  }
  return out;
}

TernaryDecomp ternary_decompose(const Mat2& V) {
  require_unimodular(V);
  auto d6 = dihedral_D6();
  for (int i = 0; i < 12; ++i) {
    std::string word;
    if (peel_ternary(d6[static_cast<std::size_t>(i)].inverse() * V, word)) return {i / 6, i % 6, word};
  }
  throw DomainError("no ternary decomposition found for " + V.to_string());
}

Mat2 recompose(const TernaryDecomp& d) {
  Mat2 M = pow(pi_o(), static_cast<unsigned>(d.h)) * pow(pi_t(), static_cast<unsigned>(d.k));
  for (char ch : d.word) M = M * letter_matrix(ch);
  return M;
}

Mat2 W_k(int k) {
  if (k < 0 || k > 5) throw DomainError("W_k index must be in 0..5");
  Mat2 M;
  for (int i = 0; i < k; ++i) M = M * (i % 2 == 0 ? mat_S() : mat_T());
  return M;
}

ABDecomp ab_decompose(const Mat2& V) {
  require_unimodular(V);
  int h = V.det() == 1 ? 0 : 1;
  Mat2 Oinv = pow(mat_O(), static_cast<unsigned>(h)).inverse();
  for (int sign : {1, -1}) {
    for (int k = 0; k < 6; ++k) {
      Mat2 W = V * W_k(k).inverse() * Oinv;
      if (sign < 0) W = -W;
      std::string word;
      if (peel_ab(W, word)) return {sign, h, k, word};
    }
  }
  throw DomainError("no (A0, B0) decomposition found for " + V.to_string());
}

Mat2 recompose(const ABDecomp& d) {
  Mat2 M;
  for (char ch : d.word) M = M * letter_matrix(ch);
  M = M * pow(mat_O(), static_cast<unsigned>(d.h)) * W_k(d.k);
  return d.sign < 0 ? -M : M;
}

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return 0;
  return x - Rational(floor(x)) - Rational(1, 2);
}

Rational dedekind_sum(const BigInt& delta, const BigInt& gamma) {
  if (gamma == 0) throw DomainError("Dedekind sum needs gamma != 0");
  BigInt g = markoff::abs(gamma);
  BigInt num = 0;
  // ((r/g)) = (2r − g)/(2g) for 0 < r < g
  for (BigInt k = 1; k <= g; ++k) {
    BigInt r1 = (k * delta) % g;
    if (r1 < 0) r1 += g;
    BigInt r2 = k % g;
    if (r1 == 0 || r2 == 0) continue;
    num += (2 * r1 - g) * (2 * r2 - g);
  }
  return make_rational(num, 4 * g * g);
}

}  // namespace markoff
