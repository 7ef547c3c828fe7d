#pragma once

#include <string>
#include <vector>

#include "markoff/exact.hpp"
#include "markoff/mat2.hpp"

namespace markoff {

Mat2 mat_S();
Mat2 mat_T();
Mat2 mat_O();
Mat2 mat_A0();
Mat2 mat_B0();
Mat2 pi_t();
Mat2 pi_o();
Mat2 pi_X0();
Mat2 pi_Y0();
Mat2 pi_Z0();
Mat2 letter_matrix(char letter);  // X, Y, Z, or a, A, b, B for A₀^{±1}, B₀^{±1}

// Row-major "a,b,c,d"
Mat2 parse_matrix(const std::string& text);

struct FrickeTrace {
  BigInt formula;
  BigInt direct;
  int epsA = 1, epsB = 1;
};
FrickeTrace fricke_commutator_trace(const Mat2& A, const Mat2& B);
Mat2 commutator(const Mat2& A, const Mat2& B);

// π′(o)^h π′(t)^k, h ∈ {0,1}, k ∈ {0..5}
std::vector<Mat2> dihedral_D6();

struct TernaryDecomp {
  int h = 0;
  int k = 0;
  std::string word;  // reduced over X, Y, Z
};
TernaryDecomp ternary_decompose(const Mat2& V);
Mat2 recompose(const TernaryDecomp& d);

// V = sign · W(A₀, B₀) · O^h · W_k(S, T)
struct ABDecomp {
  int sign = 1;
  int h = 0;
  int k = 0;
  std::string word;  // over a, A, b, B
};
ABDecomp ab_decompose(const Mat2& V);
Mat2 recompose(const ABDecomp& d);
// W_k ∈ {1, S, ST, STS, STST, STSTS}
Mat2 W_k(int k);

Rational sawtooth(const Rational& x);
Rational dedekind_sum(const BigInt& delta, const BigInt& gamma);

}  // namespace markoff
