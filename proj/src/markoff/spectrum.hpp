#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markoff/constructions.hpp"
#include "markoff/contfrac.hpp"
#include "markoff/equations.hpp"

namespace markoff {

// m·F_θ(x, y) = A x² + B xy + C y²
struct MarkoffForm {
  BigInt A, B, C;
  BigInt m, K1, K2, l;
  int eps1 = 1, eps2 = 1;
  BigInt a;

  BigInt discriminant() const { return B * B - 4 * A * C; }
  BigInt eval(const BigInt& x, const BigInt& y) const { return A * x * x + B * x * y + C * y * y; }
  // ((a+1)m + K₁ − K₂)² − 4ε₁ε₂
  BigInt expected_discriminant() const;
};

MarkoffForm form_of(const Decomposition& d, const BigInt& a);
// Form attached to a solution through K₁ ≡ ε₁m₂/m₁ (mod m) and K₂ = K₁ − ε₂∂K.
MarkoffForm form_of_triple(const Equation& eq, const Triple& t);

// φ_θ(z, y) = z² + B zy − ε y²
struct PhiForm {
  BigInt B;
  int eps = 1;
  BigInt eval(const BigInt& z, const BigInt& y) const { return z * z + B * z * y - eps * y * y; }
};
PhiForm phi_of(const Decomposition& d, const BigInt& a);
bool phi_multiplicativity_check(const PhiForm& f, const BigInt& z1, const BigInt& y1, const BigInt& z2,
                                const BigInt& y2);
// Indices (1-based) of the displayed invariances that fail at (z, y).
std::vector<int> phi_invariance_failures(const PhiForm& f, const BigInt& z, const BigInt& y);

struct Constant {
  QuadraticSurd value;
  Sequence period;
  std::vector<std::size_t> attained_at;  // rotations reaching the maximum
};

// 1 / max over rotations of b_j + [0; b_{j+1}, ...] + [0; b_{j−1}, ...]
Constant markoff_constant(const Sequence& period);
// Constant of the real root (−B + √Δ)/(2A) of a form with non-square discriminant.
Constant constant_of_form(const BigInt& A, const BigInt& B, const BigInt& C);

struct Extrema {
  BigInt positive_min;  // smallest positive value of m·F over the scanned convergents
  BigInt negative_max;  // largest negative value
  bool has_positive = false;
  bool has_negative = false;
};
Extrema form_extrema(const MarkoffForm& f, int periods);

// (F_{2t+2}, F_{2t}) pair and the constant (3pq − 1)/√(9(p² + q²)² − 4)
struct FibonacciMember {
  BigInt p, q;
  Triple triple;  // (p² + q², p, q), a solution of M^{++}(2,0,−2)
  QuadraticSurd value;
};
FibonacciMember fibonacci_family_constant(const BigInt& t);

struct Segment {
  QuadraticSurd lo, hi;
};
// [1/√(a² + 4a), 1/√(a² + 4)]
Segment segment_Ua(const BigInt& a);
QuadraticSurd inverse_sqrt(const BigInt& n);
// F with F⁻¹ = 4 + (253589820 + 283748√462)/491993569
QuadraticSurd freiman_constant();
QuadraticSurd perron_gap_endpoint();

struct SpectrumRecord {
  Equation equation;
  Triple triple;
  std::optional<Constant> constant;
  std::string route;  // "sequence" or "form"
  std::string error;
};
std::vector<SpectrumRecord> spectrum_scan(const Equation& eq, const BigInt& bound, unsigned threads = 1);

}  // namespace markoff
