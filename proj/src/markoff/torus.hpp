#pragma once

#include <string>
#include <utility>
#include <vector>

#include "markoff/exact.hpp"
#include "markoff/mat2.hpp"

namespace markoff {

enum class TorusKind { parabolic, hyperbolic, invalid };
std::string torus_kind_name(TorusKind k);

// (x, y, z) = (tr B⁻¹, tr A, tr B⁻¹A⁻¹), so tr B = x, tr A = y, tr AB = z.
template <class T>
struct TraceTripleT {
  T x, y, z;
};
using ExactTraceTriple = TraceTripleT<QuadraticSurd>;
using RealTraceTriple = TraceTripleT<Real>;

ExactTraceTriple parse_exact_triple(const std::string& text);
RealTraceTriple to_real(const ExactTraceTriple& t, long bits);

// σ = x² + y² + z² − xyz
QuadraticSurd sigma(const ExactTraceTriple& t);
Real sigma(const RealTraceTriple& t);
TorusKind classify(const ExactTraceTriple& t);
// Parabolic when |σ| < 10^{−digits/2} · max(1, z²).
TorusKind classify(const RealTraceTriple& t, long digits);

struct TorusParams {
  Real lambda, mu, theta;
  int epsilon = 1;
};

struct ParamsOptions {
  long digits = Real::kDefaultDigits;
  // Accept σ ≥ 4, the orientation of the worked hyperbolic example with tr L = σ − 2.
  bool allow_positive_sigma = false;
};
TorusParams params_from_traces(const RealTraceTriple& t, int epsilon, const ParamsOptions& opts = {});

// Parabolic closed forms λ = tr A / tr AB, μ = tr B / tr AB, kept exact.
struct ExactParams {
  QuadraticSurd lambda, mu;
};
ExactParams parabolic_params(const ExactTraceTriple& t);
// (s/λ, s/μ, s/(λμ)) with s = 1 + λ² + μ²
ExactTraceTriple parabolic_triple(const QuadraticSurd& lambda, const QuadraticSurd& mu);

struct RealMat2 {
  Real a, b, c, d;

  Real det() const { return a * d - b * c; }
  Real trace() const { return a + d; }
  RealMat2 inverse() const;
  friend RealMat2 operator*(const RealMat2& x, const RealMat2& y);
};
RealMat2 to_real(const Mat2& M, long bits);

std::pair<RealMat2, RealMat2> matrices_from_params(const TorusParams& p);
RealTraceTriple traces_of(const RealMat2& A, const RealMat2& B);

template <class T>
struct TripleReduction {
  TraceTripleT<T> triple;
  std::string path;  // letters X, Y, Z in application order
};
TripleReduction<QuadraticSurd> reduce_triple(const ExactTraceTriple& t);
TripleReduction<Real> reduce_triple(const RealTraceTriple& t, long digits);

template <class T>
struct SuperReduction {
  T lambda, mu, module;
  TraceTripleT<T> triple;
  std::vector<std::string> ops;  // X, Y, Z then P1, P2
};
SuperReduction<QuadraticSurd> super_reduce(const ExactParams& p);
SuperReduction<Real> super_reduce(const TorusParams& p, long digits);
bool is_super_reduced(const QuadraticSurd& lambda, const QuadraticSurd& mu);

struct ConeFR {
  Real M, M1, M2;
  Real residual;  // M² + M₁² + M₂² − (tr A·M·M₁ + tr B·M·M₂ − tr AB·M₁·M₂)
};
ConeFR cone_FR(const RealTraceTriple& t, int epsilon, const ParamsOptions& opts = {});
// x² + y² + z² − (tr A·xy + tr B·xz − tr AB·yz)
BigInt cone_form(const BigInt& trA, const BigInt& trB, const BigInt& trAB, const BigInt& x, const BigInt& y,
                 const BigInt& z);

struct AuditItem {
  std::string name;
  std::string computed;
  std::string expected;
  bool match = false;
  bool informational = false;  // displayed value known to disagree, reported only
};
struct HyperbolicAudit {
  Mat2 A, B, L, U, V;
  std::vector<AuditItem> items;
  bool all_match() const;
};
HyperbolicAudit hyperbolic_example_audit();

// Trace action of X_φ, Y_φ, Z_φ, P₁, P₂ on a matrix pair against the triple maps.
struct GeneratorAudit {
  std::string op;
  Real residual;
};
std::vector<GeneratorAudit> generator_action_audit(const RealMat2& A, const RealMat2& B);

}  // namespace markoff
