#include "markoff/torus.hpp"

#include "markoff/gl2z.hpp"

#include <algorithm>

namespace markoff {

namespace {

constexpr int kMaxReductionSteps = 100000;

Real lit(long v, long bits) { return Real(v, bits); }

Real tolerance(long digits, long bits) {
  Real t(bits);
  mpfr_ui_pow_ui(t.get(), 10UL, static_cast<unsigned long>(std::max(1L, digits / 2)), MPFR_RNDN);
  return lit(1, bits) / t;
}

// |v| < 10^{−digits/2} · max(1, |scale|)
bool negligible(const Real& v, const Real& scale, long digits) {
  long bits = std::max(v.precision(), scale.precision());
  return abs(v) < tolerance(digits, bits) * max(lit(1, bits), abs(scale));
}

template <class T>
T max3(const TraceTripleT<T>& t) {
  return std::max({t.x, t.y, t.z}, [](const T& a, const T& b) { return a < b; });
}

template <class T>
TraceTripleT<T> apply_letter(const TraceTripleT<T>& t, char letter) {
  switch (letter) {
    case 'X': return {t.y * t.z - t.x, t.y, t.z};
    case 'Y': return {t.x, t.x * t.z - t.y, t.z};
    default: return {t.x, t.y, t.x * t.y - t.z};
  }
}

template <class T, class Less>
TripleReduction<T> reduce_generic(TraceTripleT<T> t, Less strictly_less) {
  TripleReduction<T> out;
  for (int step = 0; step < kMaxReductionSteps; ++step) {
    T m = max3(t);
    bool moved = false;
    for (char letter : {'X', 'Y', 'Z'}) {
      TraceTripleT<T> next = apply_letter(t, letter);
      if (strictly_less(max3(next), m)) {
        t = next;
        out.path.push_back(letter);
        moved = true;
        break;
      }
    }
    if (!moved) {
      out.triple = t;
      return out;
    }
  }
  throw DomainError("trace-triple reduction did not terminate");
}

// Sort to x ≥ y ≥ z with P₁ (x↔y) and P₂ (x↔z).
template <class T, class Less>
void sort_with_ops(TraceTripleT<T>& t, std::vector<std::string>& ops, Less less) {
  for (int guard = 0; guard < 8; ++guard) {
    if (less(t.x, t.y)) {
      std::swap(t.x, t.y);
      ops.emplace_back("P1");
    } else if (less(t.x, t.z)) {
      std::swap(t.x, t.z);
      ops.emplace_back("P2");
    } else if (less(t.y, t.z)) {
      std::swap(t.x, t.y);
      std::swap(t.x, t.z);
      std::swap(t.x, t.y);
      ops.insert(ops.end(), {"P1", "P2", "P1"});
    } else {
      return;
    }
  }
}

std::pair<QuadraticSurd, QuadraticSurd> fixed_points(const Mat2& M) {
  BigInt disc = (M.d - M.a) * (M.d - M.a) + 4 * M.b * M.c;
  if (M.c == 0 || disc <= 0) throw DomainError("matrix has no pair of real fixed points");
  QuadraticSurd u(M.a - M.d, 1, 2 * M.c, disc), v(M.a - M.d, -1, 2 * M.c, disc);
  if (u < v) std::swap(u, v);
  return {u, v};
}

QuadraticSurd mobius(const Mat2& M, const QuadraticSurd& z) {
  return (QuadraticSurd(M.a) * z + QuadraticSurd(M.b)) / (QuadraticSurd(M.c) * z + QuadraticSurd(M.d));
}

Real residual_of(const RealTraceTriple& a, const RealTraceTriple& b) {
  return max(abs(a.x - b.x), max(abs(a.y - b.y), abs(a.z - b.z)));
}

}  // namespace

std::string torus_kind_name(TorusKind k) {
  switch (k) {
    case TorusKind::parabolic: return "parabolic";
    case TorusKind::hyperbolic: return "hyperbolic";
    default: return "invalid";
  }
}

ExactTraceTriple parse_exact_triple(const std::string& text) {
  char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> parts(1);
  for (char c : text) {
    if (c == sep)
      parts.emplace_back();
    else
      parts.back().push_back(c);
  }
  if (parts.size() != 3) throw ParseError("trace triple needs three entries: " + text);
  return {QuadraticSurd::parse(parts[0]), QuadraticSurd::parse(parts[1]), QuadraticSurd::parse(parts[2])};
}

RealTraceTriple to_real(const ExactTraceTriple& t, long bits) {
  return {t.x.to_real(bits), t.y.to_real(bits), t.z.to_real(bits)};
}

QuadraticSurd sigma(const ExactTraceTriple& t) { return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z; }

Real sigma(const RealTraceTriple& t) { return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z; }

TorusKind classify(const ExactTraceTriple& t) {
  int s = sigma(t).sign();
  return s == 0 ? TorusKind::parabolic : s < 0 ? TorusKind::hyperbolic : TorusKind::invalid;
}

TorusKind classify(const RealTraceTriple& t, long digits) {
  Real s = sigma(t);
  if (negligible(s, t.z * t.z, digits)) return TorusKind::parabolic;
  return s.sign() < 0 ? TorusKind::hyperbolic : TorusKind::invalid;
}

TorusParams params_from_traces(const RealTraceTriple& t, int epsilon, const ParamsOptions& opts) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
  const Real& trB = t.x;
  const Real& trA = t.y;
  const Real& trAB = t.z;
  long bits = std::max({trA.precision(), trB.precision(), trAB.precision()});
  Real s = sigma(t);
  Real r(bits);
  if (classify(t, opts.digits) == TorusKind::parabolic) {
    s = lit(0, bits);
  } else if (s.sign() > 0) {
    if (!opts.allow_positive_sigma) throw DomainError("sigma > 0: not the trace triple of a punctured torus");
    if (s < lit(4, bits)) throw DomainError("0 < sigma < 4 gives no real parameters");
    r = sqrt(s * s - lit(4, bits) * s);
  } else {
    r = sqrt(s * s - lit(4, bits) * s);
  }
  Real den = lit(2, bits) * (s - trAB * trAB);
  if (negligible(den, trAB * trAB, opts.digits)) throw DomainError("degenerate denominator sigma = tr(AB)^2");
  Real e = lit(epsilon, bits);
  TorusParams p;
  p.epsilon = epsilon;
  p.lambda = (-(lit(2, bits) * trA * trAB - trB * s) - e * trB * r) / den;
  p.mu = (-(lit(2, bits) * trB * trAB - trA * s) + e * trA * r) / den;
  Real base = lit(2, bits) * (trA * trA + trB * trB);
  Real tden = base - trA * trA * s - e * trA * trA * r;
  if (negligible(tden, base, opts.digits)) throw DomainError("degenerate denominator for theta");
  p.theta = (base - trB * trB * s + e * trB * trB * r) / tden;
  return p;
}

ExactParams parabolic_params(const ExactTraceTriple& t) {
  if (classify(t) != TorusKind::parabolic) throw DomainError("exact parameters need a parabolic triple");
  if (t.z.sign() == 0) throw DomainError("tr(AB) = 0");
  return {t.y / t.z, t.x / t.z};
}

ExactTraceTriple parabolic_triple(const QuadraticSurd& lambda, const QuadraticSurd& mu) {
  if (lambda.sign() <= 0 || mu.sign() <= 0) throw DomainError("lambda and mu must be positive");
  QuadraticSurd s = QuadraticSurd(1) + lambda * lambda + mu * mu;
  return {s / lambda, s / mu, s / (lambda * mu)};
}

RealMat2 RealMat2::inverse() const {
  Real e = det();
  return {d / e, -b / e, -c / e, a / e};
}

RealMat2 operator*(const RealMat2& x, const RealMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

RealMat2 to_real(const Mat2& M, long bits) {
  return {Real(M.a, bits), Real(M.b, bits), Real(M.c, bits), Real(M.d, bits)};
}

std::pair<RealMat2, RealMat2> matrices_from_params(const TorusParams& p) {
  if (p.lambda.sign() <= 0 || p.mu.sign() <= 0 || p.theta.sign() <= 0)
    throw DomainError("lambda, mu and theta must be positive");
  long bits = std::max({p.lambda.precision(), p.mu.precision(), p.theta.precision()});
  const Real one = lit(1, bits);
  const Real &l = p.lambda, &m = p.mu, &th = p.theta;
  RealMat2 A{m, m * l * l, one / (th * m), (one + l * l / th) / m};
  RealMat2 B{l, -l * m * m * th, -one / l, (one + th * m * m) / l};
  return {A, B};
}

RealTraceTriple traces_of(const RealMat2& A, const RealMat2& B) {
  RealMat2 Bi = B.inverse();
  return {Bi.trace(), A.trace(), (Bi * A.inverse()).trace()};
}

TripleReduction<QuadraticSurd> reduce_triple(const ExactTraceTriple& t) {
  if (classify(t) != TorusKind::parabolic) throw DomainError("reduction needs sigma = 0");
  if (t.x.sign() <= 0 || t.y.sign() <= 0 || t.z.sign() <= 0)
    throw DomainError("reduction needs a triple on the principal sheet");
  return reduce_generic(t, [](const QuadraticSurd& a, const QuadraticSurd& b) { return a < b; });
}

TripleReduction<Real> reduce_triple(const RealTraceTriple& t, long digits) {
  if (classify(t, digits) != TorusKind::parabolic) throw DomainError("reduction needs sigma = 0");
  if (t.x.sign() <= 0 || t.y.sign() <= 0 || t.z.sign() <= 0)
    throw DomainError("reduction needs a triple on the principal sheet");
  return reduce_generic(t, [digits](const Real& a, const Real& b) {
    return a < b && !negligible(b - a, b, digits);
  });
}

bool is_super_reduced(const QuadraticSurd& lambda, const QuadraticSurd& mu) {
  return QuadraticSurd(1) <= lambda && lambda <= mu && mu * mu <= QuadraticSurd(1) + lambda * lambda;
}

SuperReduction<QuadraticSurd> super_reduce(const ExactParams& p) {
  auto red = reduce_triple(parabolic_triple(p.lambda, p.mu));
  SuperReduction<QuadraticSurd> out;
  for (char c : red.path) out.ops.emplace_back(1, c);
  out.triple = red.triple;
  sort_with_ops(out.triple, out.ops, [](const QuadraticSurd& a, const QuadraticSurd& b) { return a < b; });
  out.lambda = out.triple.y / out.triple.z;
  out.mu = out.triple.x / out.triple.z;
  out.module = out.mu * out.mu / (out.lambda * out.lambda);
  return out;
}

SuperReduction<Real> super_reduce(const TorusParams& p, long digits) {
  long bits = std::max(p.lambda.precision(), p.mu.precision());
  if (!negligible(p.theta - lit(1, bits), lit(1, bits), digits))
    throw DomainError("super-reduction needs a parabolic torus (theta = 1)");
  Real s = lit(1, bits) + p.lambda * p.lambda + p.mu * p.mu;
  auto red = reduce_triple(RealTraceTriple{s / p.lambda, s / p.mu, s / (p.lambda * p.mu)}, digits);
  SuperReduction<Real> out;
  for (char c : red.path) out.ops.emplace_back(1, c);
  out.triple = red.triple;
  sort_with_ops(out.triple, out.ops, [digits](const Real& a, const Real& b) {
    return a < b && !negligible(b - a, b, digits);
  });
  out.lambda = out.triple.y / out.triple.z;
  out.mu = out.triple.x / out.triple.z;
  out.module = out.mu * out.mu / (out.lambda * out.lambda);
  return out;
}

ConeFR cone_FR(const RealTraceTriple& t, int epsilon, const ParamsOptions& opts) {
  TorusParams p = params_from_traces(t, epsilon, opts);
  if (p.theta.is_zero()) throw DomainError("degenerate theta");
  const Real& trB = t.x;
  const Real& trA = t.y;
  const Real& trAB = t.z;
  ConeFR c;
  c.M = trAB * trAB - sigma(t);
  c.M2 = trA * trAB - trB + p.theta * trB;
  c.M1 = trB * trAB - trA + trA / p.theta;
  c.residual = c.M * c.M + c.M1 * c.M1 + c.M2 * c.M2 -
               (trA * c.M * c.M1 + trB * c.M * c.M2 - trAB * c.M1 * c.M2);
  return c;
}

BigInt cone_form(const BigInt& trA, const BigInt& trB, const BigInt& trAB, const BigInt& x, const BigInt& y,
                 const BigInt& z) {
  return x * x + y * y + z * z - (trA * x * y + trB * x * z - trAB * y * z);
}

bool HyperbolicAudit::all_match() const {
  return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.match || i.informational; });
}

HyperbolicAudit hyperbolic_example_audit() {
  HyperbolicAudit h;
  h.A = {11, 3, 7, 2};
  h.B = {37, 11, 10, 3};
  h.L = commutator(h.A, h.B);
  h.U = h.B.inverse() * h.A;
  h.V = h.B * h.A.inverse();
  const Mat2 I;
  auto add = [&](std::string name, std::string computed, std::string expected, bool informational = false) {
    bool match = computed == expected;
    h.items.push_back({std::move(name), std::move(computed), std::move(expected), match, informational});
  };
  auto surd = [&](const std::string& name, const QuadraticSurd& got, const QuadraticSurd& want,
                  bool informational = false) { add(name, got.exact_string(), want.exact_string(), informational); };
  BigInt trA = h.A.trace(), trB = h.B.trace(), trAB = (h.A * h.B).trace();
  add("tr(L)", to_string(h.L.trace()), "1767");
  add("sigma", to_string(BigInt(trA * trA + trB * trB + trAB * trAB - trA * trB * trAB)), "1769");
  add("L", h.L.to_string(), Mat2{-1298, 4799, -829, 3065}.to_string());
  add("U^2", (h.U * h.U).to_string(), (-I).to_string());
  add("V^2", (h.V * h.V).to_string(), (-I).to_string());
  add("U = -A^-1 B", h.U.to_string(), (-(h.A.inverse() * h.B)).to_string());
  add("V = -A B^-1", h.V.to_string(), (-(h.A * h.B.inverse())).to_string());
  add("A = B U", (h.B * h.U).to_string(), h.A.to_string());
  add("A = -V B", (-(h.V * h.B)).to_string(), h.A.to_string());
  add("B = V A", (h.V * h.A).to_string(), h.B.to_string());
  add("B = -A U", (-(h.A * h.U)).to_string(), h.B.to_string());

  const BigInt D = 3122285;
  auto [s_plus, s_minus] = fixed_points(h.L);
  const Mat2 Ai = h.A.inverse(), Bi = h.B.inverse();
  QuadraticSurd alpha_plus = mobius(Ai, s_plus), alpha_minus = mobius(Ai, s_minus);
  QuadraticSurd p_plus = mobius(Bi, alpha_plus), p_minus = mobius(Bi, alpha_minus);
  QuadraticSurd beta_plus = mobius(h.A, p_plus), beta_minus = mobius(h.A, p_minus);
  surd("s+", s_plus, QuadraticSurd(4363, 1, 1658, D));
  surd("beta+", beta_plus, QuadraticSurd(1477, 1, 982, D));
  surd("p+", p_plus, QuadraticSurd(-44517, -1, 155578, D));
  surd("alpha+", alpha_plus, QuadraticSurd(1477, -1, 982, D));
  surd("s-", s_minus, QuadraticSurd(4363, -1, 1658, D));
  surd("beta-", beta_minus, QuadraticSurd(1477, -1, 982, D));
  surd("p-", p_minus, QuadraticSurd(-44517, 1, 155578, D));
  surd("alpha-", alpha_minus, QuadraticSurd(1477, 1, 982, D));
  surd("beta+ = alpha-", beta_plus, alpha_minus);
  surd("beta- = alpha+", beta_minus, alpha_plus);
  surd("L(s+) = s+", mobius(h.L, s_plus), s_plus);
  surd("beta+ = U(beta-)", mobius(h.U, beta_minus), beta_plus);
  surd("beta+ = V(beta-)", mobius(h.V, beta_minus), beta_plus);

  auto [a_plus, a_minus] = fixed_points(h.A);
  auto [b_plus, b_minus] = fixed_points(h.B);
  surd("a+", a_plus, QuadraticSurd(9, 1, 14, 165));
  surd("a-", a_minus, QuadraticSurd(9, -1, 6, 165), true);
  surd("b+", b_plus, QuadraticSurd(34, 1, 20, 1586), true);
  surd("b-", b_minus, QuadraticSurd(32, -1, 22, 1586), true);
  return h;
}

std::vector<GeneratorAudit> generator_action_audit(const RealMat2& A, const RealMat2& B) {
  RealTraceTriple t = traces_of(A, B);
  RealMat2 Ai = A.inverse(), Bi = B.inverse();
  struct Case {
    const char* op;
    RealMat2 A2, B2;
    RealTraceTriple expect;
  };
  std::vector<Case> cases{
      {"X", Ai, A * B * A, apply_letter(t, 'X')},
      {"Y", B * A * B, Bi, apply_letter(t, 'Y')},
      {"Z", Ai, B, apply_letter(t, 'Z')},
      {"P1", B, A, {t.y, t.x, t.z}},
      {"P2", A, Bi * Ai, {t.z, t.y, t.x}},
  };
  std::vector<GeneratorAudit> out;
  for (const auto& c : cases) out.push_back({c.op, residual_of(traces_of(c.A2, c.B2), c.expect)});
  return out;
}

}  // namespace markoff
