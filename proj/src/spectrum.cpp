#include "markoff/spectrum.hpp"

#include <algorithm>
#include <thread>

namespace markoff {

namespace {

std::size_t wrap(long i, std::size_t n) {
  long r = i % static_cast<long>(n);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(n) : r);
}

}  // namespace

BigInt MarkoffForm::expected_discriminant() const {
  BigInt s = (a + 1) * m + K1 - K2;
  return s * s - 4 * eps1 * eps2;
}

MarkoffForm form_of(const Decomposition& d, const BigInt& a) {
  MarkoffForm f;
  f.m = d.m;
  f.K1 = d.K1;
  f.K2 = d.K2;
  f.l = d.l;
  f.eps1 = d.eps1;
  f.eps2 = d.eps2;
  f.a = a;
  f.A = d.m;
  f.B = (a + 1) * d.m - d.K2 - d.K1;
  f.C = -((a + 1) * d.K1 - d.l);
  return f;
}

MarkoffForm form_of_triple(const Equation& eq, const Triple& t) {
  if (t.m < 1 || t.m1 == 0) throw DomainError("form of a triple needs m >= 1 and m1 != 0");
  MarkoffForm f;
  f.m = t.m;
  f.eps1 = eq.eps1;
  f.eps2 = eq.eps2;
  f.a = eq.a;
  BigInt K1 = 0;
  if (t.m > 1) {
    BigInt m1 = ((t.m1 % t.m) + t.m) % t.m;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), t.m.get_mpz_t()) == 0)
      throw DomainError("m1 is not invertible modulo m for " + t.to_string());
    K1 = ((eq.eps1 * t.m2 * inv) % t.m + t.m) % t.m;
  }
  f.K1 = K1;
  f.K2 = K1 - eq.eps2 * eq.dK;
  BigInt num = f.K1 * f.K2 + eq.eps1 * eq.eps2;
  if (num % t.m != 0) throw DomainError("no integral Markoff form for " + t.to_string());
  f.l = num / t.m;
  f.A = t.m;
  f.B = (eq.a + 1) * t.m - f.K2 - f.K1;
  f.C = -((eq.a + 1) * f.K1 - f.l);
  return f;
}

PhiForm phi_of(const Decomposition& d, const BigInt& a) {
  PhiForm f;
  f.B = (a + 1) * d.m + d.K1 - d.K2;
  f.eps = matrix_of(d.sequence()).eps;
  return f;
}

bool phi_multiplicativity_check(const PhiForm& f, const BigInt& z1, const BigInt& y1, const BigInt& z2,
                                const BigInt& y2) {
  BigInt lhs = f.eval(z1, y1) * f.eval(z2, y2);
  BigInt rhs = f.eval(z1 * z2 + f.eps * y1 * y2, y1 * z2 + z1 * y2 + f.B * y1 * y2);
  return lhs == rhs;
}

std::vector<int> phi_invariance_failures(const PhiForm& f, const BigInt& z, const BigInt& y) {
  const BigInt v = f.eval(z, y);
  const BigInt& B = f.B;
  const int e = f.eps;
  std::vector<BigInt> images{
      f.eval(-z, -y),
      -e * f.eval(y, -e * z),
      f.eval(z + B * y, -y),
      f.eval(-z, y - B * e * z),
      -e * f.eval(y - e * B * z, e * z),
      -e * f.eval(-y, -e * z - B * e * y),
  };
  std::vector<int> bad;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != v) bad.push_back(static_cast<int>(i) + 1);
  return bad;
}

Constant markoff_constant(const Sequence& period) {
  if (period.empty()) throw DomainError("empty period");
  validate(period);
  const std::size_t n = period.size();
  Constant out;
  out.period = period;
  QuadraticSurd best;
  for (std::size_t j = 0; j < n; ++j) {
    Sequence fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
      fwd[i] = period[wrap(static_cast<long>(j + 1 + i), n)];
      bwd[i] = period[wrap(static_cast<long>(j) - 1 - static_cast<long>(i), n)];
    }
    QuadraticSurd v = QuadraticSurd(period[j]) + periodic_surd(fwd) + periodic_surd(bwd);
    if (j == 0 || v > best) {
      best = v;
      out.attained_at.assign(1, j);
    } else if (v == best) {
      out.attained_at.push_back(j);
    }
  }
  out.value = best.reciprocal();
  return out;
}

Constant constant_of_form(const BigInt& A, const BigInt& B, const BigInt& C) {
  if (A == 0) throw DomainError("form has a rational root");
  BigInt disc = B * B - 4 * A * C;
  if (disc <= 0 || is_square(disc)) throw DomainError("form discriminant must be positive and not a square");
  QuadraticSurd root(-B, 1, 2 * A, disc);
  SurdExpansion e = expand(root);
  if (e.period.empty()) throw DomainError("root has no periodic expansion");
  return markoff_constant(e.period);
}

Extrema form_extrema(const MarkoffForm& f, int periods) {
  if (periods < 1) throw DomainError("scan depth must be at least one period");
  BigInt disc = f.discriminant();
  if (disc <= 0 || is_square(disc)) throw DomainError("form discriminant must be positive and not a square");
  SurdExpansion e = expand(QuadraticSurd(-f.B, 1, 2 * f.A, disc));
  Sequence terms = e.preperiod;
  for (int i = 0; i < periods; ++i) terms.insert(terms.end(), e.period.begin(), e.period.end());
  Extrema out;
  BigInt p0 = 1, q0 = 0, p1 = terms.front(), q1 = 1;
  auto visit = [&](const BigInt& p, const BigInt& q) {
    BigInt v = f.eval(p, q);
    if (v > 0 && (!out.has_positive || v < out.positive_min)) {
      out.positive_min = v;
      out.has_positive = true;
    }
    if (v < 0 && (!out.has_negative || v > out.negative_max)) {
      out.negative_max = v;
      out.has_negative = true;
    }
  };
  visit(p1, q1);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    BigInt p2 = terms[i] * p1 + p0, q2 = terms[i] * q1 + q0;
    visit(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return out;
}

FibonacciMember fibonacci_family_constant(const BigInt& t) {
  if (t < 1 || !t.fits_ulong_p()) throw DomainError("family index must be a positive machine integer");
  unsigned long k = t.get_ui();
  FibonacciMember f;
  mpz_fib_ui(f.p.get_mpz_t(), 2 * k + 2);
  mpz_fib_ui(f.q.get_mpz_t(), 2 * k);
  BigInt m = f.p * f.p + f.q * f.q;
  f.triple = {m, f.p, f.q};
  BigInt disc = 9 * m * m - 4;
  f.value = QuadraticSurd(BigInt(3 * f.p * f.q - 1)) * inverse_sqrt(disc);
  return f;
}

QuadraticSurd inverse_sqrt(const BigInt& n) {
  if (n <= 0) throw DomainError("inverse square root needs a positive argument");
  return QuadraticSurd(0, 1, n, n);
}

Segment segment_Ua(const BigInt& a) {
  if (a < 1) throw DomainError("segment index a must be at least 1");
  return {inverse_sqrt(a * a + 4 * a), inverse_sqrt(a * a + 4)};
}

QuadraticSurd freiman_constant() {
  QuadraticSurd inv = QuadraticSurd(4) + QuadraticSurd(253589820, 283748, 491993569, 462);
  return inv.reciprocal();
}

QuadraticSurd perron_gap_endpoint() { return QuadraticSurd(22) / QuadraticSurd(65, 9, 1, 3); }

std::vector<SpectrumRecord> spectrum_scan(const Equation& eq, const BigInt& bound, unsigned threads) {
  ForestOptions opts;
  opts.threads = threads;
  opts.reduce = symmetry_of(eq);
  Forest forest = enumerate_forest(eq, bound, opts);
  std::vector<SpectrumRecord> records(forest.entries.size());
  auto work = [&](std::size_t i) {
    SpectrumRecord& r = records[i];
    r.equation = eq;
    r.triple = forest.entries[i].triple;
    try {
      for (const auto& d : reconstruct_all(r.triple.m, r.triple.m1, r.triple.m2, eq.eps1, eq.eps2)) {
        if (d.equation(eq.a) == eq) {
          r.constant = markoff_constant(concat(d.star(), Sequence{eq.a}));
          r.route = "sequence";
          return;
        }
      }
      MarkoffForm f = form_of_triple(eq, r.triple);
      r.constant = constant_of_form(f.A, f.B, f.C);
      r.route = "form";
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
  };
  unsigned n = std::max(1U, threads);
  if (n == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < n; ++id)
      pool.emplace_back([&, id] {
        for (std::size_t i = id; i < records.size(); i += n) work(i);
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace markoff
