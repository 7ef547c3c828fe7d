#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "markoff/constructions.hpp"
#include "markoff/gl2z.hpp"
#include "markoff/spectrum.hpp"
#include "markoff/torus.hpp"
#include "oracles.hpp"

using namespace markoff;

namespace {

// Collects failures for one criterion; the first few are printed.
struct Check {
  int failures = 0;
  std::string note;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures <= 5) std::printf("    failed: %s\n", what.c_str());
  }
};

using Clock = std::chrono::steady_clock;

bool criterion(int n, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) c(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_s) + " s");
  bool ok = c.failures == 0;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", n, title, secs, c.note.empty() ? "" : "; ",
              c.note.c_str());
  std::fflush(stdout);
  return ok;
}

Equation E(const char* s) { return Equation::parse(s); }

std::string str(const Triple& t) { return t.to_string(); }

const long kBits = Real::bits_for_digits(Real::kDefaultDigits);

Real R(long v) { return Real(v, kBits); }

Real tiny(int exponent) {
  Real r = R(1);
  for (int i = 0; i < exponent; ++i) r = r / R(10);
  return r;
}

bool close(const Real& a, const Real& b, long digits) { return approx_equal(a, b, digits); }

bool satisfies(const Equation& eq, const Triple& t) {
  const BigInt &m = t.m, &m1 = t.m1, &m2 = t.m2;
  return m * m + eq.eps2 * m1 * m1 + eq.eps1 * m2 * m2 ==
         (eq.a + 1) * m * m1 * m2 + eq.eps2 * eq.dK * m1 * m2 - eq.u * m;
}

Triple vieta(const Equation& eq, const Triple& t, int w) {
  const BigInt a1 = eq.a + 1;
  if (w == 0) return {a1 * t.m1 * t.m2 - t.m - eq.u, t.m1, t.m2};
  if (w == 1) return {t.m, eq.eps2 * a1 * t.m * t.m2 + eq.dK * t.m2 - t.m1, t.m2};
  return {t.m, t.m1, eq.eps1 * a1 * t.m * t.m1 + eq.eps1 * eq.eps2 * eq.dK * t.m1 - t.m2};
}

// Height descent through the raw Vieta partners, positive domain only.
Triple naive_terminal(const Equation& eq, Triple t) {
  for (;;) {
    bool moved = false;
    for (int w = 0; w < 3 && !moved; ++w) {
      Triple v = vieta(eq, t, w);
      if (v.positive() && height(v) < height(t)) {
        t = v;
        moved = true;
      }
    }
    if (!moved) return t;
  }
}

// ---------------------------------------------------------------------------

void goldens(Check& c) {
  c(is_solution(E("++,2,0,-2"), {73, 8, 3}), "(73,8,3) on ++,2,0,-2");
  c(is_solution(E("++,3,0,1"), {130, 11, 3}), "(130,11,3) on ++,3,0,1");
  c(is_solution(E("++,2,2,0"), {3, 1, 1}), "(3,1,1) on ++,2,2,0");
  c(is_solution(E("++,3,-1,0"), {3, 1, 1}), "(3,1,1) on ++,3,-1,0");
  c(is_solution(E("++,2,-2,0"), {3, 2, 1}), "(3,2,1) on ++,2,-2,0");
  for (const auto& [lit, t] : {std::pair{"++,2,0,-2", Triple{73, 8, 3}}, std::pair{"++,3,0,1", Triple{130, 11, 3}},
                               std::pair{"++,2,2,0", Triple{3, 1, 1}}, std::pair{"++,3,-1,0", Triple{3, 1, 1}},
                               std::pair{"++,2,-2,0", Triple{3, 2, 1}}})
    c(satisfies(E(lit), t), std::string("expanded equation ") + lit);

  Mat2 A{11, 3, 7, 2}, B{37, 11, 10, 3};
  FrickeTrace f = fricke_commutator_trace(A, B);
  c(f.formula == 1767 && f.direct == 1767, "Fricke trace 1767");
  BigInt x = A.trace(), y = B.trace(), z = (A * B).trace();
  c(x * x + y * y + z * z - x * y * z == 1769, "sigma 1769");
  c(sigma(ExactTraceTriple{x, y, z}) == QuadraticSurd(1769), "sigma via torus");
  Mat2 L = A * B * A.inverse() * B.inverse();
  c(L == Mat2{-1298, 4799, -829, 3065}, "L = ABA^-1B^-1");
  c(hyperbolic_example_audit().L == L, "audit L");

  Decomposition d = reconstruct(73, 8, 3, 1, 1, 2).decomposition;
  c(d.K1 == 46 && d.K2 == 46, "K1 = K2 = 46");
  c(d.k1 == 5 && d.k2 == 2, "k1 = 5, k2 = 2");
}

void solvability(Check& c) {
  std::vector<long> unsolvable, oracle_unsolvable;
  for (long s = 1; s <= 50; ++s) {
    Solvability r = solvability_scan_2_0_u(s);
    if (!r.solvable) unsolvable.push_back(s);
    if (r.solvable) c(is_solution(Equation{1, 1, 2, 0, -s}, r.witness), "witness for s=" + std::to_string(s));
    // x² + y² + z² = 3xyz + s x searched over m, m₂ < 60 regardless of the box, solving for m₁
    bool found = false;
    for (long m = 1; m < 60 && !found; ++m)
      for (long m2 = 1; m2 < 60 && !found; ++m2) {
        long disc = 9 * m * m * m2 * m2 - 4 * (m * m + m2 * m2 - s * m);
        if (disc < 0) continue;
        long r0 = static_cast<long>(std::sqrt(static_cast<double>(disc)));
        while (r0 * r0 > disc) --r0;
        while ((r0 + 1) * (r0 + 1) <= disc) ++r0;
        if (r0 * r0 != disc) continue;
        for (long num : {3 * m * m2 + r0, 3 * m * m2 - r0})
          if (num > 0 && num % 2 == 0) found = true;
      }
    if (!found) oracle_unsolvable.push_back(s);
  }
  const std::vector<long> want{1, 3, 7, 9, 11, 19, 23, 27, 31, 43, 47};
  c(unsolvable == want, "library unsolvable set");
  c(oracle_unsolvable == want, "oracle unsolvable set");
}

void classical_tree(Check& c) {
  Equation eq = E("++,2,0,0");
  Forest f = enumerate_forest(eq, 10000);
  std::set<oracle::I3> got;
  for (const auto& e : f.entries) got.insert({e.triple.m.get_si(), e.triple.m1.get_si(), e.triple.m2.get_si()});
  auto tree = oracle::markoff_tree(10000);
  c(got == tree, "forest equals tree closure at 10000");
  c(f.orbits.size() == 1, "single orbit");
  if (!f.orbits.empty()) c(f.orbits[0].terminal == Triple{1, 1, 1}, "terminal (1,1,1)");
  auto cube = oracle::cube_scan(eq, 200);
  c(cube == oracle::markoff_tree(200), "tree closure equals cube scan at 200");
  std::set<oracle::I3> small;
  for (const auto& e : enumerate_forest(eq, 200).entries)
    small.insert({e.triple.m.get_si(), e.triple.m1.get_si(), e.triple.m2.get_si()});
  c(small == cube, "forest equals cube scan at 200");
  c.note = std::to_string(got.size()) + " ordered triples";
}

void two_orbits(Check& c) {
  Equation eq = E("++,2,0,-2");
  ForestOptions opts;
  opts.reduce = symmetry_of(eq);
  Forest f = enumerate_forest(eq, 1000, opts);
  c(f.orbits.size() == 2, "two orbits, got " + std::to_string(f.orbits.size()));
  // independent count: solve the quadratic in m over m₁, m₂ ≤ 1000 and descend each solution
  std::set<Triple> terminals;
  std::size_t solutions = 0;
  for (long m1 = 1; m1 <= 1000; ++m1)
    for (long m2 = 1; m2 <= 1000; ++m2) {
      // m² − (3 m₁m₂ + 2) m + m₁² + m₂² = 0
      long b = 3 * m1 * m2 + 2;
      long disc = b * b - 4 * (m1 * m1 + m2 * m2);
      if (disc < 0) continue;
      BigInt r = sqrt(BigInt(disc));
      if (r * r != disc) continue;
      for (long sgn : {1, -1}) {
        BigInt num = b + sgn * r;
        if (num <= 0 || num % 2 != 0 || num / 2 > 1000) continue;
        Triple t{num / 2, m1, m2};
        ++solutions;
        terminals.insert(naive_terminal(eq, t));
      }
    }
  c(terminals.size() == 2, "oracle finds two terminals, got " + std::to_string(terminals.size()));
  std::set<Triple> lib;
  for (const auto& o : f.orbits) lib.insert(o.terminal);
  c(lib == terminals, "terminals agree with the oracle");
  std::string names;
  for (const auto& t : lib) names += (names.empty() ? "" : " ") + str(t);
  Forest plain = enumerate_forest(eq, 1000);
  c(plain.orbits.size() == 2, "two orbits without symmetry reduction");
  c.note = "terminals " + names + " exchanged by P, " + std::to_string(solutions) + " solutions";
}

void constants(Check& c) {
  c(markoff_constant(parse_sequence("(1)")).value == inverse_sqrt(5), "C((1)) = 1/sqrt5");
  c(markoff_constant(parse_sequence("(2)")).value == inverse_sqrt(8), "C((2)) = 1/sqrt8");
  c(inverse_sqrt(5) * inverse_sqrt(5) == QuadraticSurd(oracle::q(1, 5)), "1/sqrt5 squared");
  c(inverse_sqrt(8) * inverse_sqrt(8) == QuadraticSurd(oracle::q(1, 8)), "1/sqrt8 squared");
  const QuadraticSurd third(oracle::q(1, 3));
  QuadraticSurd prev(0);
  for (int t = 1; t <= 20; ++t) {
    FibonacciMember f = fibonacci_family_constant(t);
    c(is_solution(E("++,2,0,-2"), f.triple), "family member solves ++,2,0,-2");
    c(f.value > prev, "strictly increasing at t=" + std::to_string(t));
    c(f.value < third, "below 1/3 at t=" + std::to_string(t));
    prev = f.value;
  }
  c(third - prev < QuadraticSurd(oracle::q(1, 1000000)), "1/3 - C_20 < 1e-6");
  c.note = "1/3 - C_20 = " + (third - prev).to_string(6);
}

void gaps(Check& c) {
  Segment u2 = segment_Ua(2), u3 = segment_Ua(3);
  c(u3.hi < u2.lo, "U3 lies below U2");
  c(u3.hi == inverse_sqrt(13), "sup U3 = 1/sqrt13");
  c(u2.lo == inverse_sqrt(12), "inf U2 = 1/sqrt12");
  c(inverse_sqrt(13) < inverse_sqrt(12), "gap ]1/sqrt13, 1/sqrt12[ is nonempty");
  QuadraticSurd p = perron_gap_endpoint();
  c(p == QuadraticSurd(22) / (QuadraticSurd(65) + QuadraticSurd(9) * QuadraticSurd::parse("sqrt(3)")),
    "Perron endpoint is 22/(65+9sqrt3)");
  c(p < inverse_sqrt(13), "22/(65+9sqrt3) < 1/sqrt13");
  // squaring oracle: 22² · 13 < (65 + 9√3)², i.e. 6292 < 4468 + 1170√3
  c(QuadraticSurd(6292 - 4468) < QuadraticSurd(1170) * QuadraticSurd::parse("sqrt(3)"), "squared comparison");
}

void properties(Check& c) {
  oracle::Gen g(2024);
  std::string note;

  // (a) involutions on 10⁴ solutions over 20 random equations with planted seeds
  int steps = 0;
  std::vector<std::pair<Equation, Triple>> seeded;
  while (seeded.size() < 20) {
    Equation eq{g.sign(), g.sign(), BigInt(g.range(1, 5)), BigInt(g.range(-5, 5)), 0};
    BigInt m1 = g.range(1, 12), m2 = g.range(1, 12);
    BigInt Q = eq.eps2 * eq.dK * m1 * m2 - eq.eps2 * m1 * m1 - eq.eps1 * m2 * m2;
    long q = std::labs(Q.get_si());
    if (q == 0) continue;
    std::vector<long> divs;
    for (long d = 1; d <= q; ++d)
      if (q % d == 0) divs.push_back(d);
    BigInt m = divs[static_cast<std::size_t>(g.range(0, static_cast<long>(divs.size()) - 1))];
    eq.u = (eq.a + 1) * m1 * m2 - m + Q / m;
    seeded.push_back({eq, {m, m1, m2}});
  }
  for (const auto& [eq, seed] : seeded) {
    Triple cur = seed;
    for (int i = 0; i < 500; ++i) {
      int w = static_cast<int>(g.range(0, 2));
      Triple next = apply_involution(eq, cur, involution_from_letter("XYZ"[w]));
      c(next == vieta(eq, cur, w) && satisfies(eq, next), "(a) image solves " + eq.to_string());
      c(apply_involution(eq, next, involution_from_letter("XYZ"[w])) == cur, "(a) involutive");
      Triple n = apply_involution(eq, cur, Involution::N);
      c(satisfies(eq, n) && apply_involution(eq, n, Involution::N) == cur, "(a) N");
      if (eq.eps1 == eq.eps2) {
        Triple p = apply_involution(eq, cur, Involution::P);
        c(satisfies(eq, p) && apply_involution(eq, p, Involution::P) == cur, "(a) P");
      }
      ++steps;
      cur = g.range(0, 9) == 0 ? seed : next;
    }
  }
  c(steps == 10000, "(a) 10^4 steps");

  // (b) descent
  int descents = 0;
  for (const auto& [eq, seed] : seeded) {
    Triple cur = seed;
    for (int i = 0; i < 100; ++i) {
      cur = vieta(eq, cur, static_cast<int>(g.range(0, 2)));
      if (height(cur) > 1000000000) cur = seed;
      if (!cur.positive()) continue;
      DescentReport d = descend(eq, cur);
      bool strict = d.heights.size() == d.path.size() + 1;
      for (std::size_t k = 1; strict && k < d.heights.size(); ++k) strict = d.heights[k] < d.heights[k - 1];
      c(strict, "(b) strict descent from " + str(cur));
      for (int w = 0; w < 3; ++w) {
        Triple v = vieta(eq, d.terminal, w);
        c(!(v.positive() && height(v) < height(d.terminal)), "(b) terminal is irreducible");
      }
      ++descents;
    }
  }

  // (c) gcd identity
  int gcd_all = 0, gcd_carried = 0;
  for (const char* lit : {"++,2,0,0", "++,2,0,-2", "++,3,0,1"})
    for (const auto& e : enumerate_forest(E(lit), 5000).entries) {
      const Triple& t = e.triple;
      c(gcd(t.m1, t.m2) == gcd(t.m2, t.m) && gcd(t.m2, t.m) == gcd(t.m, t.m1), std::string("(c) ") + lit + " " + str(t));
      ++gcd_all;
    }
  for (const char* lit : {"++,2,2,0", "++,3,-1,0", "++,2,-2,0", "+-,2,1,0", "-+,2,1,0", "++,2,0,-12"}) {
    Equation eq = E(lit);
    for (const auto& e : enumerate_forest(eq, 2000).entries) {
      const Triple& t = e.triple;
      bool carried = false;
      for (const auto& d : reconstruct_all(t.m, t.m1, t.m2, eq.eps1, eq.eps2))
        if (d.equation(eq.a) == eq) carried = true;
      if (!carried) continue;
      BigInt g12 = gcd(t.m1, t.m2);
      c(g12 == gcd(t.m2, t.m) && g12 == gcd(t.m, t.m1) && eq.u % g12 == 0, std::string("(c) ") + lit + " " + str(t));
      ++gcd_carried;
    }
  }

  // (d) φ multiplicativity and invariances
  for (int i = 0; i < 2000; ++i) {
    PhiForm f{BigInt(g.range(-20, 20)), g.sign()};
    BigInt z1 = g.range(-9, 9), y1 = g.range(-9, 9), z2 = g.range(-9, 9), y2 = g.range(-9, 9);
    auto phi = [&](const BigInt& z, const BigInt& y) -> BigInt { return z * z + f.B * z * y - f.eps * y * y; };
    c(phi(z1, y1) * phi(z2, y2) == phi(z1 * z2 + f.eps * y1 * y2, y1 * z2 + z1 * y2 + f.B * y1 * y2),
      "(d) multiplicativity oracle");
    c(phi_multiplicativity_check(f, z1, y1, z2, y2), "(d) multiplicativity");
    c(phi_invariance_failures(f, z1, y1).empty(), "(d) invariances");
  }

  // (e) Dedekind reciprocity
  int pairs = 0;
  for (long k = 2; k <= 200; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      c(dedekind_sum(h, k) + dedekind_sum(k, h) == oracle::reciprocity(h, k), "(e) reciprocity");
      ++pairs;
    }
  for (long k = 2; k <= 30; ++k)
    for (long h = 1; h < k; ++h) c(dedekind_sum(h, k) == oracle::dedekind_naive(h, k), "(e) naive sum");

  // (f) ternary bijection on all reduced words of length ≤ 10 under the 12 dihedral prefixes
  std::map<std::string, int> seen;
  std::vector<std::string> words{""}, level{""};
  for (int len = 1; len <= 10; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char ch : {'X', 'Y', 'Z'})
        if (w.empty() || w.back() != ch) next.push_back(w + ch);
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  for (int h = 0; h < 2; ++h)
    for (int k = 0; k < 6; ++k) {
      Mat2 prefix = pow(pi_o(), static_cast<unsigned>(h)) * pow(pi_t(), static_cast<unsigned>(k));
      for (const auto& w : words) {
        Mat2 v = prefix;
        for (char ch : w) v = v * letter_matrix(ch);
        TernaryDecomp d = ternary_decompose(v);
        c(d.h == h && d.k == k && d.word == w && recompose(d) == v, "(f) round trip " + w);
        c(seen.emplace(v.to_string(), 0).second, "(f) injective");
      }
    }

  // (g) constructions
  int built = 0;
  for (int i = 0; i < 500; ++i) {
    Sequence X2(static_cast<std::size_t>(g.range(0, 4))), T(static_cast<std::size_t>(g.range(0, 4)));
    for (auto& x : X2) x = g.range(1, 3);
    for (auto& x : T) x = g.range(1, 3);
    BigInt cc = g.range(1, 4);
    if (X2.empty() && T.empty() && cc == 1) continue;
    Decomposition d = from_parts(X2, cc, T, cc);
    const Equation src = d.equation(cc);
    for (ConstructionKind kind : {ConstructionKind::G, ConstructionKind::DD, ConstructionKind::GD}) {
      ConstructionResult r = construct(kind, d);
      Equation want = src;
      if (kind == ConstructionKind::G) want = {src.eps2, src.eps1, cc, src.dK, src.eps1 * src.eps2 * src.u};
      if (kind == ConstructionKind::DD) want = {src.eps1, src.eps2, cc, src.eps2 * src.dK, src.eps2 * src.u};
      if (kind == ConstructionKind::GD) want = {src.eps2, src.eps1, cc, src.eps2 * src.dK, src.eps1 * src.u};
      Triple t = r.result.triple();
      c(r.target_equation == want && satisfies(want, t), "(g) mapped equation");
      c(t.m > t.m1 && t.m1 > t.m2 && is_cohn_triple(t), "(g) Cohn triple " + str(t));
      ++built;
    }
  }

  c.note = "a " + std::to_string(steps) + " steps, b " + std::to_string(descents) + " descents, c " +
           std::to_string(gcd_all) + " enumerated + " + std::to_string(gcd_carried) + " sequence-carried, e " +
           std::to_string(pairs) + " pairs, f " + std::to_string(seen.size()) + " elements, g " +
           std::to_string(built) + " constructions";
}

void torus(Check& c) {
  auto k = reduce_triple(parse_exact_triple("6,3,3"));
  c(k.triple.x == QuadraticSurd(3) && k.triple.y == QuadraticSurd(3) && k.triple.z == QuadraticSurd(3),
    "(6,3,3) -> (3,3,3)");

  QuadraticSurd h = QuadraticSurd::parse("sqrt(2)/2");
  auto s = super_reduce(parabolic_params(parse_exact_triple("2sqrt(2),2sqrt(2),4")));
  c(parabolic_params(parse_exact_triple("2sqrt(2),2sqrt(2),4")).lambda == h, "Hecke lambda sqrt2/2");
  c(s.lambda == QuadraticSurd(1) && s.mu == QuadraticSurd::parse("sqrt(2)"), "Hecke -> (1, sqrt2)");
  c(s.module == QuadraticSurd(2), "Hecke module 2");

  // 10³ parabolic triples: the scaled Markoff tree seeds orbits of random (λ, μ) tori walked by the trace moves
  oracle::Gen g(88);
  int parabolic = 0;
  for (const auto& t : oracle::markoff_tree(2000)) {
    if (parabolic >= 200) break;
    ExactTraceTriple e{QuadraticSurd(long(3 * t[0])), QuadraticSurd(long(3 * t[1])), QuadraticSurd(long(3 * t[2]))};
    auto r = super_reduce(parabolic_params(e));
    c(r.module == QuadraticSurd(1), "scaled Markoff triple has module 1");
    ++parabolic;
  }
  while (parabolic < 1000) {
    QuadraticSurd l(oracle::q(g.range(1, 40), g.range(1, 12))), m(oracle::q(g.range(1, 40), g.range(1, 12)));
    ExactTraceTriple t = parabolic_triple(l, m);
    QuadraticSurd first;
    for (int step = 0; step < 4 && parabolic < 1000; ++step) {
      c(sigma(t) == QuadraticSurd(0), "sigma = 0");
      auto r = super_reduce(parabolic_params(t));
      c(r.module >= QuadraticSurd(1) && r.module <= QuadraticSurd(2), "module in [1,2]");
      c(is_super_reduced(r.lambda, r.mu), "super-reduced");
      if (step == 0) first = r.module;
      c(r.module == first, "module constant along the orbit");
      ++parabolic;
      int w = static_cast<int>(g.range(0, 2));
      if (w == 0) t.x = t.y * t.z - t.x;
      if (w == 1) t.y = t.x * t.z - t.y;
      if (w == 2) t.z = t.x * t.y - t.z;
    }
  }

  // (FR*) at 64 digits
  const Real bound = tiny(20);
  Real worst = R(0);
  ConeFR ex = cone_FR({R(13), R(40), R(520)}, 1, {Real::kDefaultDigits, true});
  c(abs(ex.residual) < bound, "FR residual on the hyperbolic example");
  worst = max(worst, abs(ex.residual));
  for (int i = 0; i < 100; ++i) {
    QuadraticSurd l(oracle::q(g.range(1, 30), g.range(1, 10))), m(oracle::q(g.range(1, 30), g.range(1, 10)));
    RealTraceTriple t = to_real(parabolic_triple(l, m), kBits);
    for (int eps : {1, -1}) {
      ConeFR f = cone_FR(t, eps);
      c(abs(f.residual) < bound, "FR residual on a parabolic triple");
      worst = max(worst, abs(f.residual));
    }
  }

  // ε-flip on 100 hyperbolic samples
  int flips = 0;
  while (flips < 100) {
    auto rp = [&] { return Real(oracle::q(g.range(1, 400), g.range(40, 200)), kBits); };
    TorusParams p{rp(), rp(), rp(), 1};
    auto [A, B] = matrices_from_params(p);
    RealTraceTriple t = traces_of(A, B);
    if (classify(t, 64) != TorusKind::hyperbolic) continue;
    TorusParams plus = params_from_traces(t, 1), minus = params_from_traces({t.y, t.x, t.z}, -1);
    c(close(plus.lambda, minus.mu, 20) && close(plus.mu, minus.lambda, 20) &&
          close(plus.theta, R(1) / minus.theta, 20),
      "epsilon flip");
    ++flips;
  }

  HyperbolicAudit a = hyperbolic_example_audit();
  c(a.all_match(), "hyperbolic audit");
  int exact = 0;
  std::string info;
  for (const auto& item : a.items) {
    if (item.informational) {
      info += (info.empty() ? "" : ",") + item.name;
      continue;
    }
    c(item.match, "audit item " + item.name);
    ++exact;
  }
  c.note = std::to_string(parabolic) + " parabolic triples, worst FR residual " + worst.to_string(3) + ", " +
           std::to_string(exact) + " audit surds exact (fixed points " + info + " reported separately)";
}

void section_cubic(Check& c) {
  Equation eq = E("++,2,0,-2");
  LinearRelation rel{2, 5, 1};
  Cubic cub = plane_section_cubic(eq, {73, 8, 3}, rel);
  const std::map<std::pair<int, int>, long> want{{{1, 2}, 30}, {{2, 0}, -4}, {{1, 1}, 6}, {{0, 2}, -29},
                                                 {{1, 0}, 8},  {{0, 1}, -10}, {{0, 0}, -1}};
  std::map<std::pair<int, int>, long> got;
  for (const auto& m : cub.terms) got[{m.x, m.z}] = m.coeff.get_si();
  c(got == want, "coefficients 30,-4,6,-29,8,-10,-1, got " + cub.to_string());
  c(cub.evaluate(73, 3) == 0, "vanishes at (73,3)");
  // independent evaluation from the substitution y = (5z + 1)/2, times 4
  auto direct = [&](const BigInt& x, const BigInt& z) -> BigInt {
    BigInt y2 = 5 * z + 1;
    return 4 * x * x + y2 * y2 + 4 * z * z - 6 * x * y2 * z - 8 * x;
  };
  for (long x = -20; x <= 20; ++x)
    for (long z = -20; z <= 20; ++z) c(cub.evaluate(x, z) == -direct(x, z) || cub.evaluate(x, z) == direct(x, z), "direct substitution");
  auto pts = cubic_integer_points(cub, 500);
  bool has_seed = false;
  for (const auto& [x, z] : pts) {
    c(cub.evaluate(x, z) == 0, "scan point lies on the cubic");
    auto y = lift_point(eq, rel, x, z);
    c(y.has_value(), "point (" + x.get_str() + "," + z.get_str() + ") lifts");
    if (y) c(is_solution(eq, {x, *y, z}) && 2 * *y == 5 * z + 1, "lift solves the surface");
    if (x == 73 && z == 3) has_seed = true;
  }
  c(has_seed, "scan finds (73,3)");
  c.note = std::to_string(pts.size()) + " integer points";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "golden values", 1, goldens);
  ok &= criterion(2, "solvability scan for s in 1..50", 10, solvability);
  ok &= criterion(3, "classical forest equals the Markoff tree", 30, classical_tree);
  ok &= criterion(4, "two orbits of ++,2,0,-2 at bound 1000", 10, two_orbits);
  ok &= criterion(5, "spectrum constants and accumulation at 1/3", 10, constants);
  ok &= criterion(6, "gap audit", 0, gaps);
  ok &= criterion(7, "property suites (a)-(g)", 0, properties);
  ok &= criterion(8, "torus suite", 0, torus);
  ok &= criterion(9, "section cubic", 0, section_cubic);
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 1;
}
