#include "markoff/equations.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace markoff {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int sign_char(char c) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw ParseError(std::string("expected '+' or '-' in sign pattern, got '") + c + "'");
}

// Integer roots of A x² + B x + C with A ≠ 0 or B ≠ 0.
std::vector<BigInt> integer_roots(const BigInt& A, const BigInt& B, const BigInt& C) {
  std::vector<BigInt> out;
  if (A == 0) {
    if (B != 0 && C % B == 0) out.push_back(-C / B);
    return out;
  }
  BigInt disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  BigInt r = isqrt(disc);
  if (r * r != disc) return out;
  BigInt den = 2 * A;
  for (const BigInt& num : {BigInt(-B + r), BigInt(-B - r)}) {
    if (num % den == 0) {
      BigInt x = num / den;
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_solution(const Equation& eq, const Triple& t) {
  if (!is_solution(eq, t)) throw DomainError(t.to_string() + " does not solve " + eq.to_string());
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool height_less(const Triple& x, const Triple& y) {
  BigInt hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  return x < y;
}

}  // namespace

Equation Equation::parse(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 4 || parts[0].size() != 2)
    throw ParseError("equation literal must look like \"++,a,dK,u\": " + text);
  Equation eq;
  eq.eps1 = sign_char(parts[0][0]);
  eq.eps2 = sign_char(parts[0][1]);
  eq.a = parse_bigint(parts[1]);
  eq.dK = parse_bigint(parts[2]);
  eq.u = parse_bigint(parts[3]);
  if (eq.a < 1) throw DomainError("equation parameter a must be at least 1");
  return eq;
}

std::string Equation::to_string() const {
  std::string s = "M^{";
  s += eps1 > 0 ? '+' : '-';
  s += eps2 > 0 ? '+' : '-';
  return s + "}(" + a.get_str() + "," + dK.get_str() + "," + u.get_str() + ")";
}

Triple Triple::parse(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 3) throw ParseError("triple literal needs three integers: " + text);
  return {parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
}

std::string Triple::to_string() const {
  return "(" + m.get_str() + "," + m1.get_str() + "," + m2.get_str() + ")";
}

bool operator<(const Triple& x, const Triple& y) {
  if (x.m != y.m) return x.m < y.m;
  if (x.m1 != y.m1) return x.m1 < y.m1;
  return x.m2 < y.m2;
}

char involution_letter(Involution w) {
  switch (w) {
    case Involution::N: return 'N';
    case Involution::X: return 'X';
    case Involution::Y: return 'Y';
    case Involution::Z: return 'Z';
    case Involution::P: return 'P';
  }
  return '?';
}

Involution involution_from_letter(char c) {
  switch (c) {
    case 'N': return Involution::N;
    case 'X': return Involution::X;
    case 'Y': return Involution::Y;
    case 'Z': return Involution::Z;
    case 'P': return Involution::P;
    default: throw ParseError(std::string("unknown involution '") + c + "'");
  }
}

bool is_solution(const Equation& eq, const Triple& t) {
  BigInt lhs = t.m * t.m + eq.eps2 * t.m1 * t.m1 + eq.eps1 * t.m2 * t.m2;
  BigInt rhs = (eq.a + 1) * t.m * t.m1 * t.m2 + eq.eps2 * eq.dK * t.m1 * t.m2 - eq.u * t.m;
  return lhs == rhs;
}

Triple apply_involution(const Equation& eq, const Triple& t, Involution w) {
  switch (w) {
    case Involution::N:
      return {t.m, -t.m1, -t.m2};
    case Involution::X:
      return {(eq.a + 1) * t.m1 * t.m2 - t.m - eq.u, t.m1, t.m2};
    case Involution::Y:
      return {t.m, eq.eps2 * ((eq.a + 1) * t.m * t.m2 + eq.eps2 * eq.dK * t.m2) - t.m1, t.m2};
    case Involution::Z:
      return {t.m, t.m1, eq.eps1 * ((eq.a + 1) * t.m * t.m1 + eq.eps2 * eq.dK * t.m1) - t.m2};
    case Involution::P:
      if (eq.eps1 != eq.eps2) throw DomainError("P is an involution only when eps1 = eps2");
      return {t.m, t.m2, t.m1};
  }
  throw DomainError("unknown involution");
}

BigInt height(const Triple& t) {
  BigInt h = markoff::abs(t.m);
  if (markoff::abs(t.m1) > h) h = markoff::abs(t.m1);
  if (markoff::abs(t.m2) > h) h = markoff::abs(t.m2);
  return h;
}

const char* kind_name(TripleKind k) {
  switch (k) {
    case TripleKind::fundamental: return "fundamental";
    case TripleKind::minimal: return "minimal";
    case TripleKind::reducible: return "reducible";
  }
  return "?";
}

Classification classify_triple(const Equation& eq, const Triple& t) {
  require_solution(eq, t);
  Classification out;
  BigInt h = height(t);
  bool lowers = false;
  bool found = false;
  for (Involution w : {Involution::X, Involution::Y, Involution::Z}) {
    Triple s = apply_involution(eq, t, w);
    if (height(s) < h) {
      lowers = true;
      if (s.positive() && !found) {
        out.kind = TripleKind::reducible;
        out.via = w;
        found = true;
      }
    }
  }
  if (!found) out.kind = lowers ? TripleKind::minimal : TripleKind::fundamental;

  BigInt m1 = t.m1, m2 = t.m2;
  int e1 = eq.eps1, e2 = eq.eps2;
  if (m1 < m2) {
    std::swap(m1, m2);
    std::swap(e1, e2);
  }
  BigInt first = e2 * m1 * m1 + e1 * m2 * m2 - e2 * eq.dK * m1 * m2;
  BigInt second = e2 * t.m * t.m + e1 * e2 * m2 * m2 + e2 * eq.u * t.m;
  out.minimality_criterion = first <= 0 || second <= 0;
  return out;
}

DescentReport descend(const Equation& eq, const Triple& t) {
  if (!t.positive()) throw DomainError("descent requires a positive triple");
  DescentReport rep;
  Triple cur = t;
  rep.heights.push_back(height(cur));
  while (true) {
    Classification c = classify_triple(eq, cur);
    if (c.kind != TripleKind::reducible) {
      rep.terminal = cur;
      rep.terminal_kind = c.kind;
      return rep;
    }
    cur = apply_involution(eq, cur, c.via);
    rep.path.push_back(c.via);
    rep.heights.push_back(height(cur));
  }
}

std::vector<BigInt> solve_coordinate(const Equation& eq, const Triple& t, int position) {
  const BigInt a1 = eq.a + 1;
  switch (position) {
    case 0:
      return integer_roots(1, -(a1 * t.m1 * t.m2 - eq.u),
                           eq.eps2 * t.m1 * t.m1 + eq.eps1 * t.m2 * t.m2 - eq.eps2 * eq.dK * t.m1 * t.m2);
    case 1:
      return integer_roots(eq.eps2, -(a1 * t.m * t.m2 + eq.eps2 * eq.dK * t.m2),
                           t.m * t.m + eq.eps1 * t.m2 * t.m2 + eq.u * t.m);
    case 2:
      return integer_roots(eq.eps1, -(a1 * t.m * t.m1 + eq.eps2 * eq.dK * t.m1),
                           t.m * t.m + eq.eps2 * t.m1 * t.m1 + eq.u * t.m);
    default:
      throw DomainError("coordinate position must be 0, 1 or 2");
  }
}

Symmetry symmetry_of(const Equation& eq) {
  if (eq.eps1 == 1 && eq.eps2 == 1 && eq.dK == 0 && eq.u == 0) return Symmetry::full;
  if (eq.eps1 == eq.eps2) return Symmetry::swap12;
  return Symmetry::none;
}

Triple canonical_representative(const Triple& t, Symmetry s) {
  if (s == Symmetry::none) return t;
  if (s == Symmetry::swap12) return t.m1 >= t.m2 ? t : Triple{t.m, t.m2, t.m1};
  std::vector<BigInt> v{t.m, t.m1, t.m2};
  std::sort(v.begin(), v.end(), [](const BigInt& x, const BigInt& y) { return x > y; });
  return {v[0], v[1], v[2]};
}

std::optional<InfiniteFamily> infinite_family(const Equation& eq) {
  if (eq.eps1 != -1 || eq.eps2 != -1 || eq.u >= 0) return std::nullopt;
  if (eq.dK != 2 - (eq.a + 1) * eq.u) return std::nullopt;
  InfiniteFamily f;
  f.m = -eq.u;
  f.description = "(" + f.m.get_str() + ",k,k) for every k >= 1, each fixed by Y and Z, fundamental once (a+1)k^2 >= " +
                  f.m.get_str();
  return f;
}

Forest enumerate_forest(const Equation& eq, const BigInt& bound, const ForestOptions& opts) {
  Forest forest;
  forest.family = infinite_family(eq);
  if (bound < 1) return forest;

  // Any solution with max coordinate h ≤ B has (a+1)·(product of the other two) ≤ (3+|∂K|)B + |u|.
  BigInt pmax = ((3 + markoff::abs(eq.dK)) * bound + markoff::abs(eq.u)) / (eq.a + 1);
  if (pmax > bound * bound) pmax = bound * bound;
  BigInt plimit = pmax < bound ? pmax : bound;
  if (!plimit.fits_ulong_p()) throw DomainError("height bound too large for enumeration");
  unsigned long pl = plimit.get_ui();

  unsigned nthreads = std::max(1U, opts.threads);
  std::vector<std::set<Triple>> partial(nthreads);
  auto worker = [&](unsigned id) {
    auto& out = partial[id];
    for (unsigned long p = 1 + id; p <= pl; p += nthreads) {
      BigInt P = p;
      BigInt qmax = pmax / P;
      if (qmax > bound) qmax = bound;
      for (BigInt q = 1; q <= qmax; ++q) {
        for (const auto& x : solve_coordinate(eq, {0, P, q}, 0))
          if (x >= 1 && x <= bound) out.insert({x, P, q});
        for (const auto& x : solve_coordinate(eq, {P, 0, q}, 1))
          if (x >= 1 && x <= bound) out.insert({P, x, q});
        for (const auto& x : solve_coordinate(eq, {P, q, 0}, 2))
          if (x >= 1 && x <= bound) out.insert({P, q, x});
      }
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  std::set<Triple> all;
  for (auto& s : partial) all.insert(s.begin(), s.end());

  std::vector<Triple> triples(all.begin(), all.end());
  std::sort(triples.begin(), triples.end(), height_less);
  std::map<Triple, std::size_t> index;
  for (std::size_t i = 0; i < triples.size(); ++i) index.emplace(triples[i], i);

  std::size_t n = triples.size();
  std::vector<TripleKind> kind(n);
  std::vector<std::size_t> terminal(n);
  UnionFind uf(n);
  std::vector<std::size_t> directed_edges(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Classification c = classify_triple(eq, triples[i]);
    kind[i] = c.kind;
    if (c.kind == TripleKind::reducible) {
      terminal[i] = terminal[index.at(apply_involution(eq, triples[i], c.via))];
    } else {
      terminal[i] = i;
    }
    for (Involution w : {Involution::X, Involution::Y, Involution::Z}) {
      Triple s = apply_involution(eq, triples[i], w);
      if (s == triples[i]) continue;
      auto it = index.find(s);
      if (it == index.end()) continue;
      uf.unite(i, it->second);
      ++directed_edges[i];
    }
  }

  std::map<std::size_t, std::size_t> vertices, edges, rep_terminal;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    ++vertices[r];
    edges[r] += directed_edges[i];
    auto it = rep_terminal.find(r);
    std::size_t t = terminal[i];
    if (it == rep_terminal.end() || height_less(triples[t], triples[it->second])) rep_terminal[r] = t;
  }
  std::vector<std::size_t> roots;
  for (const auto& [r, v] : vertices) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), [&](std::size_t x, std::size_t y) {
    return height_less(triples[rep_terminal[x]], triples[rep_terminal[y]]);
  });

  Symmetry sym = opts.reduce;
  std::map<std::size_t, std::size_t> orbit_of_root;
  std::vector<Orbit> orbits;
  for (std::size_t r : roots) {
    Orbit o;
    o.terminal = triples[rep_terminal[r]];
    o.kind = kind[rep_terminal[r]];
    o.cycle = edges[r] / 2 >= vertices[r];
    orbit_of_root[r] = orbits.size();
    orbits.push_back(o);
  }
  std::vector<std::size_t> counts(orbits.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sym != Symmetry::none && !(canonical_representative(triples[i], sym) == triples[i])) continue;
    std::size_t o = orbit_of_root[uf.find(i)];
    ForestEntry e{triples[i], o, height(triples[i]), kind[i]};
    forest.entries.push_back(e);
    ++counts[o];
    if (opts.include_negated) {
      e.triple = apply_involution(eq, triples[i], Involution::N);
      forest.entries.push_back(e);
      ++counts[o];
    }
  }
  std::vector<std::size_t> renumber(orbits.size(), SIZE_MAX);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (counts[o] == 0) continue;
    renumber[o] = forest.orbits.size();
    orbits[o].id = forest.orbits.size();
    orbits[o].size = counts[o];
    forest.orbits.push_back(orbits[o]);
  }
  for (auto& e : forest.entries) e.orbit = renumber[e.orbit];
  return forest;
}

Solvability solvability_scan_2_0_u(const BigInt& s) {
  if (s < 1) throw DomainError("s must be at least 1");
  Solvability out;
  out.s = s;
  out.candidates = 0;
  for (BigInt m = 1; m < s; ++m) {
    BigInt box = (s - m) * m;
    for (BigInt m2 = 1; m2 * m2 <= box; ++m2) {
      ++out.candidates;
      // m₁² − 3m m₂ m₁ + (m² + m₂² − s m) = 0
      auto roots = integer_roots(1, -3 * m * m2, m * m + m2 * m2 - s * m);
      for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        if (*it > 0) {
          out.solvable = true;
          out.witness = {m, *it, m2};
          return out;
        }
      }
    }
  }
  return out;
}

Divisibility divisibility_form(const Equation& eq, const Triple& t) {
  if (t.m == 0) throw DomainError("divisibility form needs m != 0");
  Divisibility d;
  BigInt lhs = t.m1 * t.m1 - eq.dK * t.m1 * t.m2 + eq.eps1 * eq.eps2 * t.m2 * t.m2;
  d.mu = floor_div(lhs, t.m);
  d.remainder = lhs - d.mu * t.m;
  d.holds = d.remainder == 0;
  d.determines_u = d.holds && t.m + eq.eps2 * d.mu == (eq.a + 1) * t.m1 * t.m2 - eq.u;
  return d;
}

const char* class_name(EquationClass c) {
  switch (c) {
    case EquationClass::pointed: return "pointed";
    case EquationClass::degenerate: return "degenerate";
    case EquationClass::regular: return "regular";
  }
  return "?";
}

EquationClassification classify_equation(const Equation& eq) {
  EquationClassification c;
  c.delta0 = eq.dK * eq.dK - 4 * eq.eps1 * eq.eps2;
  if (c.delta0 < 0)
    c.kind = EquationClass::pointed;
  else if (is_square(c.delta0))
    c.kind = EquationClass::degenerate;
  else
    c.kind = EquationClass::regular;
  return c;
}

Equation reparametrize(const Equation& eq, const Triple& t, const BigInt& b) {
  require_solution(eq, t);
  if (b < 1) throw DomainError("parameter b must be at least 1");
  Equation out = eq;
  out.a = b;
  out.u = eq.u - (eq.a - b) * t.m1 * t.m2;
  return out;
}

BigInt Cubic::evaluate(const BigInt& x, const BigInt& z) const {
  BigInt v = 0;
  for (const auto& t : terms) {
    BigInt term = t.coeff;
    for (int i = 0; i < t.x; ++i) term *= x;
    for (int i = 0; i < t.z; ++i) term *= z;
    v += term;
  }
  return v;
}

std::string Cubic::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    BigInt c = t.coeff;
    bool neg = c < 0;
    BigInt mag = markoff::abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool has_var = t.x + t.z > 0;
    if (!has_var || mag != 1) out += mag.get_str();
    if (t.x > 0) out += t.x == 1 ? "x" : "x^" + std::to_string(t.x);
    if (t.z > 0) out += t.z == 1 ? "z" : "z^" + std::to_string(t.z);
  }
  return out.empty() ? "0" : out;
}

Cubic plane_section_cubic(const Equation& eq, const Triple& t, const LinearRelation& rel) {
  require_solution(eq, t);
  if (rel.p == 0) throw DomainError("relation needs p != 0");
  if (rel.p * t.m1 != rel.q * t.m2 + rel.r)
    throw DomainError("relation p*m1 = q*m2 + r does not hold on " + t.to_string());
  std::map<std::pair<int, int>, BigInt> poly;
  auto add = [&](int x, int z, const BigInt& c) { poly[{x, z}] += c; };
  const BigInt& p = rel.p;
  const BigInt& q = rel.q;
  const BigInt& r = rel.r;
  // p²·(RHS − LHS) with p·y = q z + r
  BigInt a1 = eq.a + 1;
  add(1, 2, a1 * p * q);
  add(1, 1, a1 * p * r);
  add(0, 2, eq.eps2 * eq.dK * p * q);
  add(0, 1, eq.eps2 * eq.dK * p * r);
  add(2, 0, -p * p);
  add(0, 2, -eq.eps2 * q * q);
  add(0, 1, -eq.eps2 * 2 * q * r);
  add(0, 0, -eq.eps2 * r * r);
  add(0, 2, -eq.eps1 * p * p);
  add(1, 0, -eq.u * p * p);
  BigInt content = 0;
  for (const auto& [k, c] : poly) content = gcd(content, c);
  Cubic cubic;
  for (const auto& [k, c] : poly) {
    if (c == 0) continue;
    cubic.terms.push_back({content == 0 ? c : BigInt(c / content), k.first, k.second});
  }
  std::sort(cubic.terms.begin(), cubic.terms.end(), [](const Monomial& u, const Monomial& v) {
    if (u.x + u.z != v.x + v.z) return u.x + u.z > v.x + v.z;
    return u.x > v.x;
  });
  return cubic;
}

std::vector<std::pair<BigInt, BigInt>> cubic_integer_points(const Cubic& c, long radius) {
  std::vector<std::pair<BigInt, BigInt>> out;
  bool fast = radius <= 100000;
  for (const auto& t : c.terms)
    if (!t.coeff.fits_slong_p() || t.x + t.z > 3) fast = false;
  if (fast) {
    std::vector<std::tuple<__int128, int, int>> terms;
    for (const auto& t : c.terms) terms.emplace_back(t.coeff.get_si(), t.x, t.z);
    for (long x = -radius; x <= radius; ++x) {
      for (long z = -radius; z <= radius; ++z) {
        __int128 v = 0;
        for (const auto& [coef, ex, ez] : terms) {
          __int128 term = coef;
          for (int i = 0; i < ex; ++i) term *= x;
          for (int i = 0; i < ez; ++i) term *= z;
          v += term;
        }
        if (v == 0) out.emplace_back(BigInt(x), BigInt(z));
      }
    }
    return out;
  }
  for (long x = -radius; x <= radius; ++x)
    for (long z = -radius; z <= radius; ++z)
      if (c.evaluate(x, z) == 0) out.emplace_back(BigInt(x), BigInt(z));
  return out;
}

std::optional<BigInt> lift_point(const Equation& eq, const LinearRelation& rel, const BigInt& x,
                                 const BigInt& z) {
  for (const auto& y : solve_coordinate(eq, {x, 0, z}, 1))
    if (rel.p * y == rel.q * z + rel.r) return y;
  return std::nullopt;
}

}  // namespace markoff
