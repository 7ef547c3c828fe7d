#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "markoff/exact.hpp"

namespace markoff {

// M^{s1s2}(a, dK, u): m² + ε₂m₁² + ε₁m₂² = (a+1)m m₁ m₂ + ε₂∂K m₁m₂ − u m
struct Equation {
  int eps1 = 1;
  int eps2 = 1;
  BigInt a = 2;
  BigInt dK = 0;
  BigInt u = 0;

  // "s1s2,a,dK,u", e.g. "++,2,0,-2"
  static Equation parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const Equation&, const Equation&) = default;
};

struct Triple {
  BigInt m, m1, m2;

  static Triple parse(const std::string& text);
  std::string to_string() const;
  bool positive() const { return m >= 1 && m1 >= 1 && m2 >= 1; }
  friend bool operator==(const Triple& x, const Triple& y) {
    return x.m == y.m && x.m1 == y.m1 && x.m2 == y.m2;
  }
  friend bool operator<(const Triple& x, const Triple& y);
};

enum class Involution { N, X, Y, Z, P };
char involution_letter(Involution w);
Involution involution_from_letter(char c);

bool is_solution(const Equation& eq, const Triple& t);
Triple apply_involution(const Equation& eq, const Triple& t, Involution w);
BigInt height(const Triple& t);

enum class TripleKind { fundamental, minimal, reducible };
const char* kind_name(TripleKind k);

struct Classification {
  TripleKind kind = TripleKind::fundamental;
  Involution via = Involution::X;  // meaningful for reducible
  // Displayed minimality disjunction evaluated with m₁ ≥ m₂ after index swap.
  bool minimality_criterion = false;
};
Classification classify_triple(const Equation& eq, const Triple& t);

struct DescentReport {
  std::vector<Involution> path;
  std::vector<BigInt> heights;  // heights along the path, input first
  Triple terminal;
  TripleKind terminal_kind = TripleKind::fundamental;
};
DescentReport descend(const Equation& eq, const Triple& t);

// Integer roots of the quadratic in one coordinate (0 = m, 1 = m₁, 2 = m₂)
// with the other two taken from t.
std::vector<BigInt> solve_coordinate(const Equation& eq, const Triple& t, int position);

enum class Symmetry { none, swap12, full };
// Largest coordinate permutation group preserving the equation.
Symmetry symmetry_of(const Equation& eq);
Triple canonical_representative(const Triple& t, Symmetry s);

struct ForestEntry {
  Triple triple;
  std::size_t orbit = 0;
  BigInt height;
  TripleKind kind = TripleKind::fundamental;
};

struct Orbit {
  std::size_t id = 0;
  Triple terminal;
  TripleKind kind = TripleKind::fundamental;
  std::size_t size = 0;
  bool cycle = false;  // the bouquet is not a tree within the bound
};

// Members (−u, k, k) of M^{−−}(a, 2 − (a+1)u, u), each fundamental.
struct InfiniteFamily {
  BigInt m;
  std::string description;
};

struct Forest {
  std::vector<ForestEntry> entries;
  std::vector<Orbit> orbits;
  std::optional<InfiniteFamily> family;
};

struct ForestOptions {
  unsigned threads = 1;
  Symmetry reduce = Symmetry::none;
  bool include_negated = false;
};

// All positive solutions of height at most bound, grouped into bouquets.
Forest enumerate_forest(const Equation& eq, const BigInt& bound, const ForestOptions& opts = {});
std::optional<InfiniteFamily> infinite_family(const Equation& eq);

struct Solvability {
  BigInt s;
  bool solvable = false;
  Triple witness;
  BigInt candidates;  // (m, m₂) pairs examined
};
// x² + y² + z² = 3xyz + sx over 0 < m < s, 0 < m₂, m₂² ≤ (s − m)m.
Solvability solvability_scan_2_0_u(const BigInt& s);

struct Divisibility {
  BigInt mu;
  BigInt remainder;
  bool holds = false;
  bool determines_u = false;  // m + ε₂μ = (a+1)m₁m₂ − u
};
Divisibility divisibility_form(const Equation& eq, const Triple& t);

enum class EquationClass { pointed, degenerate, regular };
const char* class_name(EquationClass c);
struct EquationClassification {
  EquationClass kind = EquationClass::regular;
  BigInt delta0;
};
EquationClassification classify_equation(const Equation& eq);

// Same triple, parameter a replaced by b.
Equation reparametrize(const Equation& eq, const Triple& t, const BigInt& b);

// p·m₁ = q·m₂ + r
struct LinearRelation {
  BigInt p, q, r;
};

struct Monomial {
  BigInt coeff;
  int x = 0;
  int z = 0;
};

struct Cubic {
  std::vector<Monomial> terms;  // total degree then x-degree, descending
  BigInt evaluate(const BigInt& x, const BigInt& z) const;
  std::string to_string() const;
};

Cubic plane_section_cubic(const Equation& eq, const Triple& t, const LinearRelation& rel);
// Integer zeros with |x|, |z| ≤ radius.
std::vector<std::pair<BigInt, BigInt>> cubic_integer_points(const Cubic& c, long radius);
// y with p·y = q·z + r solving the equation at (x, y, z), if integral.
std::optional<BigInt> lift_point(const Equation& eq, const LinearRelation& rel, const BigInt& x,
                                 const BigInt& z);

}  // namespace markoff
