#pragma once

#include <string>
#include <vector>

#include "markoff/contfrac.hpp"
#include "markoff/equations.hpp"

namespace markoff {

// S* = (X1, b, X2) and, when structured, ◁X1 = (X2*, c, T).
struct Decomposition {
  Sequence X1, X2, T;
  BigInt b, c;
  bool structured = false;

  BigInt m, K1, K2, l;
  BigInt m1, k1, k12, l1;
  BigInt m2, k2, k21, l2;
  int eps1 = 1, eps2 = 1;
  BigInt t1, t2, u, dK;

  Sequence star() const;      // S*
  Sequence sequence() const;  // S
  Triple triple() const { return {m, m1, m2}; }
  // M^{s1s2}(a, ∂K, u + (a − b)m₁m₂), solved by triple().
  Equation equation(const BigInt& a) const;
};

Decomposition make_decomposition(const Sequence& X1, const BigInt& b, const Sequence& X2);
// X1 = ◁(X2*, c, T)
Decomposition from_parts(const Sequence& X2, const BigInt& c, const Sequence& T, const BigInt& b);
// Structured split of S* = mirror(S) with the longest X2.
Decomposition decompose(const Sequence& S);
// Names of displayed identities that fail; empty when all hold.
std::vector<std::string> identity_failures(const Decomposition& d);

struct Reconstruction {
  Decomposition decomposition;
  Equation equation;
};
// Every decomposition with 0 ≤ k₁ ≤ m₁, 0 ≤ k₂ ≤ m₂ solving both Bezout relations.
std::vector<Decomposition> reconstruct_all(const BigInt& m, const BigInt& m1, const BigInt& m2, int eps1,
                                           int eps2);
Reconstruction reconstruct(const BigInt& m, const BigInt& m1, const BigInt& m2, int eps1, int eps2,
                           const BigInt& a);

enum class ConstructionKind { G, DD, GD };
const char* construction_name(ConstructionKind k);
ConstructionKind construction_from_name(const std::string& name);

struct ConstructionResult {
  Decomposition source;  // equilibrated, b = c
  Equation source_equation;
  Decomposition result;
  Equation target_equation;
  bool solves = false;
  bool grows = false;
};
ConstructionResult construct(ConstructionKind kind, const Decomposition& d);

// Word acting on triples, rightmost letter first.
Triple apply_word(const Equation& eq, const Triple& t, const std::string& word);
bool is_reduced_word(const std::string& word);
std::string cohn_G(const std::string& w);
std::string cohn_D(const std::string& w);
std::vector<std::string> cohn_words(int n);
std::vector<std::string> cassels_words(int n);
bool is_cohn_triple(const Triple& t);

}  // namespace markoff
