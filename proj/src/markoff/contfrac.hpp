#pragma once

#include <string>
#include <vector>

#include "markoff/exact.hpp"
#include "markoff/mat2.hpp"

namespace markoff {

using Sequence = std::vector<BigInt>;

// M_S = [[m, K1], [m - K2, K1 - l]] with eps = det M_S.
struct SeqMatrix {
  Mat2 M;
  BigInt m, K1, K2, l;
  int eps = 1;
};

void validate(const Sequence& s);
Sequence parse_sequence(const std::string& text);
std::string format_sequence(const Sequence& s);
Sequence concat(const Sequence& a, const Sequence& b);
Sequence concat(std::initializer_list<Sequence> parts);

SeqMatrix matrix_of(const Sequence& s);
Sequence mirror(const Sequence& s);
// ◁S; throws on the empty sequence.
Sequence left_extend(const Sequence& s);
// S▷ = (◁S*)*
Sequence right_extend(const Sequence& s);
Rational eval(const Sequence& s);

// Regular expansion of p/q > 0; empty when q = 0.
Sequence cf_expand(const BigInt& p, const BigInt& q);
// Expansion of p/q whose matrix has determinant eps; false when none exists.
bool cf_with_determinant(const BigInt& p, const BigInt& q, int eps, Sequence& out);

// [0; period, period, ...] as the root in (0, 1).
QuadraticSurd periodic_surd(const Sequence& period);
QuadraticSurd periodic_surd_conjugate(const Sequence& period);

struct SurdExpansion {
  Sequence preperiod;
  Sequence period;
};
// Regular continued fraction of x; the period is empty for rationals.
SurdExpansion expand(const QuadraticSurd& x);

// Minus-sign expansion [[b0, b1, ...]] = b0 - 1/(b1 - 1/(...)) of [S, tail].
std::vector<BigInt> to_reduced_cf(const Sequence& s, const BigInt& tail);
Rational eval_reduced(const std::vector<BigInt>& b);
// [S, tail] with the tail as last partial quotient.
Rational eval_with_tail(const Sequence& s, const BigInt& tail);

}  // namespace markoff
