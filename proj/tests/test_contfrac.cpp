#include <doctest.h>

#include "markoff/contfrac.hpp"
#include "oracles.hpp"

using namespace markoff;

namespace {

// a0 + 1/(a1 + 1/(...)) by backward recursion
Rational cf_value(const Sequence& s) {
  Rational x = s.back();
  for (std::size_t i = s.size() - 1; i-- > 0;) x = Rational(s[i]) + 1 / x;
  return x;
}

Sequence random_sequence(oracle::Gen& g, long max_len, long max_term) {
  Sequence s(static_cast<std::size_t>(g.range(1, max_len)));
  for (auto& a : s) a = g.range(1, max_term);
  return s;
}

}  // namespace

TEST_CASE("matrix examples") {
  CHECK(matrix_of(parse_sequence("(1,1,1,3)")).M == Mat2{11, 3, 7, 2});
  CHECK(matrix_of(parse_sequence("(3,1,2,3)")).M == Mat2{37, 11, 10, 3});
  CHECK(matrix_of({}).M == Mat2{});
  SeqMatrix sm = matrix_of(parse_sequence("(1,1,1,3)"));
  CHECK(sm.m == 11);
  CHECK(sm.K1 == 3);
  CHECK(sm.K2 == 4);
  CHECK(sm.l == 1);
  CHECK(sm.eps == 1);
}

TEST_CASE("mirror and extensions") {
  CHECK(mirror(parse_sequence("(1,1,1,3)")) == parse_sequence("(3,1,1,1)"));
  CHECK(mirror({}).empty());
  CHECK(matrix_of(parse_sequence("(1,2)")).M == matrix_of(parse_sequence("(2,1)")).M.transpose());
  CHECK(left_extend(parse_sequence("(2,1)")) == parse_sequence("(1,1,1)"));
  CHECK(left_extend(parse_sequence("(1,2)")) == parse_sequence("(3)"));
  CHECK(left_extend(parse_sequence("(1)")).empty());
  CHECK_THROWS_AS(left_extend({}), DomainError);
  CHECK(right_extend(parse_sequence("(1,2)")) == parse_sequence("(1,1,1)"));
  CHECK(eval(parse_sequence("(1,1,1)")) == Rational(3, 2));
}

TEST_CASE("evaluation examples") {
  CHECK(eval(parse_sequence("(1,1,1,3)")) == Rational(11, 7));
  CHECK(eval(parse_sequence("(3)")) == 3);
  CHECK(eval(parse_sequence("(2,1,1)")) == Rational(5, 2));
  CHECK_THROWS_AS(eval({}), DomainError);
}

TEST_CASE("parsing and formatting") {
  CHECK(format_sequence(parse_sequence(" ( 1, 2 ,3 ) ")) == "(1,2,3)");
  CHECK(parse_sequence("()").empty());
  CHECK(parse_sequence("4,5") == Sequence{4, 5});
  CHECK_THROWS_AS(parse_sequence("(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_sequence("(1,x)"), ParseError);
  CHECK_THROWS_AS(parse_sequence("(1,2"), ParseError);
}

TEST_CASE("periodic surd examples") {
  CHECK(periodic_surd({1}) == QuadraticSurd(-1, 1, 2, 5));
  CHECK(periodic_surd({2}) == QuadraticSurd(-1, 1, 1, 2));
  QuadraticSurd x = periodic_surd({1, 1, 2});
  // x = [0; 1, 1, 2, x...] means x = 1/(1 + 1/(1 + 1/(2 + x)))
  CHECK(x == QuadraticSurd(1) / (QuadraticSurd(1) + QuadraticSurd(1) / (QuadraticSurd(1) + QuadraticSurd(1) / (QuadraticSurd(2) + x))));
  CHECK_THROWS_AS(periodic_surd({}), DomainError);
}

TEST_CASE("expansion of surds") {
  SurdExpansion e = expand(QuadraticSurd(0, 1, 1, 7));
  CHECK(e.preperiod == Sequence{2});
  CHECK(e.period == Sequence{1, 1, 1, 4});
  SurdExpansion s = expand(QuadraticSurd(4363, 1, 1658, 3122285));
  CHECK(s.preperiod == Sequence{3});
  CHECK(s.period == Sequence{1, 2, 3, 3, 3, 3, 2, 1});
  SurdExpansion r = expand(QuadraticSurd(Rational(-7, 3)));
  CHECK(r.preperiod == Sequence{-3, 1, 2});
  CHECK(r.period.empty());
}

TEST_CASE("reduced conversion examples") {
  for (long z : {1L, 5L, 9L}) {
    CHECK(to_reduced_cf({2, 3}, z) == std::vector<BigInt>{3, 2, 2, BigInt(z + 1)});
    CHECK(to_reduced_cf({1, 1}, z) == std::vector<BigInt>{2, BigInt(z + 1)});
  }
  CHECK(to_reduced_cf({4, 1}, 7) == std::vector<BigInt>{5, 8});
  CHECK(eval_reduced({3, 2, 2, 6}) == eval_with_tail({2, 3}, 5));
  CHECK_THROWS_AS(to_reduced_cf({2}, 3), DomainError);
}

TEST_CASE("determinant-prescribed expansions") {
  Sequence s;
  REQUIRE(cf_with_determinant(8, 5, 1, s));
  CHECK(eval(s) == Rational(8, 5));
  CHECK(matrix_of(s).eps == 1);
  REQUIRE(cf_with_determinant(8, 5, -1, s));
  CHECK(eval(s) == Rational(8, 5));
  CHECK(matrix_of(s).eps == -1);
  CHECK_FALSE(cf_with_determinant(1, 1, 1, s));
  CHECK(cf_with_determinant(1, 0, 1, s));
  CHECK(s.empty());
}

TEST_CASE("property: matrix laws on random sequences") {
  oracle::Gen g(21);
  for (int i = 0; i < 500; ++i) {
    Sequence s = random_sequence(g, 9, 6), t = random_sequence(g, 9, 6);
    SeqMatrix ms = matrix_of(s);
    REQUIRE(ms.M.det() == ms.eps);
    REQUIRE(ms.eps == (s.size() % 2 == 0 ? 1 : -1));
    REQUIRE(matrix_of(concat(s, t)).M == ms.M * matrix_of(t).M);
    REQUIRE(matrix_of(mirror(s)).M == ms.M.transpose());
    REQUIRE(eval(s) == cf_value(s));
    REQUIRE(eval(s) == Rational(ms.m) / Rational(ms.m - ms.K2));
    REQUIRE(cf_expand(ms.M.a, ms.M.c).size() <= s.size());
  }
}

TEST_CASE("property: left extension is the CF identity x -> x/(x-1)") {
  oracle::Gen g(22);
  for (int i = 0; i < 500; ++i) {
    Sequence s = random_sequence(g, 8, 6);
    if (s == Sequence{1}) continue;
    Sequence e = left_extend(s);
    Rational x = eval(s);
    REQUIRE(eval(e) == x / (x - 1));
    REQUIRE(right_extend(s) == mirror(left_extend(mirror(s))));
  }
}

TEST_CASE("property: periodic surds are attracting roots in (0,1)") {
  oracle::Gen g(23);
  for (int i = 0; i < 300; ++i) {
    Sequence p = random_sequence(g, 6, 5);
    QuadraticSurd x = periodic_surd(p);
    REQUIRE(x > QuadraticSurd(0));
    REQUIRE(x < QuadraticSurd(1));
    // [0; p, x] = x
    QuadraticSurd y = x;
    for (std::size_t k = p.size(); k-- > 0;) y = QuadraticSurd(1) / (QuadraticSurd(p[k]) + y);
    REQUIRE(y == x);
    SurdExpansion e = expand(x);
    REQUIRE(e.preperiod == Sequence{0});
    REQUIRE(p.size() % e.period.size() == 0);
    for (std::size_t k = 0; k < p.size(); ++k) REQUIRE(p[k] == e.period[k % e.period.size()]);
    REQUIRE(periodic_surd_conjugate(p) < QuadraticSurd(0));
  }
}

TEST_CASE("property: reduced conversion preserves value") {
  oracle::Gen g(24);
  for (int i = 0; i < 300; ++i) {
    Sequence s = random_sequence(g, 7, 5);
    if (s.size() < 2) s.push_back(g.range(1, 5));
    BigInt tail = g.range(1, 9);
    REQUIRE(eval_reduced(to_reduced_cf(s, tail)) == eval_with_tail(s, tail));
  }
}
