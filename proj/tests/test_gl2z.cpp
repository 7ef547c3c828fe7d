#include <doctest.h>

#include <map>
#include <set>

#include "markoff/gl2z.hpp"
#include "oracles.hpp"

using namespace markoff;

namespace {

Mat2 word_product(const std::string& w) {
  Mat2 m;
  for (char ch : w) m = m * letter_matrix(ch);
  return m;
}

// inverse by adjugate, independent of Mat2::inverse
Mat2 adj_inverse(const Mat2& m) {
  BigInt e = m.a * m.d - m.b * m.c;
  return {e * m.d, -e * m.b, -e * m.c, e * m.a};
}

// All reduced words over X, Y, Z of length ≤ n.
std::vector<std::string> reduced_words(int n) {
  std::vector<std::string> out{""}, level{""};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char ch : {'X', 'Y', 'Z'})
        if (w.empty() || w.back() != ch) next.push_back(w + ch);
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

Mat2 random_unimodular(oracle::Gen& g, long max_entry) {
  const Mat2 gens[] = {mat_S(), mat_T(), mat_T().inverse(), mat_O()};
  Mat2 m;
  for (int i = 0; i < 40; ++i) {
    Mat2 n = m * gens[g.range(0, 3)];
    if (n.norm() > max_entry) break;
    m = n;
  }
  return m;
}

}  // namespace

TEST_CASE("Fricke examples") {
  FrickeTrace f = fricke_commutator_trace({11, 3, 7, 2}, {37, 11, 10, 3});
  CHECK(f.formula == 1767);
  CHECK(f.direct == 1767);
  FrickeTrace i = fricke_commutator_trace({}, {});
  CHECK(i.formula == 2);
  CHECK(i.direct == 2);
  FrickeTrace p = fricke_commutator_trace(mat_A0(), mat_B0());
  CHECK(p.formula == -2);
  CHECK(p.direct == -2);
  CHECK_THROWS_AS(fricke_commutator_trace({2, 0, 0, 1}, {}), DomainError);
}

TEST_CASE("property: Fricke formula agrees with the direct commutator trace") {
  oracle::Gen g(61);
  int neg = 0;
  for (int i = 0; i < 1000; ++i) {
    Mat2 A = random_unimodular(g, 50), B = random_unimodular(g, 50);
    BigInt eA = A.det(), eB = B.det();
    neg += eA < 0 || eB < 0;
    BigInt direct = (A * B * adj_inverse(A) * adj_inverse(B)).trace();
    BigInt tA = A.trace(), tB = B.trace(), tAB = (A * B).trace();
    BigInt formula = eA * tA * tA + eB * tB * tB + eA * eB * tAB * tAB - eA * eB * tA * tB * tAB - 2;
    FrickeTrace f = fricke_commutator_trace(A, B);
    REQUIRE(f.direct == direct);
    REQUIRE(f.formula == formula);
    REQUIRE(f.formula == f.direct);
  }
  CHECK(neg > 100);
}

TEST_CASE("dihedral group of order 12") {
  auto D = dihedral_D6();
  REQUIRE(D.size() == 12);
  std::set<std::string> keys;
  for (const auto& m : D) keys.insert(m.to_string());
  CHECK(keys.size() == 12);
  CHECK(keys.count(Mat2{}.to_string()) == 1);
  CHECK(pow(pi_t(), 6) == Mat2{});
  CHECK(!(pow(pi_t(), 2) == Mat2{}));
  CHECK(!(pow(pi_t(), 3) == Mat2{}));
  CHECK(pow(pi_o(), 2) == Mat2{});
  for (const auto& x : D)
    for (const auto& y : D) CHECK(keys.count((x * y).to_string()) == 1);
  for (const Mat2& m : {pi_X0(), pi_Y0(), pi_Z0()}) CHECK(m * m == Mat2{});
}

TEST_CASE("ternary examples") {
  TernaryDecomp id = ternary_decompose({});
  CHECK(id.h == 0);
  CHECK(id.k == 0);
  CHECK(id.word.empty());
  TernaryDecomp x = ternary_decompose(pi_X0());
  CHECK(x.h == 0);
  CHECK(x.k == 0);
  CHECK(x.word == "X");
  Mat2 v = pi_o() * pow(pi_t(), 2) * pi_X0() * pi_Y0() * pi_Z0();
  TernaryDecomp d = ternary_decompose(v);
  CHECK(d.h == 1);
  CHECK(d.k == 2);
  CHECK(d.word == "XYZ");
  CHECK(recompose(d) == v);
  CHECK_THROWS_AS(ternary_decompose({2, 0, 0, 1}), DomainError);
}

TEST_CASE("property: ternary decomposition is a bijection on words up to length 10") {
  auto D = dihedral_D6();
  std::map<std::string, std::string> seen;
  std::size_t count = 0;
  for (int h = 0; h < 2; ++h)
    for (int k = 0; k < 6; ++k) {
      Mat2 prefix = pow(pi_o(), static_cast<unsigned>(h)) * pow(pi_t(), static_cast<unsigned>(k));
      for (const auto& w : reduced_words(10)) {
        Mat2 v = prefix * word_product(w);
        TernaryDecomp d = ternary_decompose(v);
        REQUIRE(d.h == h);
        REQUIRE(d.k == k);
        REQUIRE(d.word == w);
        REQUIRE(recompose(d) == v);
        std::string label = std::to_string(h) + std::to_string(k) + w;
        REQUIRE(seen.emplace(v.to_string(), label).second);
        ++count;
      }
    }
  CHECK(count == 12 * (1 + 3 * ((1u << 10) - 1)));
}

TEST_CASE("property: ternary decomposition of random unimodular matrices") {
  oracle::Gen g(62);
  for (int i = 0; i < 500; ++i) {
    Mat2 v = random_unimodular(g, 1000);
    TernaryDecomp d = ternary_decompose(v);
    REQUIRE(recompose(d) == v);
    for (std::size_t j = 1; j < d.word.size(); ++j) REQUIRE(d.word[j] != d.word[j - 1]);
  }
}

TEST_CASE("A0 B0 decomposition examples") {
  ABDecomp s = ab_decompose(mat_S());
  CHECK(s.sign == 1);
  CHECK(s.word.empty());
  CHECK(s.h == 0);
  CHECK(s.k == 1);
  ABDecomp a = ab_decompose(mat_A0());
  CHECK(a.sign == 1);
  CHECK(a.word == "a");
  CHECK(a.h == 0);
  CHECK(a.k == 0);
  CHECK(W_k(3) == mat_S() * mat_T() * mat_S());
  CHECK_THROWS_AS(W_k(6), DomainError);
}

TEST_CASE("property: A0 B0 decomposition round trip") {
  oracle::Gen g(63);
  const char letters[] = {'a', 'A', 'b', 'B'};
  for (int i = 0; i < 1000; ++i) {
    std::string w;
    long len = g.range(0, 8);
    for (long j = 0; j < len; ++j) w += letters[g.range(0, 3)];
    int h = static_cast<int>(g.range(0, 1)), k = static_cast<int>(g.range(0, 5));
    Mat2 v = word_product(w) * pow(mat_O(), static_cast<unsigned>(h)) * W_k(k);
    if (g.coin()) v = -v;
    ABDecomp d = ab_decompose(v);
    INFO(w << " h=" << h << " k=" << k);
    REQUIRE(recompose(d) == v);
    REQUIRE((d.h == 0) == (v.det() == 1));
    REQUIRE(d.h == h);
    REQUIRE(d.k == k);
  }
}

TEST_CASE("Dedekind sum examples") {
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(1, 3) == oracle::q(1, 18));
  CHECK(dedekind_sum(5, 7) + dedekind_sum(7, 5) == oracle::q(-1, 4) + (oracle::q(5, 7) + oracle::q(7, 5) + oracle::q(1, 35)) / 12);
  CHECK(sawtooth(oracle::q(1, 2)) == 0);
  CHECK(sawtooth(3) == 0);
  CHECK(sawtooth(oracle::q(7, 4)) == oracle::q(1, 4));
  CHECK_THROWS_AS(dedekind_sum(1, 0), DomainError);
}

TEST_CASE("property: Dedekind sums match the naive sum and the closed form") {
  for (long c = 2; c <= 40; ++c) {
    REQUIRE(dedekind_sum(1, c) == oracle::q((c - 1) * (c - 2), 12 * c));
    for (long h = 1; h < c; ++h) REQUIRE(dedekind_sum(h, c) == oracle::dedekind_naive(h, c));
  }
}

TEST_CASE("property: Dedekind reciprocity for coprime pairs up to 200") {
  int pairs = 0;
  for (long k = 2; k <= 200; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      REQUIRE(dedekind_sum(h, k) + dedekind_sum(k, h) == oracle::reciprocity(h, k));
      ++pairs;
    }
  CHECK(pairs > 12000);
}
