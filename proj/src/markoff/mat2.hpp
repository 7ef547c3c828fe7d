#pragma once

#include <string>

#include "markoff/exact.hpp"

namespace markoff {

// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  // Exact inverse for |det| = 1.
  Mat2 inverse() const {
    BigInt e = det();
    if (e != 1 && e != -1) throw DomainError("matrix is not unimodular");
    return {d * e, -b * e, -c * e, a * e};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  // max |entry|
  BigInt norm() const {
    BigInt m = markoff::abs(a);
    for (const BigInt* v : {&b, &c, &d})
      if (markoff::abs(*v) > m) m = markoff::abs(*v);
    return m;
  }

  std::string to_string() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
  }
};

inline Mat2 pow(Mat2 m, unsigned n) {
  Mat2 r;
  while (n) {
    if (n & 1U) r = r * m;
    m = m * m;
    n >>= 1U;
  }
  return r;
}

}  // namespace markoff
