#pragma once

// Arithmetic in Z_k[t^{±1}]/(1-t)^2, written in the basis 1, s = 1-t, so an
// element a + b(1-t) is the pair (a, b) and s^2 = 0.  Modulus 0 means exact
// integer coefficients.

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtriv {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
struct TwistPair {
  Int a{0};
  Int b{0};
  bool operator==(const TwistPair&) const = default;
};

template <class Int>
class PairRing {
 public:
  using Elem = TwistPair<Int>;

  explicit PairRing(long k = 0) : k_(k) {}
  long modulus() const { return k_; }

  Elem make(Int a, Int b) const { return {reduce(std::move(a)), reduce(std::move(b))}; }
  Elem zero() const { return make(0, 0); }
  Elem one() const { return make(1, 0); }
  Elem s() const { return make(0, 1); }
  Elem t() const { return make(1, -1); }
  Elem t_inv() const { return make(1, 1); }  // (1 - s)^{-1} = 1 + s

  Elem add(const Elem& x, const Elem& y) const { return make(x.a + y.a, x.b + y.b); }
  Elem sub(const Elem& x, const Elem& y) const { return make(x.a - y.a, x.b - y.b); }
  Elem neg(const Elem& x) const { return make(-x.a, -x.b); }
  Elem mul(const Elem& x, const Elem& y) const { return make(x.a * y.a, x.a * y.b + x.b * y.a); }

  // x ⊳ y = t x + (1-t) y, and its inverse in x.
  Elem tri(const Elem& x, const Elem& y) const { return make(x.a, x.b - x.a + y.a); }
  Elem tri_inv(const Elem& x, const Elem& y) const { return make(x.a, x.b + x.a - y.a); }

  std::string format(const Elem& x) const {
    auto str = [](const Int& v) {
      if constexpr (std::is_integral_v<Int>) return std::to_string(v);
      else return v.str();
    };
    bool t_like = x.a == 1 && reduce(x.b + 1) == 0;
    if (t_like) return "t";
    if (x.b == 0) return str(x.a);
    Int mag = x.b < 0 ? Int(-x.b) : x.b;
    std::string s = (mag == 1 ? "" : str(mag)) + "(1-t)";
    if (x.a == 0) return (x.b < 0 ? "-" : "") + s;
    return str(x.a) + (x.b < 0 ? "-" : "+") + s;
  }

 private:
  Int reduce(Int v) const {
    if (k_ == 0) return v;
    Int m = v % Int(k_);
    if (m < 0) m += Int(k_);
    return m;
  }
  long k_;
};

template <class Int>
using TwistMatrix = std::array<std::array<TwistPair<Int>, 2>, 2>;

template <class Int>
TwistMatrix<Int> matmul(const PairRing<Int>& r, const TwistMatrix<Int>& x, const TwistMatrix<Int>& y) {
  TwistMatrix<Int> z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = r.add(r.mul(x[i][0], y[0][j]), r.mul(x[i][1], y[1][j]));
  return z;
}

template <class Int>
TwistMatrix<Int> identity_matrix(const PairRing<Int>& r) {
  return {{{r.one(), r.zero()}, {r.zero(), r.one()}}};
}

}  // namespace qtriv
