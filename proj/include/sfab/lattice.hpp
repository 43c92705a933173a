#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfab {

constexpr int kMaxDim = 8;

// Small fixed-capacity integer vector.  The tag keeps coweights and
// parameter exponents from being mixed up.
template <class Tag>
struct IntTuple {
  std::array<int32_t, kMaxDim> a{};
  int n = 0;

  IntTuple() = default;
  explicit IntTuple(int dim) : n(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::out_of_range("IntTuple dimension");
  }
  IntTuple(std::initializer_list<int> xs) : n(static_cast<int>(xs.size())) {
    if (n > kMaxDim) throw std::out_of_range("IntTuple dimension");
    int i = 0;
    for (int x : xs) a[i++] = x;
  }
  static IntTuple from(const std::vector<int>& xs) {
    IntTuple t(static_cast<int>(xs.size()));
    for (int i = 0; i < t.n; ++i) t.a[i] = xs[i];
    return t;
  }
  static IntTuple unit(int dim, int i) {
    IntTuple t(dim);
    t.a[i] = 1;
    return t;
  }

  int size() const { return n; }
  int32_t& operator[](int i) { return a[i]; }
  int32_t operator[](int i) const { return a[i]; }

  bool operator==(const IntTuple& o) const { return n == o.n && a == o.a; }
  std::strong_ordering operator<=>(const IntTuple& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    for (int i = 0; i < n; ++i)
      if (auto c = a[i] <=> o.a[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  IntTuple& operator+=(const IntTuple& o) {
    for (int i = 0; i < n; ++i) a[i] += o.a[i];
    return *this;
  }
  IntTuple& operator-=(const IntTuple& o) {
    for (int i = 0; i < n; ++i) a[i] -= o.a[i];
    return *this;
  }
  friend IntTuple operator+(IntTuple x, const IntTuple& y) { return x += y; }
  friend IntTuple operator-(IntTuple x, const IntTuple& y) { return x -= y; }
  friend IntTuple operator-(IntTuple x) {
    for (int i = 0; i < x.n; ++i) x.a[i] = -x.a[i];
    return x;
  }
  friend IntTuple operator*(int k, IntTuple x) {
    for (int i = 0; i < x.n; ++i) x.a[i] *= k;
    return x;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (a[i] != 0) return false;
    return true;
  }
  long sum() const {
    long s = 0;
    for (int i = 0; i < n; ++i) s += a[i];
    return s;
  }
  std::vector<int> to_vector() const { return std::vector<int>(a.begin(), a.begin() + n); }
  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }
};

struct CoweightTag {};
struct ZExpTag {};

// Coweight in the fundamental-coweight basis: coords c_i = <mu, alpha_i>.
using Coweight = IntTuple<CoweightTag>;
// Exponent vector of a monomial in the parameter variables z_k = q_k^{1/2}.
using ZExp = IntTuple<ZExpTag>;

inline bool is_dominant(const Coweight& c) {
  for (int i = 0; i < c.n; ++i)
    if (c[i] < 0) return false;
  return true;
}
inline bool is_strongly_dominant(const Coweight& c) {
  for (int i = 0; i < c.n; ++i)
    if (c[i] < 1) return false;
  return true;
}

// Dense integer matrix, row-major, acting on column vectors.
struct IntMatrix {
  int n = 0;
  std::vector<int> m;

  IntMatrix() = default;
  explicit IntMatrix(int dim) : n(dim), m(static_cast<size_t>(dim) * dim, 0) {}
  static IntMatrix identity(int dim) {
    IntMatrix r(dim);
    for (int i = 0; i < dim; ++i) r(i, i) = 1;
    return r;
  }
  int& operator()(int i, int j) { return m[static_cast<size_t>(i) * n + j]; }
  int operator()(int i, int j) const { return m[static_cast<size_t>(i) * n + j]; }
  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix& o) const { return m <=> o.m; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        int v = x(i, k);
        if (!v) continue;
        for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  template <class Tag>
  IntTuple<Tag> apply(const IntTuple<Tag>& v) const {
    IntTuple<Tag> r(n);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
};

}  // namespace sfab
