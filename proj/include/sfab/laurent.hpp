#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfab/lattice.hpp"

namespace sfab {

struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse Laurent polynomial: exponent vector -> coefficient, zero
// coefficients never stored.  Key order (lexicographic) is the monomial
// order used by exact division.
template <class Key, class Coeff>
class Laurent {
 public:
  using Map = std::map<Key, Coeff>;

  Laurent() = default;
  Laurent(const Key& k, Coeff c) { add_term(k, std::move(c)); }

  static Laurent constant(int dim, Coeff c) { return Laurent(Key(dim), std::move(c)); }
  static Laurent monomial(const Key& k) { return Laurent(k, Coeff(1)); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  const Coeff* find(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? nullptr : &it->second;
  }
  Coeff coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Coeff() : it->second;
  }

  void add_term(const Key& k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }
  void sub_term(const Key& k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(k, -c);
    if (!fresh) {
      it->second -= c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }

  const std::pair<const Key, Coeff>& leading() const {
    if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *t_.rbegin();
  }
  const std::pair<const Key, Coeff>& trailing() const {
    if (t_.empty()) throw std::logic_error("trailing term of zero polynomial");
    return *t_.begin();
  }

  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.t_) sub_term(k, c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [k, c] : a.t_) r.t_.emplace(k, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const Coeff& c) const {
    Laurent r;
    if (coeff_is_zero(c)) return r;
    for (const auto& [k, v] : t_) r.add_term(k, v * c);
    return r;
  }
  Laurent shifted(const Key& s) const {
    Laurent r;
    for (const auto& [k, v] : t_) r.t_.emplace(k + s, v);
    return r;
  }
  // Substitute keys through an injective map (Weyl action on exponents).
  template <class F>
  Laurent map_keys(F&& f) const {
    Laurent r;
    for (const auto& [k, v] : t_) r.add_term(f(k), v);
    return r;
  }

 private:
  static bool coeff_is_zero(const Coeff& c);
  Map t_;
};

using QLaurent = Laurent<ZExp, mpq_class>;
using TorusPoly = Laurent<Coweight, QLaurent>;

template <>
inline bool QLaurent::coeff_is_zero(const mpq_class& c) {
  return sgn(c) == 0;
}
template <>
inline bool TorusPoly::coeff_is_zero(const QLaurent& c) {
  return c.is_zero();
}

inline mpq_class exact_quotient(const mpq_class& a, const mpq_class& b) {
  if (sgn(b) == 0) throw DivisionError("division by zero coefficient");
  return a / b;
}

template <class Key, class Coeff>
Laurent<Key, Coeff> exact_divide(const Laurent<Key, Coeff>& num, const Laurent<Key, Coeff>& den);

inline QLaurent exact_quotient(const QLaurent& a, const QLaurent& b) { return exact_divide(a, b); }

// Greedy leading-term elimination in lexicographic order.  The quotient
// of an exact division has its exponents inside the coordinatewise box
// [min(num) - min(den), max(num) - max(den)]; leaving the box proves a
// nonzero remainder and keeps the loop finite.
template <class Key, class Coeff>
Laurent<Key, Coeff> exact_divide(const Laurent<Key, Coeff>& num, const Laurent<Key, Coeff>& den) {
  using L = Laurent<Key, Coeff>;
  if (den.is_zero()) throw DivisionError("exact_divide: zero divisor");
  L q;
  if (num.is_zero()) return q;
  const int dim = num.leading().first.size();
  Key lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    int nmin = INT32_MAX, nmax = INT32_MIN, dmin = INT32_MAX, dmax = INT32_MIN;
    for (const auto& kv : num.terms()) {
      nmin = std::min(nmin, kv.first[i]);
      nmax = std::max(nmax, kv.first[i]);
    }
    for (const auto& kv : den.terms()) {
      dmin = std::min(dmin, kv.first[i]);
      dmax = std::max(dmax, kv.first[i]);
    }
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
    if (lo[i] > hi[i]) throw DivisionError("exact_divide: nonzero remainder");
  }
  const auto& [dk, dc] = den.leading();
  L rem = num;
  while (!rem.is_zero()) {
    const auto& [rk, rc] = rem.leading();
    Key m = rk - dk;
    for (int i = 0; i < dim; ++i)
      if (m[i] < lo[i] || m[i] > hi[i]) throw DivisionError("exact_divide: nonzero remainder");
    Coeff c = exact_quotient(rc, dc);
    for (const auto& [k, v] : den.terms()) rem.sub_term(k + m, v * c);
    q.add_term(m, c);
  }
  return q;
}

// Canonical text: terms in descending exponent order, coefficients as
// p or p/q, variables named by `names` (default z0, z1, ...).
std::string to_text(const QLaurent& p, const std::vector<std::string>& names = {});
QLaurent parse_qlaurent(const std::string& text, const std::vector<std::string>& names);
std::string to_text(const TorusPoly& p, const std::vector<std::string>& names = {});

double eval(const QLaurent& p, const std::vector<double>& z);

// Numeric snapshot of a TorusPoly with coefficients evaluated at fixed z.
struct NumericTorusPoly {
  int dim = 0;
  std::vector<Coweight> exps;
  std::vector<double> coeffs;
  std::complex<double> operator()(const std::vector<std::complex<double>>& u) const;
};
NumericTorusPoly numeric(const TorusPoly& p, const std::vector<double>& z);

inline QLaurent q_monomial(const ZExp& e, const mpq_class& c = 1) { return QLaurent(e, c); }
inline bool is_monomial(const QLaurent& p) { return p.size() == 1; }

// Integer power of a complex number (negative exponents allowed).
inline std::complex<double> ipow(std::complex<double> x, int e) {
  std::complex<double> r = 1.0;
  bool inv = e < 0;
  unsigned k = inv ? -static_cast<unsigned>(e) : static_cast<unsigned>(e);
  while (k) {
    if (k & 1u) r *= x;
    x *= x;
    k >>= 1;
  }
  return inv ? 1.0 / r : r;
}

}  // namespace sfab
