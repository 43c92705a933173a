#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "sfab/laurent.hpp"

namespace sfab {

// Exact element of Q(sqrt d_1, sqrt d_2, ...): sum of c_d * sqrt(d) over
// squarefree d >= 1.  Enough to evaluate QLaurent values at z_k = q_k^{1/2}
// with rational q_k without rounding.
class RadicalNumber {
 public:
  RadicalNumber() = default;
  RadicalNumber(const mpq_class& r) { add(1, r); }
  static RadicalNumber sqrt_of(const mpq_class& q);

  const std::map<long long, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_rational() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 1); }
  mpq_class rational_part() const;
  double to_double() const;
  std::string str() const;

  RadicalNumber& operator+=(const RadicalNumber& o);
  RadicalNumber& operator-=(const RadicalNumber& o);
  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
  friend RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b);
  friend RadicalNumber operator/(const RadicalNumber& a, const RadicalNumber& b) { return a * b.inverse(); }
  RadicalNumber inverse() const;
  bool operator==(const RadicalNumber& o) const { return t_ == o.t_; }
  // Sign of the real value; exact for rational values, otherwise decided
  // by a high-precision float comparison.
  int sign() const;

 private:
  void add(long long d, const mpq_class& c);
  std::map<long long, mpq_class> t_;
};

RadicalNumber pow(const RadicalNumber& x, int e);

// Exact evaluation of a QLaurent at z_k = sqrt(q_k).
RadicalNumber eval_exact(const QLaurent& p, const std::vector<mpq_class>& q);

}  // namespace sfab
