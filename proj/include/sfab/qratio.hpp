#pragma once

#include <string>
#include <vector>

#include "sfab/laurent.hpp"
#include "sfab/radical.hpp"

namespace sfab {

// Quotient of two QLaurent values, kept unreduced except when the
// denominator divides the numerator exactly.
struct QRatio {
  QLaurent num;
  QLaurent den;

  QRatio() = default;
  QRatio(QLaurent n, QLaurent d);
  static QRatio from(const QLaurent& p, int dim);

  bool is_zero() const { return num.is_zero(); }
  // Exact polynomial value, if the denominator divides the numerator.
  bool as_polynomial(QLaurent& out) const;

  friend QRatio operator*(const QRatio& a, const QRatio& b);
  friend QRatio operator/(const QRatio& a, const QRatio& b);
  friend QRatio operator+(const QRatio& a, const QRatio& b);
  friend QRatio operator-(const QRatio& a, const QRatio& b);
  friend bool operator==(const QRatio& a, const QRatio& b) { return a.num * b.den == b.num * a.den; }

  double value(const std::vector<double>& z) const { return eval(num, z) / eval(den, z); }
  RadicalNumber exact_value(const std::vector<mpq_class>& q) const {
    return eval_exact(num, q) / eval_exact(den, q);
  }
  std::string text(const std::vector<std::string>& names) const;
};

}  // namespace sfab
