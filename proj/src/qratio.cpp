#include "sfab/qratio.hpp"

namespace sfab {

namespace {

// Pull a common monomial and the denominator's leading coefficient out,
// then collapse to a polynomial when the division is exact.
void normalize(QRatio& r) {
  if (r.den.is_zero()) throw DivisionError("QRatio with zero denominator");
  if (r.num.is_zero()) {
    const int dim = r.den.leading().first.size();
    r.den = QLaurent::constant(dim, 1);
    return;
  }
  if (is_monomial(r.den)) {
    const auto& [e, c] = r.den.leading();
    QLaurent inv(-e, 1 / c);
    r.num = r.num * inv;
    r.den = QLaurent::constant(e.size(), 1);
    return;
  }
  try {
    QLaurent q = exact_divide(r.num, r.den);
    r.num = q;
    r.den = QLaurent::constant(q.leading().first.size(), 1);
  } catch (const DivisionError&) {
    // keep as a genuine quotient
  }
}

}  // namespace

QRatio::QRatio(QLaurent n, QLaurent d) : num(std::move(n)), den(std::move(d)) { normalize(*this); }

QRatio QRatio::from(const QLaurent& p, int dim) { return QRatio(p, QLaurent::constant(dim, 1)); }

bool QRatio::as_polynomial(QLaurent& out) const {
  if (is_monomial(den)) {
    const auto& [e, c] = den.leading();
    out = num * QLaurent(-e, 1 / c);
    return true;
  }
  try {
    out = exact_divide(num, den);
    return true;
  } catch (const DivisionError&) {
    return false;
  }
}

QRatio operator*(const QRatio& a, const QRatio& b) { return QRatio(a.num * b.num, a.den * b.den); }

QRatio operator/(const QRatio& a, const QRatio& b) {
  if (b.num.is_zero()) throw DivisionError("QRatio division by zero");
  return QRatio(a.num * b.den, a.den * b.num);
}

QRatio operator+(const QRatio& a, const QRatio& b) {
  if (a.den == b.den) return QRatio(a.num + b.num, a.den);
  return QRatio(a.num * b.den + b.num * a.den, a.den * b.den);
}

QRatio operator-(const QRatio& a, const QRatio& b) {
  if (a.den == b.den) return QRatio(a.num - b.num, a.den);
  return QRatio(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::string QRatio::text(const std::vector<std::string>& names) const {
  if (den.size() == 1 && den.leading().first.is_zero() && den.leading().second == 1) return to_text(num, names);
  return "(" + to_text(num, names) + ")/(" + to_text(den, names) + ")";
}

}  // namespace sfab
