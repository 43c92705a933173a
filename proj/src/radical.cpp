#include "sfab/radical.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sfab {

namespace {

// n = s^2 * d with d squarefree.
void split_square(mpz_class n, mpz_class& s, mpz_class& d) {
  s = 1;
  d = 1;
  for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= p * p;
      s *= p;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      d *= p;
    }
  }
  d *= n;
}

std::vector<long long> prime_factors(long long d) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      ps.push_back(p);
      while (d % p == 0) d /= p;
    }
  if (d > 1) ps.push_back(d);
  return ps;
}

}  // namespace

void RadicalNumber::add(long long d, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = t_.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

RadicalNumber RadicalNumber::sqrt_of(const mpq_class& q) {
  if (sgn(q) < 0) throw std::domain_error("square root of negative rational");
  RadicalNumber r;
  if (sgn(q) == 0) return r;
  mpz_class s, d;
  split_square(q.get_num() * q.get_den(), s, d);
  if (!d.fits_slong_p()) throw std::overflow_error("radicand too large");
  mpq_class c(s, q.get_den());
  c.canonicalize();
  r.add(d.get_si(), c);
  return r;
}

mpq_class RadicalNumber::rational_part() const {
  auto it = t_.find(1);
  return it == t_.end() ? mpq_class(0) : it->second;
}

double RadicalNumber::to_double() const {
  double s = 0.0;
  for (const auto& [d, c] : t_) s += c.get_d() * std::sqrt(static_cast<double>(d));
  return s;
}

std::string RadicalNumber::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : t_) {
    std::string term = c.get_str();
    if (d != 1) term += "*sqrt(" + std::to_string(d) + ")";
    if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
  for (const auto& [d, c] : o.t_) add(d, c);
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
  for (const auto& [d, c] : o.t_) add(d, -c);
  return *this;
}

RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b) {
  RadicalNumber r;
  for (const auto& [d1, c1] : a.t_)
    for (const auto& [d2, c2] : b.t_) {
      long long g = std::gcd(d1, d2);
      r.add((d1 / g) * (d2 / g), mpq_class(c1 * c2 * mpq_class(static_cast<long>(g))));
    }
  return r;
}

RadicalNumber RadicalNumber::inverse() const {
  if (t_.empty()) throw std::domain_error("inverse of zero");
  // Multiply by the conjugate in each prime until the value is rational.
  std::set<long long> primes;
  for (const auto& kv : t_)
    for (long long p : prime_factors(kv.first)) primes.insert(p);
  RadicalNumber x = *this, acc(mpq_class(1));
  for (long long p : primes) {
    RadicalNumber conj;
    for (const auto& [d, c] : x.t_) conj.add(d, d % p == 0 ? mpq_class(-c) : c);
    x = x * conj;
    acc = acc * conj;
  }
  if (!x.is_rational() || x.is_zero()) throw std::logic_error("radical inverse did not rationalize");
  mpq_class inv = 1 / x.rational_part();
  RadicalNumber r;
  for (const auto& [d, c] : acc.t_) r.add(d, c * inv);
  return r;
}

int RadicalNumber::sign() const {
  if (is_rational()) return sgn(rational_part());
  mpfr_t s, term, root;
  mpfr_inits2(512, s, term, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(s, 0, MPFR_RNDN);
  for (const auto& [d, c] : t_) {
    mpfr_set_si(root, d, MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_set_q(term, c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, root, MPFR_RNDN);
    mpfr_add(s, s, term, MPFR_RNDN);
  }
  int sg = mpfr_sgn(s);
  mpfr_clears(s, term, root, static_cast<mpfr_ptr>(nullptr));
  return sg;
}

RadicalNumber pow(const RadicalNumber& x, int e) {
  RadicalNumber base = e < 0 ? x.inverse() : x;
  unsigned k = e < 0 ? -static_cast<unsigned>(e) : static_cast<unsigned>(e);
  RadicalNumber r(mpq_class(1));
  while (k) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RadicalNumber eval_exact(const QLaurent& p, const std::vector<mpq_class>& q) {
  std::vector<RadicalNumber> z;
  for (const auto& v : q) z.push_back(RadicalNumber::sqrt_of(v));
  RadicalNumber s;
  for (const auto& [e, c] : p.terms()) {
    RadicalNumber m(c);
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      // z^e = q^{e/2}: keep the rational part of even powers exact.
      int half = e[i] / 2;
      mpq_class qp = 1;
      mpq_class base = half >= 0 ? q[i] : mpq_class(1 / q[i]);
      for (int k = 0; k < std::abs(half); ++k) qp *= base;
      m = m * RadicalNumber(qp);
      if (e[i] % 2 != 0) m = m * (e[i] > 0 ? z[i] : z[i].inverse());
    }
    s += m;
  }
  return s;
}

}  // namespace sfab
