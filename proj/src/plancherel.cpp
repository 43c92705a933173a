#include "sfab/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sfab/hecke.hpp"
#include "sfab/parallel.hpp"

namespace sfab {

namespace {

UPoint inverse(const UPoint& u) {
  UPoint r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = 1.0 / u[i];
  return r;
}

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct CVec {
  std::vector<Complex> v;
  CVec& operator+=(const CVec& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
};

}  // namespace

PlancherelDensity::PlancherelDensity(const Context& ctx)
    : mode_(ctx.ps().mode()), rank_(ctx.rs().rank()), z_(ctx.ps().z_values()) {
  factors_ = c_function(ctx).reduced;
  w0_inv_ = eval(ctx.w0_poincare(true), z_);
  w0_order_ = static_cast<double>(ctx.weyl().size());
  if (mode_ != Mode::Exceptional) return;

  const int n = rank_;
  const auto& ps = ctx.ps();
  b_ = std::sqrt(mpq_class(ps.q(n) / ps.q(0)).get_d());
  w0p_order_ = n == 1 ? 1 : n == 2 ? 2 : std::pow(2.0, n - 1) * factorial(n - 1);

  // The root e_1 has every simple coordinate equal to 1.
  RootCoords ones(n);
  for (int i = 0; i < n; ++i) ones[i] = 1;
  const int e1 = ctx.rs().find_root(ones);
  for (size_t f = 0; f < factors_.size() && skip_factor_ < 0; ++f) {
    const auto& roots = factors_[f].roots;
    if (std::find(roots.begin(), roots.end(), e1) == roots.end()) continue;
    for (size_t k = 0; k < factors_[f].num.size(); ++k)
      if (factors_[f].num[k].sign > 0) {
        skip_factor_ = static_cast<int>(f);
        skip_binomial_ = static_cast<int>(k);
      }
  }
  if (skip_factor_ < 0) throw std::logic_error("no factor 1 + b^{-1} t_1 in the c-function");
}

// 1 / (c(u) c(u^{-1})), optionally without 1 + b^{-1} t_1 in c(u^{-1}).
Complex PlancherelDensity::eval_product(const UPoint& u, bool skip) const {
  const UPoint v = inverse(u);
  Complex r = 1.0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    for (const auto& b : factors_[f].den) r *= b.eval(u, z_) * b.eval(v, z_);
    for (size_t k = 0; k < factors_[f].num.size(); ++k) {
      const auto& b = factors_[f].num[k];
      r /= b.eval(u, z_);
      if (!(skip && static_cast<int>(f) == skip_factor_ && static_cast<int>(k) == skip_binomial_)) r /= b.eval(v, z_);
    }
  }
  return r;
}

Complex PlancherelDensity::phi0(const UPoint& u) const { return 1.0 / eval_product(u, false); }

Complex PlancherelDensity::phi1(const UPoint& u) const {
  if (mode_ != Mode::Exceptional) throw std::logic_error("phi1 exists only in the exceptional case");
  return 1.0 / eval_product(u, true);
}

Complex PlancherelDensity::phi1_limit(const UPoint& u, double offset) const {
  UPoint w = u;
  const Complex scale = 1.0 + offset;
  for (auto& x : w) x *= scale;  // t_1 moves, t_2..t_n stay
  const Complex t1 = w[0];
  return phi0(w) / (1.0 + t1 / b_);
}

double PlancherelDensity::main(const UPoint& u) const {
  return (w0_inv_ / w0_order_ * eval_product(u, false)).real();
}

double PlancherelDensity::boundary(const UPoint& u) const {
  return (w0_inv_ / w0p_order_ / phi1(u)).real();
}

UPoint PlancherelDensity::boundary_point(const std::vector<Complex>& t_rest) const {
  UPoint u(rank_);
  u[0] = -b_;
  for (int k = 1; k < rank_; ++k) u[k] = u[k - 1] * t_rest[k - 1];
  return u;
}

double density_at(const Context& ctx, const UPoint& u) { return PlancherelDensity(ctx).main(u); }

size_t QuadratureGrid::size() const {
  size_t s = 1;
  for (int i = 0; i < dim; ++i) s *= static_cast<size_t>(points);
  return s;
}

UPoint QuadratureGrid::node(size_t index) const {
  UPoint u(dim);
  for (int i = 0; i < dim; ++i) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(index % points) / points;
    u[i] = std::polar(1.0, theta);
    index /= points;
  }
  return u;
}

namespace {

// Integrals of m functions against the Plancherel measure; f(u, out)
// writes the m integrand values at u.
template <class F>
std::vector<Complex> integrate(const PlancherelDensity& d, int points, bool include_boundary, size_t m, F f) {
  if (points < 1) throw std::invalid_argument("quadrature needs at least one point per dimension");
  const CVec zero{std::vector<Complex>(m)};
  QuadratureGrid grid{points, d.rank()};
  const double w = 1.0 / static_cast<double>(grid.size());
  CVec total = deterministic_reduce(grid.size(), zero, [&](size_t i, CVec& acc) {
    thread_local std::vector<Complex> vals;
    vals.assign(m, 0.0);
    const UPoint u = grid.node(i);
    f(u, vals);
    const double rho = d.main(u) * w;
    for (size_t k = 0; k < m; ++k) acc.v[k] += rho * vals[k];
  });
  if (include_boundary && d.mode() == Mode::Exceptional) {
    QuadratureGrid edge{points, d.rank() - 1};
    const double we = 1.0 / static_cast<double>(edge.size());
    total += deterministic_reduce(edge.size(), zero, [&](size_t i, CVec& acc) {
      thread_local std::vector<Complex> vals;
      vals.assign(m, 0.0);
      const UPoint u = d.boundary_point(edge.node(i));
      f(u, vals);
      const double rho = d.boundary(u) * we;
      for (size_t k = 0; k < m; ++k) acc.v[k] += rho * vals[k];
    });
  }
  return total.v;
}

std::vector<NumericTorusPoly> numeric_all(const Context& ctx, const std::vector<Coweight>& lambdas) {
  std::vector<NumericTorusPoly> ps;
  for (const auto& l : lambdas) ps.push_back(numeric_spherical(ctx, l));
  return ps;
}

}  // namespace

PairingMatrix orthogonality(const Context& ctx, const std::vector<Coweight>& lambdas, int points,
                            bool include_boundary) {
  const PlancherelDensity d(ctx);
  const auto polys = numeric_all(ctx, lambdas);
  const size_t k = lambdas.size();
  auto flat = integrate(d, points, include_boundary, k * k, [&](const UPoint& u, std::vector<Complex>& out) {
    thread_local std::vector<Complex> p;
    p.resize(k);
    for (size_t a = 0; a < k; ++a) p[a] = polys[a](u);
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) out[a * k + b] = p[a] * std::conj(p[b]);
  });
  PairingMatrix pm;
  pm.lambdas = lambdas;
  const auto z = ctx.ps().z_values();
  for (size_t a = 0; a < k; ++a) {
    pm.expected_diagonal.push_back(1.0 / eval(n_lambda(ctx, lambdas[a]), z));
    pm.value.emplace_back(flat.begin() + a * k, flat.begin() + (a + 1) * k);
    for (size_t b = 0; b < k; ++b) {
      const double expect = a == b ? pm.expected_diagonal[a] : 0.0;
      pm.max_residual = std::max(pm.max_residual, std::abs(pm.value[a][b] - expect));
    }
  }
  return pm;
}

Complex integrate_pairing(const Context& ctx, const Coweight& lambda, const Coweight& mu, int points,
                          bool include_boundary) {
  const PlancherelDensity d(ctx);
  const auto p = numeric_spherical(ctx, lambda);
  const auto q = numeric_spherical(ctx, mu);
  return integrate(d, points, include_boundary, 1,
                   [&](const UPoint& u, std::vector<Complex>& out) { out[0] = p(u) * std::conj(q(u)); })[0];
}

Complex integrate_triple(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                         int points, bool include_boundary) {
  const PlancherelDensity d(ctx);
  const auto p = numeric_spherical(ctx, lambda);
  const auto q = numeric_spherical(ctx, mu);
  const auto r = numeric_spherical(ctx, nu);
  Complex v = integrate(d, points, include_boundary, 1, [&](const UPoint& u, std::vector<Complex>& out) {
    out[0] = p(u) * q(u) * std::conj(r(u));
  })[0];
  return v * eval(n_lambda(ctx, nu), ctx.ps().z_values());
}

std::vector<double> grid_convergence(const Context& ctx, const std::vector<Coweight>& lambdas,
                                     const std::vector<int>& grids) {
  std::vector<double> out;
  for (int g : grids) out.push_back(orthogonality(ctx, lambdas, g).max_residual);
  return out;
}

SupSample sampled_sup(const Context& ctx, const Coweight& lambda, size_t samples, unsigned long long seed) {
  const auto p = numeric_spherical(ctx, lambda);
  const int n = ctx.rs().rank();
  SupSample s;
  s.lambda = lambda;
  s.samples = samples;
  s.at_one = p(UPoint(n, 1.0)).real();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wide(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> narrow(-1e-4, 1e-4);
  const size_t close = samples / 10;
  UPoint u(n);
  for (size_t k = 0; k < samples; ++k) {
    const bool near = k < close;
    for (int i = 0; i < n; ++i) u[i] = std::polar(1.0, near ? narrow(rng) : wide(rng));
    const double v = std::abs(p(u));
    s.sup = std::max(s.sup, v);
    if (near) s.near_one = std::max(s.near_one, v);
  }
  return s;
}

SpectrumReport spectrum_description(const Context& ctx, const std::vector<Coweight>& lambdas, size_t samples) {
  SpectrumReport r;
  r.mode = ctx.ps().mode();
  const int n = ctx.rs().rank();
  r.components.push_back("T^" + std::to_string(n) + "/W0");
  if (r.mode == Mode::Exceptional) {
    const PlancherelDensity d(ctx);
    r.b = d.b();
    r.components.push_back(n == 1 ? "{t1=-b}" : "{t1=-b} x T^" + std::to_string(n - 1) + "/W0'");
  }
  for (const auto& l : lambdas) r.norms.push_back(sampled_sup(ctx, l, samples));
  return r;
}

}  // namespace sfab
