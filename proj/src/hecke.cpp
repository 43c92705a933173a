#include "sfab/hecke.hpp"

#include <algorithm>
#include <set>

#include "sfab/spherical.hpp"

namespace sfab {

QLaurent n_lambda(const Context& ctx, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("n_lambda needs a dominant coweight, got " + lambda.str());
  const auto& W = ctx.weyl();
  QLaurent stab = poincare(W, W.stabilizer(lambda), ctx.ps(), true);
  QLaurent ratio = exact_divide(ctx.w0_poincare(true), stab);
  return ratio * QLaurent(q_translation(ctx.rs(), ctx.ps(), lambda), 1);
}

QLaurent n_lambda_first(const Context& ctx, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("n_lambda needs a dominant coweight, got " + lambda.str());
  const auto& W = ctx.weyl();
  const auto& ps = ctx.ps();
  auto stab = W.stabilizer(lambda);
  size_t longest_in_stab = stab[0];
  for (size_t k : stab)
    if (W[k].length() > W[longest_in_stab].length()) longest_in_stab = k;
  QLaurent ratio = exact_divide(ctx.w0_poincare(false), poincare(W, stab, ps, false));
  ZExp qw = q_translation_walls(ctx.rs(), ps, lambda) - q_w(W.longest(), ps) + q_w(W[longest_in_stab], ps);
  return ratio * QLaurent(qw, 1);
}

std::vector<Coweight> SaturatedSet::full(const RootSystem& rs) const {
  std::set<Coweight> all;
  for (const auto& mu : dominant_part)
    for (const auto& x : weyl_orbit(rs, mu)) all.insert(x);
  return {all.begin(), all.end()};
}

SaturatedSet saturated_set(const RootSystem& rs, const Coweight& lambda) {
  return SaturatedSet{lambda, dominant_below(rs, lambda)};
}

namespace {

std::vector<Coweight> peel_order(const RootSystem& rs, std::vector<Coweight> xs, TieBreak order) {
  std::sort(xs.begin(), xs.end(), [&](const Coweight& a, const Coweight& b) {
    long ha = rs.rho_height(a), hb = rs.rho_height(b);
    if (ha != hb) return ha > hb;
    return order == TieBreak::Lexicographic ? a > b : a < b;
  });
  return xs;
}

// Coefficient of x^eta in P'_lambda P'_mu for each eta in `targets`.
std::map<Coweight, QLaurent> product_coefficients(const SphericalExpansion& a, const SphericalExpansion& b,
                                                  const std::vector<Coweight>& targets) {
  std::map<Coweight, QLaurent> out;
  for (const auto& eta : targets) {
    QLaurent c;
    for (const auto& [zeta, ca] : a.full.terms())
      if (const QLaurent* cb = b.full.find(eta - zeta)) c += ca * *cb;
    if (!c.is_zero()) out.emplace(eta, std::move(c));
  }
  return out;
}

// Strip P'_eta multiples from the top down; `interval` must be closed
// downwards inside itself under the order.
std::map<Coweight, QLaurent> peel(const Context& ctx, std::map<Coweight, QLaurent> rem,
                                  const std::vector<Coweight>& ordered) {
  std::set<Coweight> inside(ordered.begin(), ordered.end());
  std::map<Coweight, QLaurent> e;
  for (const auto& eta : ordered) {
    auto it = rem.find(eta);
    if (it == rem.end() || it->second.is_zero()) continue;
    QLaurent c = it->second;
    e.emplace(eta, c);
    auto p = macdonald_expand(ctx, eta);
    for (const auto& [zeta, cz] : p->coeffs) {
      if (!inside.count(zeta)) continue;
      rem[zeta] -= c * cz;
    }
  }
  for (const auto& [eta, c] : rem)
    if (!c.is_zero() && inside.count(eta)) throw std::logic_error("basis reduction left a residue at " + eta.str());
  return e;
}

}  // namespace

std::map<Coweight, QLaurent> product_expansion(const Context& ctx, const Coweight& lambda, const Coweight& mu,
                                               TieBreak order) {
  const auto& rs = ctx.rs();
  auto a = macdonald_expand(ctx, lambda);
  auto b = macdonald_expand(ctx, mu);
  auto targets = peel_order(rs, dominant_below(rs, lambda + mu), order);
  return peel(ctx, product_coefficients(*a, *b, targets), targets);
}

QLaurent product_coefficient(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu) {
  const auto& rs = ctx.rs();
  if (!rs.precedes(nu, lambda + mu)) return QLaurent();
  std::vector<Coweight> targets;
  for (const auto& eta : dominant_below(rs, lambda + mu))
    if (rs.precedes(nu, eta)) targets.push_back(eta);
  targets = peel_order(rs, targets, TieBreak::Lexicographic);
  auto a = macdonald_expand(ctx, lambda);
  auto b = macdonald_expand(ctx, mu);
  auto e = peel(ctx, product_coefficients(*a, *b, targets), targets);
  auto it = e.find(nu);
  return it == e.end() ? QLaurent() : it->second;
}

QRatio a_from_e(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                const QLaurent& e) {
  const auto& rs = ctx.rs();
  const auto& ps = ctx.ps();
  ZExp t = q_translation(rs, ps, lambda) + q_translation(rs, ps, mu) - q_translation(rs, ps, nu);
  QLaurent num = QLaurent(half(t), 1) * n_lambda(ctx, nu) * e;
  return QRatio(num, n_lambda(ctx, lambda) * n_lambda(ctx, mu));
}

StructureRow structure_constants(const Context& ctx, const Coweight& lambda, const Coweight& mu, TieBreak order) {
  StructureRow row{lambda, mu, {}};
  for (const auto& [nu, e] : product_expansion(ctx, lambda, mu, order))
    row.a.emplace(nu, a_from_e(ctx, lambda, mu, nu, e));
  return row;
}

QRatio structure_constant(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu) {
  return a_from_e(ctx, lambda, mu, nu, product_coefficient(ctx, lambda, mu, nu));
}

Coweight choose_nu_far(const RootSystem& rs, const Coweight& lambda, int extra) {
  int top = 0;
  for (const auto& mu : saturated_set(rs, lambda).full(rs))
    for (int i = 0; i < mu.size(); ++i) top = std::max(top, mu[i]);
  return (top + 1 + extra) * rs.rho_check();
}

PhiLambda phi_lambda(const Context& ctx, const Coweight& lambda, int extra) {
  const auto& rs = ctx.rs();
  PhiLambda phi{lambda, choose_nu_far(rs, lambda, extra), {}};
  RHom r = r_hom(rs, ctx.ps());
  for (const auto& mu : saturated_set(rs, lambda).full(rs)) {
    Coweight kappa = phi.nu - mu;
    QRatio a = structure_constant(ctx, lambda, kappa, phi.nu);
    phi.coeffs.emplace(mu, QRatio::from(QLaurent(-r(mu), 1), ctx.zdim()) * a);
  }
  return phi;
}

HorocycleDistribution horocycle_distribution(const Context& ctx, const Coweight& lambda, int extra) {
  const auto& rs = ctx.rs();
  HorocycleDistribution h{lambda, {}};
  const Coweight nu = choose_nu_far(rs, lambda, extra);
  RHom r = r_hom(rs, ctx.ps());
  QRatio nl = QRatio::from(n_lambda(ctx, lambda), ctx.zdim());
  for (const auto& mu : saturated_set(rs, lambda).full(rs)) {
    QRatio a = structure_constant(ctx, lambda, nu - mu, nu);
    h.counts.emplace(mu, nl * QRatio::from(QLaurent(-2 * r(mu), 1), ctx.zdim()) * a);
  }
  return h;
}

unsigned long long convex_hull_count(const Coweight& lambda) {
  unsigned long long p = 1;
  for (int i = 0; i < lambda.size(); ++i) p *= static_cast<unsigned long long>(lambda[i] + 1);
  return p;
}

unsigned long long dominant_interval_count(const Coweight& lambda) {
  const int n = lambda.size();
  unsigned long long count = 0;
  Coweight mu(n);
  for (;;) {
    if (is_dominant(lambda - mu)) ++count;
    int i = 0;
    while (i < n && mu[i] == lambda[i]) mu[i++] = 0;
    if (i == n) break;
    ++mu[i];
  }
  return count;
}

unsigned long long hull_lattice_count(const RootSystem& rs, const Coweight& lambda) {
  const int n = lambda.size();
  const int box = static_cast<int>(lambda.sum()) + 1;
  unsigned long long count = 0;
  Coweight mu(n);
  for (int i = 0; i < n; ++i) mu[i] = -box;
  for (;;) {
    bool in = true;
    for (const auto& a : rs.positive_roots()) {
      int v = rs.pairing(mu, a), top = rs.pairing(lambda, a);
      if (v < 0 || v > top) {
        in = false;
        break;
      }
    }
    if (in) ++count;
    int i = 0;
    while (i < n && mu[i] == box) mu[i++] = -box;
    if (i == n) break;
    ++mu[i];
  }
  return count;
}

long height(const Coweight& lambda) { return lambda.sum(); }

std::vector<Coweight> dominant_up_to_height(int rank, int h) {
  std::vector<Coweight> out;
  Coweight mu(rank);
  for (;;) {
    if (mu.sum() <= h) out.push_back(mu);
    int i = 0;
    while (i < rank && mu[i] == h) mu[i++] = 0;
    if (i == rank) break;
    ++mu[i];
  }
  std::sort(out.begin(), out.end(), [](const Coweight& a, const Coweight& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a > b;
  });
  return out;
}

}  // namespace sfab
