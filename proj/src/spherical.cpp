#include "sfab/spherical.hpp"

#include <cmath>
#include <set>

#include "sfab/hecke.hpp"

namespace sfab {

Complex u_power(const UPoint& u, const Coweight& mu) {
  Complex r = 1.0;
  for (int i = 0; i < mu.size(); ++i)
    if (mu[i]) r *= ipow(u[i], mu[i]);
  return r;
}

TorusPoly Binomial::poly() const {
  const int zdim = coef.size();
  TorusPoly p = TorusPoly::constant(exp.size(), QLaurent::constant(zdim, 1));
  p.add_term(exp, QLaurent(coef, sign));
  return p;
}

Complex Binomial::eval(const UPoint& u, const std::vector<double>& z) const {
  double c = sign;
  for (int i = 0; i < coef.size(); ++i)
    if (coef[i]) c *= std::pow(z[i], coef[i]);
  return 1.0 + c * u_power(u, exp);
}

namespace {

constexpr double kSingular = 1e-9;

Complex eval_factors(const std::vector<CFactor>& fs, const UPoint& u, const std::vector<double>& z) {
  Complex r = 1.0;
  for (const auto& f : fs) {
    for (const auto& b : f.num) r *= b.eval(u, z);
    for (const auto& b : f.den) {
      Complex d = b.eval(u, z);
      if (std::abs(d) < kSingular) throw SingularityError("c-function denominator vanishes");
      r /= d;
    }
  }
  return r;
}

}  // namespace

Complex CFunction::eval(const UPoint& u, const std::vector<double>& z) const { return eval_factors(raw, u, z); }
Complex CFunction::eval_reduced(const UPoint& u, const std::vector<double>& z) const {
  return eval_factors(reduced, u, z);
}

std::vector<Coweight> CFunction::denominator_roots() const {
  std::vector<Coweight> r;
  for (const auto& f : reduced)
    for (const auto& b : f.den) r.push_back(-b.exp);
  return r;
}

TorusPoly CFunction::numerator_product(int zdim) const {
  TorusPoly p;
  for (const auto& f : reduced)
    for (const auto& b : f.num) {
      if (p.is_zero()) p = TorusPoly::constant(b.exp.size(), QLaurent::constant(zdim, 1));
      p = p * b.poly();
    }
  return p;
}

CFunction c_function(const Context& ctx) {
  const auto& rs = ctx.rs();
  const auto& ps = ctx.ps();
  const auto& roots = rs.positive_roots();
  CFunction cf;
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    ZExp th = half(ps.tau_half(rs, k));
    CFactor f;
    f.roots = {k};
    f.num.push_back(Binomial{-1, -ps.tau(k) - th, -roots[k].coroot});
    f.den.push_back(Binomial{-1, -th, -roots[k].coroot});
    cf.raw.push_back(f);
  }
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    if (rs.half_of(k) >= 0) continue;
    CFactor f = cf.raw[k];
    const int d = rs.double_of(k);
    if (d >= 0) {
      // num_alpha / den_{2 alpha} = 1 + tau_alpha^{-1/2} x^{-(2 alpha)-check}.
      const CFactor& g = cf.raw[d];
      Binomial extra{1, -half(ps.tau(k)), g.den[0].exp};
      if (!(extra.poly() * g.den[0].poly() == f.num[0].poly()))
        throw std::logic_error("c-function cancellation failed for a doubled root");
      f.roots.push_back(d);
      f.num = {g.num[0], extra};
    }
    // Drop binomials common to numerator and denominator.
    for (auto it = f.num.begin(); it != f.num.end();) {
      auto jt = std::find(f.den.begin(), f.den.end(), *it);
      if (jt != f.den.end()) {
        f.den.erase(jt);
        it = f.num.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& b : f.den)
      if (!b.coef.is_zero()) throw std::logic_error("reduced c-function denominator carries a parameter");
    if (!f.num.empty() || !f.den.empty()) cf.reduced.push_back(f);
  }
  return cf;
}

struct SymmetrizerData {
  std::vector<Coweight> betas;  // reduced denominator roots, positive
  std::vector<int> sign;        // per Weyl element
  std::vector<Coweight> shift;  // per Weyl element: -sum of positive gamma with w(beta) = -gamma
  std::vector<TorusPoly> wnum;  // per Weyl element: w(numerator product)
  CFunction cf;
};

const SymmetrizerData& Context::symmetrizer() const {
  std::call_once(sym_once_, [this] {
    auto data = std::make_shared<SymmetrizerData>();
    const auto& W = weyl();
    data->cf = c_function(*this);
    data->betas = data->cf.denominator_roots();
    std::set<Coweight> bset(data->betas.begin(), data->betas.end());
    TorusPoly num = data->cf.numerator_product(zdim());
    if (num.is_zero()) num = TorusPoly::constant(rs_.rank(), QLaurent::constant(zdim(), 1));
    for (size_t w = 0; w < W.size(); ++w) {
      int sg = 1;
      Coweight sh(rs_.rank());
      for (const auto& b : data->betas) {
        Coweight wb = W[w](b);
        if (bset.count(wb)) continue;
        if (!bset.count(-wb)) throw std::logic_error("denominator roots are not Weyl-stable");
        sg = -sg;
        sh -= -wb;
      }
      data->sign.push_back(sg);
      data->shift.push_back(sh);
      const IntMatrix& m = W[w].mat;
      data->wnum.push_back(num.map_keys([&](const Coweight& c) { return m.apply(c); }));
    }
    sym_ = data;
  });
  return *sym_;
}

std::shared_ptr<const SphericalExpansion> macdonald_expand(const Context& ctx, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("macdonald_expand needs a dominant coweight, got " + lambda.str());
  if (auto e = ctx.find_expansion(lambda)) return e;
  const auto& rs = ctx.rs();
  const auto& W = ctx.weyl();
  const auto& sym = ctx.symmetrizer();
  const int n = rs.rank();

  // Sum over W of w(x^lambda c) placed over the common denominator D.
  TorusPoly sd;
  for (size_t w = 0; w < W.size(); ++w) {
    TorusPoly t = sym.wnum[w].shifted(W[w](lambda) + sym.shift[w]);
    if (sym.sign[w] > 0)
      sd += t;
    else
      sd -= t;
  }
  TorusPoly s = sd;
  const QLaurent one = QLaurent::constant(ctx.zdim(), 1);
  for (const auto& b : sym.betas) {
    TorusPoly f = TorusPoly::constant(n, one);
    f.sub_term(-b, one);
    s = exact_divide(s, f);
  }

  auto out = std::make_shared<SphericalExpansion>();
  out->lambda = lambda;
  const QLaurent stab = poincare(W, W.stabilizer(lambda), ctx.ps(), true);
  for (const auto& [mu, c] : s.terms()) out->full.add_term(mu, exact_divide(c, stab));
  for (const auto& [mu, c] : out->full.terms())
    if (is_dominant(mu)) {
      if (!rs.precedes(mu, lambda))
        throw std::logic_error("triangularity violated: x^" + mu.str() + " in P'_" + lambda.str());
      out->coeffs.emplace(mu, c);
    }
  if (!(out->coeff(lambda) == one)) throw std::logic_error("leading coefficient of P'_" + lambda.str() + " is not 1");
  for (int i = 0; i < n; ++i) {
    TorusPoly r = out->full.map_keys([&](const Coweight& c) { return rs.reflect(i, c); });
    if (!(r == out->full)) throw std::logic_error("P'_" + lambda.str() + " is not Weyl-invariant");
  }
  ZExp t = q_translation(rs, ctx.ps(), lambda);
  out->scale = QRatio(QLaurent(half(t), 1), n_lambda(ctx, lambda));
  return ctx.store_expansion(out);
}

Complex expansion_eval(const Context& ctx, const Coweight& lambda, const UPoint& u) {
  return numeric_spherical(ctx, lambda)(u);
}

NumericTorusPoly numeric_spherical(const Context& ctx, const Coweight& lambda) {
  auto e = macdonald_expand(ctx, lambda);
  auto z = ctx.ps().z_values();
  NumericTorusPoly p = numeric(e->full, z);
  const double s = e->scale.value(z);
  for (auto& c : p.coeffs) c *= s;
  return p;
}

Complex macdonald_eval(const Context& ctx, const Coweight& lambda, const UPoint& u) {
  if (!is_dominant(lambda)) throw std::invalid_argument("macdonald_eval needs a dominant coweight");
  const auto& W = ctx.weyl();
  const auto& cf = ctx.symmetrizer().cf;
  const auto z = ctx.ps().z_values();
  Complex sum = 0.0;
  try {
    for (size_t w = 0; w < W.size(); ++w) {
      Complex term = u_power(u, W[w](lambda));
      for (const auto& f : cf.raw) {
        for (const auto& b : f.num) {
          Binomial wb = b;
          wb.exp = W[w](b.exp);
          term *= wb.eval(u, z);
        }
        for (const auto& b : f.den) {
          Binomial wb = b;
          wb.exp = W[w](b.exp);
          Complex d = wb.eval(u, z);
          if (std::abs(d) < kSingular) throw SingularityError("singular point");
          term /= d;
        }
      }
      sum += term;
    }
  } catch (const SingularityError&) {
    return expansion_eval(ctx, lambda, u);
  }
  const double qt = std::sqrt(eval(QLaurent(q_translation(ctx.rs(), ctx.ps(), lambda), 1), z));
  return sum / (qt * eval(ctx.w0_poincare(true), z));
}

NormAtOne norm_at_one(const Context& ctx, const Coweight& lambda) {
  auto e = macdonald_expand(ctx, lambda);
  QLaurent total;
  for (const auto& [mu, c] : e->coeffs) total += c.scaled(mpq_class(static_cast<unsigned long>(orbit_size(ctx.rs(), mu))));
  NormAtOne r;
  r.exact = QRatio::from(total, ctx.zdim()) * e->scale;
  r.value = r.exact.value(ctx.ps().z_values());
  return r;
}

}  // namespace sfab
