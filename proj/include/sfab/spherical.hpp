#pragma once

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "sfab/context.hpp"
#include "sfab/laurent.hpp"
#include "sfab/qratio.hpp"

namespace sfab {

using Complex = std::complex<double>;
using UPoint = std::vector<Complex>;  // u_i = u^{lambda_i}

Complex u_power(const UPoint& u, const Coweight& mu);

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 1 + sign * z^coef * x^exp
struct Binomial {
  int sign = -1;
  ZExp coef;
  Coweight exp;
  TorusPoly poly() const;
  Complex eval(const UPoint& u, const std::vector<double>& z) const;
  bool operator==(const Binomial&) const = default;
};

struct CFactor {
  std::vector<int> roots;  // positive roots merged into this factor
  std::vector<Binomial> num;
  std::vector<Binomial> den;
};

struct CFunction {
  // One factor per positive root, as written in the product formula.
  std::vector<CFactor> raw;
  // alpha and 2*alpha merged with den_{2 alpha} cancelled into num_alpha;
  // trivial factors dropped.  Denominators are all of the form 1 - x^{-beta}.
  std::vector<CFactor> reduced;

  Complex eval(const UPoint& u, const std::vector<double>& z) const;  // throws SingularityError
  Complex eval_reduced(const UPoint& u, const std::vector<double>& z) const;
  // Coroots beta of the reduced denominators.
  std::vector<Coweight> denominator_roots() const;
  TorusPoly numerator_product(int zdim) const;
};

CFunction c_function(const Context& ctx);

// P'_lambda = sum_mu c_mu m_mu with c_lambda = 1, and P_lambda = scale * P'_lambda.
struct SphericalExpansion {
  Coweight lambda;
  std::map<Coweight, QLaurent> coeffs;  // dominant mu -> coefficient of m_mu in P'_lambda
  TorusPoly full;                       // P'_lambda as a Laurent polynomial
  QRatio scale;                         // q_{t_lambda}^{1/2} / N_lambda
  QLaurent coeff(const Coweight& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? QLaurent() : it->second;
  }
};

std::shared_ptr<const SphericalExpansion> macdonald_expand(const Context& ctx, const Coweight& lambda);

// Direct Weyl-sum evaluation; falls back to the expansion near singular u.
Complex macdonald_eval(const Context& ctx, const Coweight& lambda, const UPoint& u);
// Evaluation through the expansion only.
Complex expansion_eval(const Context& ctx, const Coweight& lambda, const UPoint& u);
inline Complex macdonald_hom(const Context& ctx, const Coweight& lambda, const UPoint& u) {
  return macdonald_eval(ctx, lambda, u);
}

struct NormAtOne {
  QRatio exact;  // P_lambda(1) as a ratio in the z variables
  double value = 0;
};
NormAtOne norm_at_one(const Context& ctx, const Coweight& lambda);

// Numeric P_lambda (not P'_lambda) ready for repeated evaluation.
NumericTorusPoly numeric_spherical(const Context& ctx, const Coweight& lambda);

}  // namespace sfab
