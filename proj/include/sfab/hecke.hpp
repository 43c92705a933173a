#pragma once

#include <map>
#include <vector>

#include "sfab/context.hpp"
#include "sfab/qratio.hpp"

namespace sfab {

// N_lambda = W0(q^{-1}) / W0lambda(q^{-1}) * q_{t_lambda}
QLaurent n_lambda(const Context& ctx, const Coweight& lambda);
// N_lambda = W0(q) / W0lambda(q) * q_{w_lambda}, with q_{w_lambda} taken
// from the wall count of t_lambda and the longest elements.
QLaurent n_lambda_first(const Context& ctx, const Coweight& lambda);

struct SaturatedSet {
  Coweight lambda;
  std::vector<Coweight> dominant_part;
  std::vector<Coweight> full(const RootSystem& rs) const;  // union of orbits, sorted
};
SaturatedSet saturated_set(const RootSystem& rs, const Coweight& lambda);

enum class TieBreak { Lexicographic, ReverseLexicographic };

// Coefficients e_{lambda,mu;nu} of P'_lambda P'_mu in the P' basis.
std::map<Coweight, QLaurent> product_expansion(const Context& ctx, const Coweight& lambda, const Coweight& mu,
                                               TieBreak order = TieBreak::Lexicographic);
// Single coefficient e_{lambda,mu;nu}, peeling only the interval [nu, lambda+mu].
QLaurent product_coefficient(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu);

// a = q_{t_lambda}^{1/2} q_{t_mu}^{1/2} q_{t_nu}^{-1/2} N_nu / (N_lambda N_mu) * e
QRatio a_from_e(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                const QLaurent& e);

struct StructureRow {
  Coweight lambda, mu;
  std::map<Coweight, QRatio> a;  // nu -> a_{lambda,mu;nu}
};
StructureRow structure_constants(const Context& ctx, const Coweight& lambda, const Coweight& mu,
                                 TieBreak order = TieBreak::Lexicographic);
QRatio structure_constant(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu);

// nu = N * rho-check with minimal N such that nu - Pi_lambda lies in P++.
Coweight choose_nu_far(const RootSystem& rs, const Coweight& lambda, int extra = 0);

struct PhiLambda {
  Coweight lambda, nu;
  std::map<Coweight, QRatio> coeffs;  // mu in Pi_lambda -> coefficient of u^mu
};
PhiLambda phi_lambda(const Context& ctx, const Coweight& lambda, int extra = 0);

struct HorocycleDistribution {
  Coweight lambda;
  std::map<Coweight, QRatio> counts;  // mu -> n_lambda(mu)
};
HorocycleDistribution horocycle_distribution(const Context& ctx, const Coweight& lambda, int extra = 0);

// prod_i (<lambda, alpha_i> + 1)
unsigned long long convex_hull_count(const Coweight& lambda);
// |{mu in P+ : lambda - mu in P+}| by enumeration.
unsigned long long dominant_interval_count(const Coweight& lambda);
// Lattice points of conv{0, lambda}: coweights in every half-space
// {<z, alpha> <= k} or {<z, alpha> >= k}, alpha in R+, containing 0 and lambda.
unsigned long long hull_lattice_count(const RootSystem& rs, const Coweight& lambda);

long height(const Coweight& lambda);
// Dominant coweights of height <= h, in increasing height then lex order.
std::vector<Coweight> dominant_up_to_height(int rank, int h);

}  // namespace sfab
