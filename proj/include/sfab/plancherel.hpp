#pragma once

#include <string>
#include <vector>

#include "sfab/spherical.hpp"

namespace sfab {

// Density of the Plancherel measure for the spherical algebra.  On the
// torus u_i = e^{i theta_i} it is W0(q^{-1})/|W0| / (c(u) c(u^{-1})); in the
// exceptional case there is a second component t_1 = -b, t_2..t_n on the
// torus, weighted by W0(q^{-1})/|W0'| / phi_1(u).
class PlancherelDensity {
 public:
  explicit PlancherelDensity(const Context& ctx);

  Mode mode() const { return mode_; }
  int rank() const { return rank_; }
  double b() const { return b_; }
  double w0_inverse() const { return w0_inv_; }
  double w0_order() const { return w0_order_; }
  double boundary_group_order() const { return w0p_order_; }

  // c(u) c(u^{-1}), and the same with the factor 1 + b^{-1} t_1 removed.
  Complex phi0(const UPoint& u) const;
  Complex phi1(const UPoint& u) const;
  // phi0 / (1 + b^{-1} t_1) evaluated at t_1 = -b (1 + offset).
  Complex phi1_limit(const UPoint& u, double offset) const;

  // Density on the torus and on the extra component; both take u in
  // fundamental-coweight coordinates.
  double main(const UPoint& u) const;
  double boundary(const UPoint& u) const;

  // u from t_1 = -b and the remaining t_k (BC_n coordinates t_k = u^{e_k}).
  UPoint boundary_point(const std::vector<Complex>& t_rest) const;

 private:
  Complex eval_product(const UPoint& u, bool skip) const;

  Mode mode_;
  int rank_;
  std::vector<double> z_;
  std::vector<CFactor> factors_;
  double w0_inv_ = 1, w0_order_ = 1, w0p_order_ = 1, b_ = 0;
  int skip_factor_ = -1, skip_binomial_ = -1;
};

double density_at(const Context& ctx, const UPoint& u);

// Equispaced tensor grid of n points per dimension on the torus.
struct QuadratureGrid {
  int points = 0;
  int dim = 0;
  size_t size() const;
  UPoint node(size_t index) const;
};

struct PairingMatrix {
  std::vector<Coweight> lambdas;
  std::vector<std::vector<Complex>> value;  // integral of P_a conj(P_b)
  std::vector<double> expected_diagonal;    // 1 / N_a
  double max_residual = 0;
};

// All integrals over the listed coweights.  `include_boundary` adds the
// extra component in the exceptional case.
PairingMatrix orthogonality(const Context& ctx, const std::vector<Coweight>& lambdas, int points,
                            bool include_boundary = true);
Complex integrate_pairing(const Context& ctx, const Coweight& lambda, const Coweight& mu, int points,
                          bool include_boundary = true);
// N_nu times the integral of P_lambda P_mu conj(P_nu).
Complex integrate_triple(const Context& ctx, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                         int points, bool include_boundary = true);

// Largest orthogonality residual for each grid size.
std::vector<double> grid_convergence(const Context& ctx, const std::vector<Coweight>& lambdas,
                                     const std::vector<int>& grids);

struct SupSample {
  Coweight lambda;
  double at_one = 0;     // P_lambda(1)
  double sup = 0;        // max |P_lambda(u)| over the samples
  double near_one = 0;   // max |P_lambda(u)| over samples within 1e-3 of u = 1
  size_t samples = 0;
};
SupSample sampled_sup(const Context& ctx, const Coweight& lambda, size_t samples, unsigned long long seed = 1);

struct SpectrumReport {
  Mode mode;
  std::vector<std::string> components;
  double b = 0;
  std::vector<SupSample> norms;
};
SpectrumReport spectrum_description(const Context& ctx, const std::vector<Coweight>& lambdas, size_t samples);

}  // namespace sfab
