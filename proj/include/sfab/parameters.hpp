#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfab/laurent.hpp"
#include "sfab/root_datum.hpp"
#include "sfab/weyl.hpp"

namespace sfab {

enum class Mode { Standard, Exceptional };

// Validated parameters q_0..q_n of a regular affine building, grouped into
// conjugacy classes of affine generators; one z variable per class.
class ParamSystem {
 public:
  static ParamSystem validate(const RootSystem& rs, const std::map<int, mpq_class>& raw);

  int rank() const { return static_cast<int>(q_.size()) - 1; }
  const mpq_class& q(int node) const { return q_[node]; }
  int n_classes() const { return static_cast<int>(class_nodes_.size()); }
  int class_of(int node) const { return class_of_[node]; }
  const std::vector<int>& class_nodes(int k) const { return class_nodes_[k]; }
  // Variable names z<i>, i = smallest node of the class.
  const std::vector<std::string>& names() const { return names_; }
  // q value per class (exact) and z = sqrt(q) per class (floating).
  std::vector<mpq_class> class_q() const;
  std::vector<double> z_values() const;

  Mode mode() const { return mode_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool higman_warning() const { return higman_; }

  // q of a node as a z-monomial exponent: 2 e_class.
  ZExp q_exp(int node) const;
  // tau_alpha for a positive root index, as z-exponent (coefficient 1).
  const ZExp& tau(int root) const { return tau_[root]; }
  // tau of alpha/2 (zero exponent when alpha/2 is not a root).
  ZExp tau_half(const RootSystem& rs, int root) const;
  double tau_value(int root) const;

  ZExp zero_exp() const { return ZExp(n_classes()); }
  QLaurent one() const { return QLaurent::constant(n_classes(), 1); }

 private:
  std::vector<mpq_class> q_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> class_nodes_;
  std::vector<std::string> names_;
  std::vector<ZExp> tau_;
  Mode mode_ = Mode::Standard;
  bool higman_ = false;
  std::vector<std::string> warnings_;
};

// q_w as a z-exponent, read off the reduced word.
ZExp q_w(const WeylElement& w, const ParamSystem& ps);
// q_w = product of tau over positive roots made negative by w^{-1}.
ZExp q_w_from_inversions(const RootSystem& rs, const WeylGroup& W, size_t w, const ParamSystem& ps);

// Sum of q_w (or q_w^{-1}) over the listed elements.
QLaurent poincare(const WeylGroup& W, const std::vector<size_t>& subset, const ParamSystem& ps, bool inverted);
QLaurent poincare(const WeylGroup& W, const ParamSystem& ps, bool inverted);

// q_{t_lambda} = prod over R+ of tau_alpha^<lambda, alpha>.
ZExp q_translation(const RootSystem& rs, const ParamSystem& ps, const Coweight& lambda);
// Same quantity counted hyperplane by hyperplane: each wall H_{alpha;k},
// alpha in R1+, 1 <= k <= <lambda, alpha>, contributes its own parameter.
ZExp q_translation_walls(const RootSystem& rs, const ParamSystem& ps, const Coweight& lambda);

struct LongestElementReport {
  ZExp from_word;
  ZExp from_tau;
  bool ok = false;
};
LongestElementReport longest_element_identity(const RootSystem& rs, const WeylGroup& W, const ParamSystem& ps);

// r^mu = prod_i q_{t_{lambda_i}}^{<mu, alpha_i>/2}; stored per fundamental coweight.
struct RHom {
  std::vector<ZExp> per_fundamental;
  ZExp operator()(const Coweight& mu) const;
};
RHom r_hom(const RootSystem& rs, const ParamSystem& ps);
// r^mu from the root product prod_{alpha in R+} tau_alpha^{<mu,alpha>/2}.
ZExp r_from_roots(const RootSystem& rs, const ParamSystem& ps, const Coweight& mu);

ZExp half(const ZExp& e);  // throws if an entry is odd

}  // namespace sfab
