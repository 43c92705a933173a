#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfab/lattice.hpp"

namespace sfab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E, F, G, BC };

struct RootTag {};
// Coordinates of a root in the basis of simple roots.
using RootCoords = IntTuple<RootTag>;

struct Root {
  RootCoords simple;
  std::vector<mpq_class> ambient;
  Coweight coroot;  // alpha-check in coweight coordinates
  mpq_class norm2;
  int height = 0;
  bool in_r1 = true;  // 2*alpha not a root
  bool in_r2 = true;  // alpha/2 not a root
  bool in_r3() const { return in_r1 && in_r2; }
};

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);
  static RootSystem build(const std::string& type, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool reduced() const { return family_ != Family::BC; }

  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& simple_root(int i) const { return pos_[simple_idx_[i]]; }
  int simple_index(int i) const { return simple_idx_[i]; }
  // a(i, j) = <alpha_j, alpha_i-check>
  int cartan(int i, int j) const { return cartan_[i][j]; }

  int pairing(const Coweight& mu, const Root& a) const;
  int pairing(const Coweight& mu, int root_index) const { return pairing(mu, pos_[root_index]); }

  // Index of the positive root with these simple coordinates, or -1.
  int find_root(const RootCoords& c) const;
  // Index of the positive root whose coroot is c, or -1.
  int find_by_coroot(const Coweight& c) const;
  // Index of alpha/2 and 2*alpha, or -1.
  int half_of(int idx) const { return half_[idx]; }
  int double_of(int idx) const { return double_[idx]; }

  int highest_root() const { return highest_; }
  std::vector<int> marks() const;

  // Affine diagram on nodes 0..n: Coxeter exponents (0 means infinity).
  const std::vector<std::vector<int>>& affine_coxeter() const { return affine_m_; }

  // Basis of the coroot lattice cone Q+ in coweight coordinates.
  const std::vector<Coweight>& coroot_basis() const { return coroot_basis_; }
  // Rational coefficients of v in coroot_basis(); v in Q+ iff they are
  // nonnegative integers.
  std::vector<mpq_class> coroot_coefficients(const Coweight& v) const;
  bool in_coroot_cone(const Coweight& v) const;
  bool in_coroot_lattice(const Coweight& v) const;
  bool precedes(const Coweight& mu, const Coweight& lambda) const { return in_coroot_cone(lambda - mu); }

  // Linear functional <v, 2 rho>; strictly positive on Q+ \ {0}.
  long rho_height(const Coweight& v) const;

  Coweight zero() const { return Coweight(rank_); }
  Coweight fundamental(int i) const { return Coweight::unit(rank_, i); }
  Coweight rho_check() const;  // sum of fundamental coweights

  // Simple reflection on coweight coordinates.
  Coweight reflect(int i, const Coweight& mu) const;
  Coweight dominant_rep(const Coweight& mu) const;

  // Order of W0 from the classification.
  unsigned long long classical_weyl_order() const;
  size_t classical_positive_count() const;

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<Root> pos_;
  std::vector<int> simple_idx_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> half_, double_;
  int highest_ = -1;
  std::vector<std::vector<int>> affine_m_;
  std::vector<Coweight> coroot_basis_;
  std::vector<std::vector<mpq_class>> coroot_basis_inv_;  // columns solve v -> coefficients
  std::map<RootCoords, int> by_simple_;
  std::map<Coweight, int> by_coroot_;
  std::vector<long> rho_weights_;
};

Family parse_family(const std::string& type, int& rank_out);
std::string family_name(Family f);

}  // namespace sfab
