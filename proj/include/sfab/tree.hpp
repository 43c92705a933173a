#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "sfab/context.hpp"

namespace sfab {

// Vertex of the truncated tree: depth from the root and index within the
// shell.  Children of (d, i) are (d + 1, i * branch(d) + c).
struct Vertex {
  int depth = 0;
  uint64_t index = 0;
  auto operator<=>(const Vertex&) const = default;
};

// Truncated (q0 + 1, q1 + 1) semi-homogeneous tree rooted at a type-0
// vertex.  Type-0 vertices have q1 + 1 neighbours, type-1 vertices q0 + 1.
// q0 == q1 is read as an A1 building (every vertex good, unit one edge);
// otherwise as BC1 (type-0 vertices good, unit two edges).  The tree is
// implicit: vertices are enumerated, never stored.
class TreeBuilding {
 public:
  static constexpr uint64_t kMaxVertices = 200'000'000;
  static TreeBuilding build(int q0, int q1, int depth);

  int q0() const { return q0_; }
  int q1() const { return q1_; }
  int depth() const { return depth_; }
  bool is_a1() const { return q0_ == q1_; }
  int unit() const { return is_a1() ? 1 : 2; }
  uint64_t shell(int d) const { return shell_[d]; }
  uint64_t vertex_count() const;

  int type(const Vertex& v) const { return v.depth % 2; }
  bool good(const Vertex& v) const { return is_a1() || type(v) == 0; }
  int degree(const Vertex& v) const { return type(v) == 0 ? q1_ + 1 : q0_ + 1; }
  // Children of v (vertices one level deeper).
  int branch(int d) const { return d == 0 ? q1_ + 1 : (d % 2 ? q0_ : q1_); }

  Vertex root() const { return {0, 0}; }
  Vertex parent(const Vertex& v) const;
  Vertex child(const Vertex& v, int c) const;
  Vertex ancestor(Vertex v, int d) const;
  void neighbours(const Vertex& v, std::vector<Vertex>& out) const;

  int distance(Vertex a, Vertex b) const;
  Vertex meet(Vertex a, Vertex b) const;  // last common ancestor

  // Good vertices at graph distance `steps` from v, inside the truncation.
  void for_each_at_distance(const Vertex& v, int steps, const std::function<void(const Vertex&)>& f) const;

 private:
  int q0_ = 1, q1_ = 1, depth_ = 0;
  std::vector<uint64_t> shell_;
};

// An end is the ray from the root through a leaf.
struct End {
  Vertex leaf;
};

// |V_k(x)|, counted by walking the tree.
uint64_t sphere_count(const TreeBuilding& t, const Vertex& x, int k);

// h(x, y; w) in units of the fundamental coweight, from the Busemann
// difference at the deepest good vertex of the ray.
int horocycle(const TreeBuilding& t, const Vertex& x, const Vertex& y, const End& w);

// Census of h(root, y; w) over y in V_k(root).
std::map<int, uint64_t> horocycle_census(const TreeBuilding& t, int k, const End& w);

// (N_nu / (N_lambda N_mu)) |V_lambda(x) cap V_mu(y)|, x the root and y the
// first vertex of V_nu(x).
mpq_class structure_count(const TreeBuilding& t, int lambda, int mu, int nu);

// Mass nu_x of the cylinder of ends whose ray from x passes through z.
mpq_class cylinder_mass(const TreeBuilding& t, const Vertex& x, const Vertex& z);

// Root system and parameters the tree realizes (A1 or BC1).
std::unique_ptr<Context> tree_context(int q0, int q1);
// prod over positive roots of tau^{<h lambda_1, alpha>}, exactly.
mpq_class tau_power(const Context& ctx, int h);

struct RadonNikodymReport {
  uint64_t checked = 0;
  uint64_t failures = 0;
  mpq_class first_bad_ratio, first_bad_expected;
};
// For x among the root and its good neighbours, every good y within
// lambda-distance `max_k` of x, every end and every cylinder Omega(z) past
// both x and y: nu_y / nu_x == tau_power(h(x, y; w)).
RadonNikodymReport radon_nikodym_check(const TreeBuilding& t, int max_k);

// Levels of the end space: masses nu_root of the cylinders at each depth
// sum to one.
bool cylinder_masses_sum_to_one(const TreeBuilding& t);

// (1/N_k) sum over z in V_k(root) of (u r)^{h(root, z; w)}.
std::complex<double> boundary_integral_hom(const TreeBuilding& t, int k, std::complex<double> u, const End& w);

// Good vertices on the geodesic from the root to the first vertex of V_k.
int geodesic_good_count(const TreeBuilding& t, int k);

struct PowerIteration {
  double rayleigh = 0;
  int iterations = 0;
  int ball = 0;  // radius of the support, in coweight units
};
// Rayleigh quotient of A_k compressed to good vertices within radius
// depth/unit - k of the root, from power iteration of I + A_k on every vertex.
PowerIteration power_iteration_norm(const TreeBuilding& t, int k, int max_iters = 400, double tol = 1e-14);
// Same iteration restricted to functions of the distance to the root; the
// top eigenvector is of this form.  Operator entries are counted on the tree.
PowerIteration radial_power_iteration(const TreeBuilding& t, int k, int max_iters = 2000, double tol = 1e-15);

struct NormEstimate {
  double raw = 0;           // Rayleigh quotient at the largest ball
  double extrapolated = 0;  // fit of rho - C / (m + c)^2 over three radii
  std::vector<PowerIteration> runs;
};
// Runs on trees of depth D - 2 unit, D - unit, D.
NormEstimate extrapolated_norm(int q0, int q1, int depth, int k);

}  // namespace sfab
