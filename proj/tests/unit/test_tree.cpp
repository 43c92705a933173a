#include <cmath>

#include "doctest.h"
#include "sfab/spherical.hpp"
#include "sfab/tree.hpp"
#include "unit/support.hpp"

using namespace sfab;
using namespace testing;

namespace {

Vertex random_vertex(const TreeBuilding& t, int max_depth) {
  Vertex v = t.root();
  const int d = uniform(0, max_depth);
  for (int i = 0; i < d; ++i) v = t.child(v, uniform(0, t.branch(v.depth) - 1));
  return v;
}

std::vector<Complex> tree_spherical(double q, Complex u, int kmax) {
  std::vector<Complex> p{1.0, std::sqrt(q) * (u + 1.0 / u) / (q + 1)};
  for (int k = 1; k < kmax; ++k) p.push_back(((q + 1) * p[1] * p[k] - p[k - 1]) / q);
  return p;
}

}  // namespace

TEST_CASE("shapes") {
  const auto t = TreeBuilding::build(2, 2, 3);
  CHECK(t.vertex_count() == 22);
  const auto s = TreeBuilding::build(4, 2, 2);
  CHECK(s.shell(0) == 1);
  CHECK(s.shell(1) == 3);
  CHECK(s.shell(2) == 12);
  CHECK(s.degree(s.root()) == 3);
  CHECK(s.degree(Vertex{1, 0}) == 5);
  const auto line = TreeBuilding::build(1, 1, 6);
  CHECK(line.vertex_count() == 13);
  CHECK_THROWS_AS(TreeBuilding::build(2, 2, 15), ConfigError);
  CHECK_THROWS_AS(TreeBuilding::build(0, 2, 3), ConfigError);
  CHECK_THROWS_AS(TreeBuilding::build(9, 9, 14), ConfigError);
}

TEST_CASE("navigation") {
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {2, 5}}) {
    const auto t = TreeBuilding::build(q0, q1, 8);
    std::vector<Vertex> nb;
    for (int trial = 0; trial < 200; ++trial) {
      const Vertex a = random_vertex(t, 8), b = random_vertex(t, 8);
      const Vertex m = t.meet(a, b);
      CHECK(t.distance(a, b) == a.depth + b.depth - 2 * m.depth);
      CHECK(t.distance(a, b) == t.distance(b, a));
      CHECK(t.ancestor(a, m.depth) == m);
      CHECK(t.ancestor(b, m.depth) == m);
      if (a.depth < 8) {
        t.neighbours(a, nb);
        CHECK(nb.size() == static_cast<size_t>(t.degree(a)));
        for (const auto& v : nb) CHECK(t.distance(a, v) == 1);
      }
      if (a.depth > 0) CHECK(t.parent(a).depth == a.depth - 1);
    }
  }
}

TEST_CASE("sphere counts") {
  for (int q : {2, 3}) {
    const auto t = TreeBuilding::build(q, q, 7);
    uint64_t want = q + 1;
    CHECK(sphere_count(t, t.root(), 0) == 1);
    for (int k = 1; k <= 7; ++k, want *= q) CHECK(sphere_count(t, t.root(), k) == want);
  }
  const auto t = TreeBuilding::build(4, 2, 8);
  // (q1 + 1) q0^k q1^{k-1}
  CHECK(sphere_count(t, t.root(), 1) == 12);
  CHECK(sphere_count(t, t.root(), 2) == 96);
  CHECK(sphere_count(t, t.root(), 4) == 3 * 256 * 8);
}

TEST_CASE("horocycles") {
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}}) {
    const auto t = TreeBuilding::build(q0, q1, 10);
    const End w{Vertex{10, 0}};
    for (int trial = 0; trial < 200; ++trial) {
      auto good = [&] {
        for (;;) {
          const Vertex v = random_vertex(t, 8);
          if (t.good(v)) return v;
        }
      };
      const Vertex x = good(), y = good(), z = good();
      CHECK(horocycle(t, x, x, w) == 0);
      CHECK(horocycle(t, x, y, w) == -horocycle(t, y, x, w));
      CHECK(horocycle(t, x, z, w) == horocycle(t, x, y, w) + horocycle(t, y, z, w));
      CHECK(std::abs(horocycle(t, x, y, w)) * t.unit() <= t.distance(x, y));
    }
    // moving one unit along the ray
    CHECK(std::abs(horocycle(t, t.root(), Vertex{t.unit(), 0}, w)) == 1);
  }
}

TEST_CASE("cylinder masses") {
  auto a1 = tree_context(3, 3);
  CHECK(tau_power(*a1, 1) == 3);
  auto bc1 = tree_context(4, 2);
  CHECK(tau_power(*bc1, 1) == 8);
  CHECK(tau_power(*bc1, -2) == mpq_class(1, 64));

  const auto t = TreeBuilding::build(3, 3, 5);
  CHECK(cylinder_mass(t, t.root(), t.root()) == 1);
  CHECK(cylinder_mass(t, t.root(), Vertex{1, 2}) == mpq_class(1, 4));
  CHECK(cylinder_mass(t, t.root(), Vertex{3, 0}) == mpq_class(1, 36));
  CHECK(cylinder_masses_sum_to_one(t));
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {2, 3}}) {
    const int unit = q0 == q1 ? 1 : 2;
    const auto s = TreeBuilding::build(q0, q1, 3 * unit + 1);
    CHECK(cylinder_masses_sum_to_one(s));
    const auto rep = radon_nikodym_check(s, 2);
    CHECK(rep.checked > 0);
    CHECK(rep.failures == 0);
  }
}

TEST_CASE("boundary integrals give spherical functions") {
  const auto t = TreeBuilding::build(4, 4, 5);
  const End w{Vertex{5, 0}};
  CHECK(std::abs(boundary_integral_hom(t, 1, 2.0, w) - 1.0) < 1e-14);
  CHECK(std::abs(boundary_integral_hom(t, 1, 1.0, w) - 0.8) < 1e-14);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex u = random_point(1)[0];
    const auto p = tree_spherical(4, u, 4);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(boundary_integral_hom(t, k, u, w) - p[k]) < 1e-10 * std::max(1.0, std::abs(p[k])));
  }
  const auto b = TreeBuilding::build(4, 2, 8);
  auto ctx = tree_context(4, 2);
  const End wb{Vertex{8, 0}};
  for (int trial = 0; trial < 5; ++trial) {
    const Complex u = random_point(1)[0];
    for (int k = 0; k <= 3; ++k) {
      const Complex want = macdonald_eval(*ctx, cw({k}), {u});
      CHECK(std::abs(boundary_integral_hom(b, k, u, wb) - want) < 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("operator norm estimates") {
  Context a1("A", 1, equal_q(2, 2));
  for (int k : {1, 2}) {
    const double exact = norm_at_one(a1, cw({k})).value;
    const auto est = extrapolated_norm(2, 2, 11, k);
    CHECK(est.raw <= exact + 1e-12);
    CHECK(est.runs.size() == 3);
    CHECK(std::abs(est.extrapolated - exact) / exact < 0.01);
  }
  const auto t = TreeBuilding::build(2, 2, 6);
  const auto full = power_iteration_norm(t, 1);
  const auto radial = radial_power_iteration(t, 1);
  CHECK(full.rayleigh == doctest::Approx(radial.rayleigh).epsilon(1e-8));
}
