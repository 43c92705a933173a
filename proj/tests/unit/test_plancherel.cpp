#include <cmath>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "sfab/checks.hpp"
#include "sfab/hecke.hpp"
#include "sfab/parallel.hpp"
#include "sfab/plancherel.hpp"
#include "unit/support.hpp"

using namespace sfab;
using namespace testing;

namespace {

Complex unit(double theta) { return std::polar(1.0, theta); }

struct ThreadsEnv {
  explicit ThreadsEnv(const char* v) {
    if (const char* old = std::getenv("SFAB_THREADS")) saved = old;
    setenv("SFAB_THREADS", v, 1);
  }
  ~ThreadsEnv() {
    if (saved.empty())
      unsetenv("SFAB_THREADS");
    else
      setenv("SFAB_THREADS", saved.c_str(), 1);
  }
  std::string saved;
};

}  // namespace

TEST_CASE("density values") {
  Context a1("A", 1, equal_q(2, 4));
  // (1 + 1/q)/2 / |c(i)|^2 with c(i) = (1 + 1/q)/2
  CHECK(density_at(a1, {Complex(0, 1)}) == doctest::Approx(1.6).epsilon(1e-13));
  for (int trial = 0; trial < 20; ++trial) {
    const double th = real(0, 2 * std::numbers::pi);
    const Complex u = unit(th), u2 = u * u;
    const double want = 0.625 * std::norm(1.0 - u2) / std::norm(1.0 - 0.25 * u2);
    CHECK(density_at(a1, {u}) == doctest::Approx(want).epsilon(1e-12));
    CHECK(density_at(a1, {u}) >= 0);
  }

  Context bc1("BC", 1, {{0, 4}, {1, 2}});
  const PlancherelDensity d(bc1);
  CHECK(d.mode() == Mode::Exceptional);
  CHECK(d.b() == doctest::Approx(1 / std::sqrt(2.0)));
  const auto pt = d.boundary_point({});
  for (double off : {1e-4, 1e-5, 1e-6}) {
    const auto lim = d.phi1_limit(pt, off);
    CHECK(std::abs(lim - d.phi1(pt)) < 10 * off * std::abs(d.phi1(pt)));
  }
  CHECK(d.boundary(pt) > 0);
}

TEST_CASE("orthogonality") {
  Context a1("A", 1, equal_q(2, 4));
  CHECK(std::abs(integrate_pairing(a1, cw({1}), cw({1}), 64) - 0.2) < 1e-12);
  CHECK(std::abs(integrate_pairing(a1, cw({2}), cw({1}), 64)) < 1e-12);
  const auto m = orthogonality(a1, dominant_up_to_height(1, 4), 64);
  CHECK(m.max_residual < 1e-12);
  CHECK(m.expected_diagonal[3] == doctest::Approx(1.0 / 80));

  Context bc1("BC", 1, {{0, 4}, {1, 2}});
  // the torus alone misses mass in the exceptional case
  CHECK(std::abs(integrate_pairing(bc1, cw({1}), cw({0}), 128, false)) > 1e-3);
  CHECK(std::abs(integrate_pairing(bc1, cw({1}), cw({0}), 128)) < 1e-10);
  CHECK(std::abs(integrate_pairing(bc1, cw({1}), cw({1}), 128) - 1.0 / 12) < 1e-10);

  for (auto [t, n] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"C", 2}, {"BC", 2}, {"G", 2}}) {
    Context ctx(t, n, generic_parameters(t, n));
    CAPTURE(t);
    CHECK(orthogonality(ctx, dominant_up_to_height(n, 2), 48).max_residual < 1e-8);
  }
  Context ex("BC", 2, {{0, 4}, {1, 2}, {2, 2}});
  CHECK(PlancherelDensity(ex).mode() == Mode::Exceptional);
  CHECK(!ex.ps().higman_warning());
  CHECK(orthogonality(ex, dominant_up_to_height(2, 2), 64).max_residual < 1e-8);
  CHECK(orthogonality(ex, dominant_up_to_height(2, 2), 48, false).max_residual > 1e-4);
  // no orthogonality is promised past the Higman bound
  CHECK(Context("BC", 2, {{0, 8}, {1, 2}, {2, 2}}).ps().higman_warning());
}

TEST_CASE("grid convergence") {
  Context a1("A", 1, equal_q(2, 4));
  const auto r = grid_convergence(a1, dominant_up_to_height(1, 6), {4, 8, 16, 32});
  REQUIRE(r.size() == 4);
  for (size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[i - 1]);
  CHECK(r[3] < 1e-8);
}

TEST_CASE("triple integrals give structure constants") {
  Context a1("A", 1, equal_q(2, 4));
  CHECK(std::abs(integrate_triple(a1, cw({1}), cw({1}), cw({2}), 64) - 0.8) < 1e-12);
  CHECK(std::abs(integrate_triple(a1, cw({1}), cw({1}), cw({0}), 64) - 0.2) < 1e-12);
  CHECK(std::abs(integrate_triple(a1, cw({1}), cw({1}), cw({1}), 64)) < 1e-12);

  for (auto [t, n] : std::vector<std::pair<std::string, int>>{{"C", 2}, {"BC", 1}}) {
    Context ctx(t, n, generic_parameters(t, n));
    const int grid = n == 1 ? 160 : 64;
    const auto z = ctx.ps().z_values();
    const auto ls = dominant_up_to_height(n, 1);
    for (const auto& l : ls)
      for (const auto& m : ls)
        for (const auto& [nu, a] : structure_constants(ctx, l, m).a)
          CHECK(std::abs(integrate_triple(ctx, l, m, nu, grid) - a.value(z)) < 1e-9);
  }
}

TEST_CASE("reduction does not depend on the worker count") {
  auto run = [] {
    return deterministic_sum<double>(100000, [](size_t i) { return 1.0 / (1.0 + static_cast<double>(i) * 0.37); });
  };
  double one, many;
  {
    ThreadsEnv e("1");
    one = run();
  }
  {
    ThreadsEnv e("5");
    many = run();
  }
  CHECK(one == many);
  Context c2("C", 2, {{0, 2}, {1, 3}, {2, 2}});
  Complex p1, p4;
  {
    ThreadsEnv e("1");
    p1 = integrate_pairing(c2, cw({1, 0}), cw({1, 0}), 40);
  }
  {
    ThreadsEnv e("4");
    p4 = integrate_pairing(c2, cw({1, 0}), cw({1, 0}), 40);
  }
  CHECK(p1 == p4);
}

TEST_CASE("spherical functions are bounded by their value at one") {
  for (auto [t, n] : std::vector<std::pair<std::string, int>>{{"A", 1}, {"A", 2}, {"C", 2}}) {
    Context ctx(t, n, generic_parameters(t, n));
    for (const auto& l : dominant_up_to_height(n, 2)) {
      const auto s = sampled_sup(ctx, l, 400, 7);
      CHECK(s.sup <= s.at_one * (1 + 1e-12));
      CHECK(s.at_one > 0);
    }
  }
  Context a1("A", 1, equal_q(2, 4));
  const auto s = sampled_sup(a1, cw({1}), 100);
  CHECK(s.at_one == doctest::Approx(0.8));
}

TEST_CASE("spectrum description") {
  Context a2("A", 2, equal_q(3, 3));
  const auto r = spectrum_description(a2, dominant_up_to_height(2, 1), 50);
  CHECK(r.mode == Mode::Standard);
  CHECK(r.components.size() == 1);
  CHECK(r.norms.size() == 3);
  Context bc1("BC", 1, {{0, 4}, {1, 2}});
  const auto e = spectrum_description(bc1, {cw({1})}, 50);
  CHECK(e.mode == Mode::Exceptional);
  CHECK(e.components.size() == 2);
  CHECK(e.b == doctest::Approx(1 / std::sqrt(2.0)));
}
