#include "sfab/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "sfab/hecke.hpp"
#include "sfab/plancherel.hpp"
#include "sfab/spherical.hpp"
#include "sfab/tree.hpp"

namespace sfab {

namespace {

using Q = std::map<int, mpq_class>;

struct Config {
  std::string type;
  int rank;
  Q q;
  std::string label() const {
    std::string s = type + std::to_string(rank) + " q=";
    for (const auto& [i, v] : q) s += (i ? "," : "") + v.get_str();
    return s;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Nonnegative integer value of an exact ratio at the given q, if it is one.
bool integer_value(const QRatio& r, const std::vector<mpq_class>& q, mpz_class& out) {
  const RadicalNumber v = r.exact_value(q);
  if (!v.is_rational()) return false;
  const mpq_class x = v.rational_part();
  if (x.get_den() != 1 || sgn(x) < 0) return false;
  out = x.get_num();
  return true;
}

mpz_class integer_of(const QLaurent& p, const std::vector<mpq_class>& q) {
  const RadicalNumber v = eval_exact(p, q);
  if (!v.is_rational() || v.rational_part().get_den() != 1) throw std::logic_error("count is not an integer");
  return v.rational_part().get_num();
}

// Criterion 1: both vertex-count formulas agree symbolically.
void dual_counts(CheckResult& r, Suite suite) {
  const std::vector<std::pair<std::string, int>> types = {{"A", 1}, {"A", 2}, {"A", 3}, {"C", 2}, {"C", 3},
                                                          {"B", 3}, {"G", 2}, {"BC", 1}, {"BC", 2}};
  const int hmax = suite == Suite::Full ? 6 : 3;
  size_t checked = 0;
  for (const auto& [type, n] : types) {
    Context ctx(type, n, generic_parameters(type, n));
    for (const auto& l : dominant_up_to_height(n, hmax)) {
      ++checked;
      if (!(n_lambda(ctx, l) == n_lambda_first(ctx, l)))
        r.fail("vertex count formulas differ for " + ctx.rs().name() + " at lambda=" + l.str());
    }
  }
  r.detail = std::to_string(checked) + " coweights, height <= " + std::to_string(hmax);
}

// Criterion 2: sphere sizes in explicit trees.
void tree_counts(CheckResult& r, Suite suite) {
  const int kmax = suite == Suite::Full ? 6 : 4;
  size_t checked = 0;
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {2, 4}}) {
    const auto t = TreeBuilding::build(q0, q1, suite == Suite::Full ? 14 : 2 * kmax + 2);
    auto ctx = tree_context(q0, q1);
    const auto q = ctx->ps().class_q();
    const Vertex off_root{2, 1};
    for (int k = 0; k <= kmax; ++k) {
      const mpz_class n = integer_of(n_lambda(*ctx, Coweight{k}), q);
      mpz_class formula = 1;
      if (k > 0) {
        mpz_class a, b;
        if (t.is_a1()) {
          mpz_ui_pow_ui(a.get_mpz_t(), q0, k - 1);
          formula = (q0 + 1) * a;
        } else {
          mpz_ui_pow_ui(a.get_mpz_t(), q0, k);
          mpz_ui_pow_ui(b.get_mpz_t(), q1, k - 1);
          formula = (q1 + 1) * a * b;
        }
      }
      for (const Vertex& x : {t.root(), off_root}) {
        ++checked;
        const mpz_class c(static_cast<unsigned long>(sphere_count(t, x, k)));
        if (c != n || c != formula)
          r.fail("sphere count " + c.get_str() + " vs N=" + n.get_str() + " formula=" + formula.get_str() +
                 " for q=(" + std::to_string(q0) + "," + std::to_string(q1) + ") k=" + std::to_string(k));
      }
    }
  }
  r.detail = std::to_string(checked) + " spheres, k <= " + std::to_string(kmax);
}

std::vector<std::pair<Config, int>> main_sweep(Suite suite) {
  if (suite == Suite::Quick)
    return {{{"A", 1, {{0, 3}, {1, 3}}}, 2}, {{"A", 2, {{0, 2}, {1, 2}, {2, 2}}}, 2},
            {{"BC", 1, {{0, 4}, {1, 2}}}, 2}};
  return {{{"A", 1, {{0, 3}, {1, 3}}}, 4},
          {{"A", 2, {{0, 2}, {1, 2}, {2, 2}}}, 3},
          {{"C", 2, {{0, 3}, {1, 2}, {2, 3}}}, 3},
          {{"BC", 1, {{0, 4}, {1, 2}}}, 3},
          {{"BC", 1, {{0, 2}, {1, 3}}}, 3}};
}

// Criterion 3: the boundary-integral homomorphism equals P_lambda.
void boundary_integral_check(CheckResult& r, Suite suite) {
  size_t checked = 0;
  for (const auto& [cfg, hmax] : main_sweep(suite)) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    for (const auto& l : dominant_up_to_height(cfg.rank, hmax)) {
      ++checked;
      const auto p = macdonald_expand(ctx, l);
      const auto phi = phi_lambda(ctx, l);
      const auto phi2 = phi_lambda(ctx, l, 1);
      for (const auto& [mu, c] : phi.coeffs) {
        const QRatio want = p->scale * QRatio::from(p->full.coeff(mu), ctx.zdim());
        if (!(c == want)) r.fail("phi_lambda != P_lambda at lambda=" + l.str() + " mu=" + mu.str() + " (" + cfg.label() + ")");
        auto it = phi2.coeffs.find(mu);
        if (it == phi2.coeffs.end() || !(it->second == c))
          r.fail("phi_lambda changes with nu at lambda=" + l.str() + " mu=" + mu.str() + " (" + cfg.label() + ")");
      }
      for (const auto& [mu, c] : p->full.terms())
        if (!phi.coeffs.count(mu)) r.fail("P_lambda term outside the saturated set at lambda=" + l.str() + " mu=" + mu.str());
    }
  }
  r.detail = std::to_string(checked) + " coweights, exact";
}

// Criterion 4: horocycle counts are nonnegative integers summing to N_lambda.
void horocycle_counts(CheckResult& r, Suite suite) {
  size_t checked = 0, tree_checked = 0;
  for (const auto& [cfg, hmax] : main_sweep(suite)) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    const auto q = ctx.ps().class_q();
    for (const auto& l : dominant_up_to_height(cfg.rank, hmax)) {
      const auto h = horocycle_distribution(ctx, l);
      QRatio total;
      mpz_class sum = 0;
      for (const auto& [mu, c] : h.counts) {
        ++checked;
        mpz_class v;
        QLaurent poly;
        bool integral_exponents = c.as_polynomial(poly);
        for (const auto& [e, coef] : poly.terms())
          for (int i = 0; i < e.size(); ++i) integral_exponents = integral_exponents && e[i] % 2 == 0;
        if (!integer_value(c, q, v) || !integral_exponents)
          r.fail("horocycle count not a nonnegative integer polynomial in q at lambda=" + l.str() + " mu=" + mu.str() + " (" + cfg.label() + "): " + c.text(ctx.names()));
        else
          sum += v;
        total = total.num.is_zero() ? c : total + c;
      }
      const QLaurent n = n_lambda(ctx, l);
      if (!(total == QRatio::from(n, ctx.zdim())) || sum != integer_of(n, q))
        r.fail("horocycle counts do not sum to N_lambda at lambda=" + l.str() + " (" + cfg.label() + ")");

      if (cfg.rank == 1) {
        const int q0 = static_cast<int>(cfg.q.at(0).get_num().get_si());
        const int q1 = static_cast<int>(cfg.q.at(1).get_num().get_si());
        const int unit = q0 == q1 ? 1 : 2;
        const int k = l[0];
        const auto t = TreeBuilding::build(q0, q1, (k + 1) * unit);
        for (uint64_t leaf : {uint64_t{0}, t.shell(t.depth()) - 1}) {
          ++tree_checked;
          const auto census = horocycle_census(t, k, End{{t.depth(), leaf}});
          for (const auto& [mu, c] : h.counts) {
            mpz_class v;
            integer_value(c, q, v);
            auto it = census.find(mu[0]);
            const mpz_class got(static_cast<unsigned long>(it == census.end() ? 0 : it->second));
            if (got != v)
              r.fail("tree census " + got.get_str() + " != " + v.get_str() + " at lambda=" + l.str() + " mu=" + mu.str() + " (" + cfg.label() + ")");
          }
        }
      }
    }
  }
  r.detail = std::to_string(checked) + " counts, " + std::to_string(tree_checked) + " tree censuses";
}

std::vector<Config> standard_configs(Suite suite) {
  std::vector<Config> c;
  const std::vector<int> qs = suite == Suite::Full ? std::vector<int>{2, 3, 4} : std::vector<int>{3};
  for (int q : qs) {
    c.push_back({"A", 1, {{0, q}, {1, q}}});
    c.push_back({"A", 2, {{0, q}, {1, q}, {2, q}}});
    c.push_back({"C", 2, {{0, q}, {1, q}, {2, q}}});
    c.push_back({"G", 2, {{0, q}, {1, q}, {2, q}}});
  }
  c.push_back({"C", 2, {{0, 2}, {1, 3}, {2, 2}}});
  c.push_back({"G", 2, {{0, 2}, {1, 3}, {2, 2}}});
  c.push_back({"BC", 1, {{0, 2}, {1, 3}}});
  c.push_back({"BC", 2, {{0, 2}, {1, 2}, {2, 3}}});
  if (suite == Suite::Full) {
    c.push_back({"BC", 1, {{0, 2}, {1, 4}}});
    c.push_back({"BC", 1, {{0, 3}, {1, 4}}});
    c.push_back({"BC", 2, {{0, 2}, {1, 3}, {2, 4}}});
    c.push_back({"BC", 2, {{0, 3}, {1, 2}, {2, 4}}});
  }
  return c;
}

std::vector<Config> exceptional_configs() {
  return {{"BC", 1, {{0, 4}, {1, 2}}}, {"BC", 2, {{0, 4}, {1, 2}, {2, 2}}}};
}

// Criterion 5: orthogonality of spherical functions under the Plancherel measure.
void orthogonality_check(CheckResult& r, Suite suite) {
  const int grid = suite == Suite::Full ? 513 : 129;
  const int hmax = suite == Suite::Full ? 3 : 2;
  double worst = 0, worst_control = 1e300;
  for (const auto& cfg : standard_configs(suite)) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    const auto pm = orthogonality(ctx, dominant_up_to_height(cfg.rank, hmax), grid);
    worst = std::max(worst, pm.max_residual);
    if (!(pm.max_residual < kOrthogonalityTol))
      r.fail("orthogonality residual " + fmt(pm.max_residual) + " (" + cfg.label() + ")");
  }
  for (const auto& cfg : exceptional_configs()) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    const auto lambdas = dominant_up_to_height(cfg.rank, hmax);
    const auto with = orthogonality(ctx, lambdas, grid, true);
    const auto without = orthogonality(ctx, lambdas, grid, false);
    worst = std::max(worst, with.max_residual);
    worst_control = std::min(worst_control, without.max_residual);
    if (!(with.max_residual < kOrthogonalityTol))
      r.fail("orthogonality residual " + fmt(with.max_residual) + " with the extra component (" + cfg.label() + ")");
    if (!(without.max_residual >= kNegativeControlGap))
      r.fail("orthogonality holds without the extra component (" + cfg.label() + "): " + fmt(without.max_residual));
  }
  r.detail = "grid " + std::to_string(grid) + ", max residual " + fmt(worst) + ", without extra component >= " +
             fmt(worst_control);
}

// Criterion 6: structure constants from triple integrals.
void triple_check(CheckResult& r, Suite suite) {
  const int grid = suite == Suite::Full ? 257 : 129;
  double worst = 0;
  size_t checked = 0;
  auto configs = standard_configs(suite);
  for (const auto& c : exceptional_configs()) configs.push_back(c);
  for (const auto& cfg : configs) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    const auto z = ctx.ps().z_values();
    const auto ls = dominant_up_to_height(cfg.rank, 2);
    for (const auto& l : ls)
      for (const auto& m : ls) {
        if (m < l) continue;
        const auto row = structure_constants(ctx, l, m);
        for (const auto& nu : dominant_below(ctx.rs(), l + m)) {
          auto it = row.a.find(nu);
          const double alg = it == row.a.end() ? 0.0 : it->second.value(z);
          const double dev = std::abs(integrate_triple(ctx, l, m, nu, grid) - alg);
          ++checked;
          worst = std::max(worst, dev);
          if (!(dev < kTripleTol))
            r.fail("triple integral differs from a_{lambda,mu;nu} by " + fmt(dev) + " at " + l.str() + "," + m.str() +
                   ";" + nu.str() + " (" + cfg.label() + ")");
        }
      }
  }
  r.detail = std::to_string(checked) + " constants, grid " + std::to_string(grid) + ", max deviation " + fmt(worst);
}

// Criterion 7: operator norms.
void norm_check(CheckResult& r, Suite suite) {
  std::ostringstream os;
  for (int q : {2, 3, 4}) {
    Context ctx("A", 1, {{0, q}, {1, q}});
    const auto n = norm_at_one(ctx, Coweight{1});
    // 2 sqrt(q) / (q + 1), exactly.
    const RadicalNumber want = RadicalNumber::sqrt_of(mpq_class(4 * q, (q + 1) * (q + 1)));
    if (!(n.exact.exact_value(ctx.ps().class_q()) == want))
      r.fail("P_{lambda_1}(1) != 2 sqrt(q)/(q+1) for q=" + std::to_string(q));
    if (suite == Suite::Quick && q != 4) continue;
    for (int k : {1, 2}) {
      const double exact = norm_at_one(ctx, Coweight{k}).value;
      const auto est = extrapolated_norm(q, q, 12, k);
      const double rel = std::abs(est.extrapolated - exact) / exact;
      os << " q=" << q << ",k=" << k << ": " << fmt(est.extrapolated) << " (raw " << fmt(est.raw) << ") vs " << fmt(exact) << ";";
      if (!(rel < kPowerIterationRel))
        r.fail("power iteration " + fmt(est.extrapolated) + " vs P_lambda(1)=" + fmt(exact) + " for q=" + std::to_string(q) +
               " k=" + std::to_string(k));
    }
  }
  const size_t samples = 10000;
  for (const auto& cfg : std::vector<Config>{{"A", 2, {{0, 2}, {1, 2}, {2, 2}}}, {"C", 2, {{0, 3}, {1, 2}, {2, 3}}}}) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    for (const auto& l : dominant_up_to_height(2, suite == Suite::Full ? 3 : 2)) {
      const auto s = sampled_sup(ctx, l, samples);
      if (!(s.sup <= s.at_one + kSupSlack))
        r.fail("sampled |P_lambda| exceeds P_lambda(1) at " + l.str() + " (" + cfg.label() + ")");
      if (!(s.near_one >= s.at_one - kNearOneTol))
        r.fail("sampled |P_lambda| near u=1 does not approach P_lambda(1) at " + l.str() + " (" + cfg.label() + ")");
    }
  }
  r.detail = "depth 12 trees:" + os.str() + " torus samples " + std::to_string(samples);
}

// Criterion 8: Radon-Nikodym derivatives of boundary measures on trees.
void radon_nikodym(CheckResult& r, Suite suite) {
  const int kmax = suite == Suite::Full ? 3 : 2;
  uint64_t checked = 0;
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {2, 4}}) {
    const int unit = q0 == q1 ? 1 : 2;
    const auto t = TreeBuilding::build(q0, q1, (kmax + 1) * unit + 1);
    const auto rep = radon_nikodym_check(t, kmax);
    checked += rep.checked;
    if (rep.failures)
      r.fail(std::to_string(rep.failures) + " cylinder ratios differ from the tau product for q=(" + std::to_string(q0) +
             "," + std::to_string(q1) + "), first " + rep.first_bad_ratio.get_str() + " vs " + rep.first_bad_expected.get_str());
    if (!cylinder_masses_sum_to_one(t)) r.fail("cylinder masses do not sum to 1");
  }
  r.detail = std::to_string(checked) + " cylinder ratios, distance <= " + std::to_string(kmax);
}

// Criterion 9: convex hull counts and the top structure constant.
void convex_hull(CheckResult& r, Suite suite) {
  const std::vector<std::pair<std::string, int>> types = {{"A", 1}, {"A", 2}, {"A", 3}, {"B", 3}, {"C", 2},
                                                          {"C", 3}, {"G", 2}, {"BC", 1}, {"BC", 2}};
  const int hmax = suite == Suite::Full ? 5 : 3;
  size_t checked = 0;
  for (const auto& [type, n] : types) {
    const auto rs = RootSystem::build(type, n);
    for (const auto& l : dominant_up_to_height(n, hmax)) {
      ++checked;
      const auto a = convex_hull_count(l);
      const auto b = dominant_interval_count(l);
      const auto c = hull_lattice_count(rs, l);
      if (a != b || a != c)
        r.fail("hull count " + std::to_string(a) + " vs " + std::to_string(b) + "/" + std::to_string(c) + " at " + rs.name() + " " + l.str());
    }
  }
  for (auto [q0, q1] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}}) {
    const int unit = q0 == q1 ? 1 : 2;
    const auto t = TreeBuilding::build(q0, q1, 5 * unit);
    for (int k = 0; k <= 5; ++k) {
      ++checked;
      if (geodesic_good_count(t, k) != k + 1) r.fail("geodesic vertex count != k+1 at k=" + std::to_string(k));
    }
  }
  for (const auto& cfg : std::vector<Config>{{"A", 2, {{0, 2}, {1, 2}, {2, 2}}},
                                             {"C", 2, {{0, 3}, {1, 2}, {2, 3}}},
                                             {"G", 2, {{0, 2}, {1, 3}, {2, 2}}},
                                             {"BC", 2, {{0, 4}, {1, 2}, {2, 2}}}}) {
    Context ctx(cfg.type, cfg.rank, cfg.q);
    const auto ls = dominant_up_to_height(cfg.rank, suite == Suite::Full ? 2 : 1);
    for (const auto& l : ls)
      for (const auto& m : ls) {
        ++checked;
        const auto a = structure_constant(ctx, l, m, l + m);
        const QRatio lhs = a * QRatio::from(n_lambda(ctx, l) * n_lambda(ctx, m), ctx.zdim());
        if (!(lhs == QRatio::from(n_lambda(ctx, l + m), ctx.zdim())))
          r.fail("a_{lambda,mu;lambda+mu} N_lambda N_mu != N_{lambda+mu} at " + l.str() + "," + m.str() + " (" + cfg.label() + ")");
      }
  }
  r.detail = std::to_string(checked) + " cases";
}

// Criterion 10: longest-element and Poincare identities, Higman warning.
void parameter_identities(CheckResult& r, Suite) {
  const std::vector<std::pair<std::string, int>> types = {
      {"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 3}, {"B", 4}, {"C", 2}, {"C", 3},  {"C", 4},
      {"D", 4}, {"F", 4}, {"G", 2}, {"BC", 1}, {"BC", 2}, {"BC", 3}, {"BC", 4}};
  size_t checked = 0;
  for (const auto& [type, n] : types) {
    Context ctx(type, n, generic_parameters(type, n));
    const auto& W = ctx.weyl();
    const auto rep = longest_element_identity(ctx.rs(), W, ctx.ps());
    ++checked;
    if (!rep.ok) r.fail("q_{w0} != product of tau for " + ctx.rs().name());
    const QLaurent qw0(q_w(W.longest(), ctx.ps()), 1);
    if (!(ctx.w0_poincare(false) == qw0 * ctx.w0_poincare(true)))
      r.fail("W0(q) != q_{w0} W0(q^{-1}) for " + ctx.rs().name());
  }
  size_t sweeps = 0;
  for (int n : {2, 3})
    for (int q0 = 1; q0 <= 9; ++q0)
      for (int q1 = 1; q1 <= 4; ++q1)
        for (int qn = 1; qn <= 5; ++qn) {
          if (qn == q0) continue;
          Q q{{0, q0}, {n, qn}};
          for (int i = 1; i < n; ++i) q[i] = q1;
          Context ctx("BC", n, q);
          ++sweeps;
          const bool want = q1 > 1 && q1 * q1 < q0;
          if (ctx.ps().higman_warning() != want)
            r.fail("Higman warning " + std::string(want ? "missing" : "spurious") + " for BC" + std::to_string(n) +
                   " q0=" + std::to_string(q0) + " q1=" + std::to_string(q1) + " qn=" + std::to_string(qn));
        }
  r.detail = std::to_string(checked) + " root systems, " + std::to_string(sweeps) + " parameter sets";
}

const std::vector<std::pair<std::string, void (*)(CheckResult&, Suite)>>& table() {
  static const std::vector<std::pair<std::string, void (*)(CheckResult&, Suite)>> t = {
      {"dual vertex counts", dual_counts},
      {"tree sphere counts", tree_counts},
      {"boundary integral equals P_lambda", boundary_integral_check},
      {"horocycle count integrality", horocycle_counts},
      {"Plancherel orthogonality", orthogonality_check},
      {"triple integrals vs structure constants", triple_check},
      {"operator norms", norm_check},
      {"boundary Radon-Nikodym derivatives", radon_nikodym},
      {"convex hull counts", convex_hull},
      {"parameter identities", parameter_identities},
  };
  return t;
}

}  // namespace

std::map<int, mpq_class> generic_parameters(const std::string& type, int rank) {
  Q probe;
  for (int i = 0; i <= rank; ++i) probe[i] = i == 0 ? 2 : 3;
  int r = rank;
  const bool bc = parse_family(type, r) == Family::BC;
  if (!bc)
    for (auto& [i, v] : probe) v = 2;
  const auto rs = RootSystem::build(type, rank);
  const auto ps = ParamSystem::validate(rs, probe);
  static const int primes[] = {2, 3, 5, 7, 11};
  Q q;
  for (int i = 0; i <= rank; ++i) q[i] = primes[ps.class_of(i)];
  return q;
}

CheckResult run_check(int id, Suite suite) {
  if (id < 1 || id > kCriteria) throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  const auto& [name, fn] = table()[id - 1];
  CheckResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r, suite);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_checks(Suite suite, const std::vector<int>& ids,
                                    const std::function<void(const CheckResult&)>& each) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kCriteria; ++i) todo.push_back(i);
  std::vector<CheckResult> out;
  for (int id : todo) {
    out.push_back(run_check(id, suite));
    if (each) each(out.back());
  }
  return out;
}

std::string summary_line(const CheckResult& r) {
  char t[32];
  std::snprintf(t, sizeof t, "%.1fs", r.seconds);
  std::string s = std::string(r.pass ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name + " - " + r.detail +
                  " (" + t + ")";
  for (const auto& f : r.failures) s += "\n      " + f;
  return s;
}

}  // namespace sfab
