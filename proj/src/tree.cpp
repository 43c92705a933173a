#include "sfab/tree.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "sfab/parallel.hpp"

namespace sfab {

TreeBuilding TreeBuilding::build(int q0, int q1, int depth) {
  if (q0 < 1 || q1 < 1) throw ConfigError("tree parameters must be at least 1");
  if (depth < 0 || depth > 14) throw ConfigError("tree depth must lie in [0, 14]");
  TreeBuilding t;
  t.q0_ = q0;
  t.q1_ = q1;
  t.depth_ = depth;
  t.shell_ = {1};
  uint64_t total = 1;
  for (int d = 0; d < depth; ++d) {
    t.shell_.push_back(t.shell_.back() * static_cast<uint64_t>(t.branch(d)));
    total += t.shell_.back();
    if (total > kMaxVertices)
      throw ConfigError("tree with q0=" + std::to_string(q0) + ", q1=" + std::to_string(q1) + ", depth " +
                        std::to_string(depth) + " exceeds " + std::to_string(kMaxVertices) + " vertices");
  }
  return t;
}

uint64_t TreeBuilding::vertex_count() const {
  uint64_t s = 0;
  for (auto x : shell_) s += x;
  return s;
}

Vertex TreeBuilding::parent(const Vertex& v) const {
  if (v.depth == 0) throw std::logic_error("root has no parent");
  return {v.depth - 1, v.index / static_cast<uint64_t>(branch(v.depth - 1))};
}

Vertex TreeBuilding::child(const Vertex& v, int c) const {
  return {v.depth + 1, v.index * static_cast<uint64_t>(branch(v.depth)) + static_cast<uint64_t>(c)};
}

Vertex TreeBuilding::ancestor(Vertex v, int d) const {
  while (v.depth > d) v = parent(v);
  return v;
}

void TreeBuilding::neighbours(const Vertex& v, std::vector<Vertex>& out) const {
  out.clear();
  if (v.depth > 0) out.push_back(parent(v));
  if (v.depth < depth_)
    for (int c = 0; c < branch(v.depth); ++c) out.push_back(child(v, c));
}

Vertex TreeBuilding::meet(Vertex a, Vertex b) const {
  while (a.depth > b.depth) a = parent(a);
  while (b.depth > a.depth) b = parent(b);
  while (a.index != b.index) {
    a = parent(a);
    b = parent(b);
  }
  return a;
}

int TreeBuilding::distance(Vertex a, Vertex b) const {
  const int m = meet(a, b).depth;
  return a.depth + b.depth - 2 * m;
}

void TreeBuilding::for_each_at_distance(const Vertex& v, int steps,
                                        const std::function<void(const Vertex&)>& f) const {
  struct Frame {
    Vertex at;
    Vertex from;
    bool has_from;
    int dist;
  };
  std::vector<Frame> stack{{v, v, false, 0}};
  std::vector<Vertex> nb;
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.dist == steps) {
      if (good(fr.at)) f(fr.at);
      continue;
    }
    neighbours(fr.at, nb);
    for (const auto& w : nb)
      if (!fr.has_from || !(w == fr.from)) stack.push_back({w, fr.at, true, fr.dist + 1});
  }
}

uint64_t sphere_count(const TreeBuilding& t, const Vertex& x, int k) {
  if (x.depth + k * t.unit() > t.depth()) throw std::out_of_range("sphere of radius " + std::to_string(k) + " leaves the truncated tree");
  uint64_t n = 0;
  t.for_each_at_distance(x, k * t.unit(), [&](const Vertex&) { ++n; });
  return n;
}

namespace {

Vertex ray_point(const TreeBuilding& t, const End& w) {
  const int d = t.good(Vertex{t.depth(), 0}) ? t.depth() : t.depth() - 1;
  return t.ancestor(w.leaf, d);
}

// Product of forward branchings on the path from x to z: nu_x(Omega_x(z)) = 1 / result.
uint64_t path_branching(const TreeBuilding& t, const Vertex& x, const Vertex& z) {
  const Vertex m = t.meet(x, z);
  // Product over the path x -> m -> z without z: the first vertex counts
  // its full degree, later ones degree - 1.
  uint64_t p = 1;
  bool first = true;
  for (Vertex v = x; v.depth > m.depth; v = t.parent(v)) {
    p *= static_cast<uint64_t>(first ? t.degree(v) : t.degree(v) - 1);
    first = false;
  }
  if (z.depth == m.depth) return p;
  p *= static_cast<uint64_t>(first ? t.degree(m) : t.degree(m) - 1);
  for (Vertex v = t.parent(z); v.depth > m.depth; v = t.parent(v)) p *= static_cast<uint64_t>(t.degree(v) - 1);
  return p;
}

}  // namespace

int horocycle(const TreeBuilding& t, const Vertex& x, const Vertex& y, const End& w) {
  const Vertex z = ray_point(t, w);
  if (t.meet(x, w.leaf).depth > z.depth || t.meet(y, w.leaf).depth > z.depth)
    throw std::out_of_range("end not resolved past the vertices");
  const int diff = t.distance(x, z) - t.distance(y, z);
  if (diff % t.unit()) throw std::logic_error("horocycle difference is not a multiple of the unit");
  return diff / t.unit();
}

std::map<int, uint64_t> horocycle_census(const TreeBuilding& t, int k, const End& w) {
  std::map<int, uint64_t> census;
  if (k * t.unit() > t.depth()) throw std::out_of_range("sphere leaves the truncated tree");
  t.for_each_at_distance(t.root(), k * t.unit(), [&](const Vertex& y) { ++census[horocycle(t, t.root(), y, w)]; });
  return census;
}

mpq_class structure_count(const TreeBuilding& t, int lambda, int mu, int nu) {
  const int u = t.unit();
  if (std::max(lambda, nu) * u > t.depth()) throw std::out_of_range("radius exceeds the truncation");
  const Vertex x = t.root();
  const Vertex y{nu * u, 0};
  uint64_t inter = 0;
  t.for_each_at_distance(x, lambda * u, [&](const Vertex& z) {
    if (t.distance(y, z) == mu * u) ++inter;
  });
  // Sphere sizes do not depend on the centre; count them at the root.
  const mpq_class nl(static_cast<unsigned long>(sphere_count(t, x, lambda)));
  const mpq_class nm(static_cast<unsigned long>(sphere_count(t, x, mu)));
  const mpq_class nn(static_cast<unsigned long>(sphere_count(t, x, nu)));
  return mpq_class(nn / (nl * nm) * static_cast<unsigned long>(inter));
}

mpq_class cylinder_mass(const TreeBuilding& t, const Vertex& x, const Vertex& z) {
  return mpq_class(1, static_cast<unsigned long>(path_branching(t, x, z)));
}

std::unique_ptr<Context> tree_context(int q0, int q1) {
  std::map<int, mpq_class> q{{0, q0}, {1, q1}};
  return std::make_unique<Context>(q0 == q1 ? "A" : "BC", 1, q);
}

mpq_class tau_power(const Context& ctx, int h) {
  const auto& rs = ctx.rs();
  const auto& ps = ctx.ps();
  const auto cq = ps.class_q();
  const Coweight hc = h * rs.fundamental(0);
  mpq_class r = 1;
  for (size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const int p = rs.pairing(hc, static_cast<int>(k));
    const ZExp& e = ps.tau(static_cast<int>(k));
    for (int c = 0; c < e.size(); ++c) {
      const long ex = static_cast<long>(e[c]) / 2 * p;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), cq[c].get_num_mpz_t(), static_cast<unsigned long>(std::labs(ex)));
      mpz_pow_ui(den.get_mpz_t(), cq[c].get_den_mpz_t(), static_cast<unsigned long>(std::labs(ex)));
      mpq_class f(num, den);
      f.canonicalize();
      r *= ex >= 0 ? f : mpq_class(1 / f);
    }
  }
  return r;
}

RadonNikodymReport radon_nikodym_check(const TreeBuilding& t, int max_k) {
  const int u = t.unit();
  auto ctx = tree_context(t.q0(), t.q1());
  std::map<int, mpq_class> expected;
  for (int h = -(max_k + 1); h <= max_k + 1; ++h) expected.emplace(h, tau_power(*ctx, h));

  std::vector<Vertex> xs{t.root()};
  t.for_each_at_distance(t.root(), u, [&](const Vertex& v) { xs.push_back(v); });
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& x : xs)
    for (int k = 0; k <= max_k; ++k) {
      if (x.depth + k * u > t.depth()) throw std::out_of_range("tree too shallow for the requested distance");
      t.for_each_at_distance(x, k * u, [&](const Vertex& y) { pairs.emplace_back(x, y); });
    }

  // Level sweep: for every z up to zmax, the branching product along x -> z
  // (0 when z is an ancestor of x) and the depth of meet(x, z).
  struct Sweep {
    std::vector<std::vector<uint64_t>> b;
    std::vector<std::vector<int>> m;
  };
  auto sweep = [&](const Vertex& x, int zmax, Sweep& sw) {
    std::vector<uint64_t> anc(x.depth + 1), up(x.depth + 1, 1);
    for (Vertex v = x;; v = t.parent(v)) {
      anc[v.depth] = v.index;
      if (v.depth == 0) break;
    }
    for (int d = x.depth - 1; d >= 0; --d) {
      const int deg = t.degree({d + 1, anc[d + 1]});
      up[d] = up[d + 1] * static_cast<uint64_t>(d + 1 == x.depth ? deg : deg - 1);
    }
    sw.b.assign(zmax + 1, {});
    sw.m.assign(zmax + 1, {});
    sw.b[0] = {0};
    sw.m[0] = {0};
    for (int d = 1; d <= zmax; ++d) {
      const uint64_t n = t.shell(d), br = static_cast<uint64_t>(t.branch(d - 1));
      const int deg = t.degree({d - 1, 0});
      sw.b[d].resize(n);
      sw.m[d].resize(n);
      for (uint64_t i = 0; i < n; ++i) {
        const uint64_t pi = i / br;
        const bool parent_on = d - 1 <= x.depth && anc[d - 1] == pi;
        if (parent_on) {
          const bool self_on = d <= x.depth && anc[d] == i;
          sw.b[d][i] = self_on ? 0 : up[d - 1] * static_cast<uint64_t>(d - 1 == x.depth ? deg : deg - 1);
          sw.m[d][i] = self_on ? d : d - 1;
        } else {
          sw.b[d][i] = sw.b[d - 1][pi] * static_cast<uint64_t>(deg - 1);
          sw.m[d][i] = sw.m[d - 1][pi];
        }
      }
    }
  };

  RadonNikodymReport rep;
  std::mutex mu;
  parallel_chunks(pairs.size(), 16, [&](size_t b, size_t e) {
    RadonNikodymReport local;
    Sweep sx, sy;
    for (size_t p = b; p < e; ++p) {
      const auto& [x, y] = pairs[p];
      const int zmax = t.depth();
      sweep(x, zmax, sx);
      sweep(y, zmax, sy);
      for (int d = 1; d <= zmax; ++d)
        for (uint64_t i = 0; i < t.shell(d); ++i) {
          // Omega_x(z) = Omega_y(z) once z lies strictly past both meeting points.
          const uint64_t bx = sx.b[d][i], by = sy.b[d][i];
          if (!bx || !by) continue;
          const int diff = (x.depth - 2 * sx.m[d][i]) - (y.depth - 2 * sy.m[d][i]);
          const int h = diff / u;
          const mpq_class& want = expected.at(h);
          // nu_y / nu_x = branching(x -> z) / branching(y -> z)
          const unsigned __int128 lhs = static_cast<unsigned __int128>(bx) * want.get_den().get_ui();
          const unsigned __int128 rhs = static_cast<unsigned __int128>(by) * want.get_num().get_ui();
          ++local.checked;
          if (diff % u || lhs != rhs) {
            if (local.failures++ == 0) {
              local.first_bad_ratio = mpq_class(static_cast<unsigned long>(bx), static_cast<unsigned long>(by));
              local.first_bad_ratio.canonicalize();
              local.first_bad_expected = want;
            }
          }
        }
    }
    std::lock_guard lock(mu);
    rep.checked += local.checked;
    if (local.failures && rep.failures == 0) {
      rep.first_bad_ratio = local.first_bad_ratio;
      rep.first_bad_expected = local.first_bad_expected;
    }
    rep.failures += local.failures;
  });
  return rep;
}

bool cylinder_masses_sum_to_one(const TreeBuilding& t) {
  for (int d = 1; d <= t.depth(); ++d) {
    mpq_class s = 0;
    for (uint64_t i = 0; i < t.shell(d); ++i) s += cylinder_mass(t, t.root(), {d, i});
    if (s != 1) return false;
  }
  return true;
}

std::complex<double> boundary_integral_hom(const TreeBuilding& t, int k, std::complex<double> u, const End& w) {
  if ((k + 1) * t.unit() > t.depth()) throw std::out_of_range("sphere not resolved inside the truncation");
  auto ctx = tree_context(t.q0(), t.q1());
  const double r = std::sqrt(tau_power(*ctx, 1).get_d());
  const auto census = horocycle_census(t, k, w);
  std::complex<double> s = 0;
  uint64_t n = 0;
  for (const auto& [h, c] : census) {
    s += static_cast<double>(c) * ipow(u * r, h);
    n += c;
  }
  return s / static_cast<double>(n);
}

int geodesic_good_count(const TreeBuilding& t, int k) {
  if (k * t.unit() > t.depth()) throw std::out_of_range("geodesic leaves the truncated tree");
  int n = 0;
  for (Vertex v{k * t.unit(), 0};; v = t.parent(v)) {
    if (t.good(v)) ++n;
    if (v.depth == 0) break;
  }
  return n;
}

namespace {

struct Iterated {
  double rayleigh;
  int iterations;
};

// Power iteration of I + A from the constant vector; apply(f, out) computes
// A f, weights give the inner product.
template <class Apply>
Iterated iterate(size_t n, const std::vector<double>& weight, Apply apply, int max_iters, double tol) {
  std::vector<double> f(n, 1.0), af(n);
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < n; ++i) s += weight[i] * a[i] * b[i];
    return s;
  };
  double prev = 0, ray = 0;
  int it = 0;
  for (; it < max_iters; ++it) {
    apply(f, af);
    ray = dot(af, f) / dot(f, f);
    if (it > 0 && std::abs(ray - prev) < tol) break;
    prev = ray;
    double norm = 0;
    for (size_t i = 0; i < n; ++i) {
      f[i] += af[i];
      norm = std::max(norm, std::abs(f[i]));
    }
    for (auto& x : f) x /= norm;
  }
  return {ray, it};
}

}  // namespace

PowerIteration power_iteration_norm(const TreeBuilding& t, int k, int max_iters, double tol) {
  const int u = t.unit();
  const int m = t.depth() / u - k;
  if (m < 0) throw std::out_of_range("tree too shallow for the operator");
  // Good vertices of the ball, indexed level by level.
  std::vector<uint64_t> offset;
  uint64_t n = 0;
  for (int j = 0; j <= m; ++j) {
    offset.push_back(n);
    n += t.shell(j * u);
  }
  if (n > 50'000'000) throw std::out_of_range("ball too large for vertex-level iteration");
  auto id = [&](const Vertex& v) { return offset[v.depth / u] + v.index; };
  const double inv_n = 1.0 / static_cast<double>(sphere_count(t, t.root(), k));
  auto apply = [&](const std::vector<double>& f, std::vector<double>& out) {
    parallel_chunks(m + 1, 1, [&](size_t jb, size_t je) {
      for (size_t j = jb; j < je; ++j)
        for (uint64_t i = 0; i < t.shell(static_cast<int>(j) * u); ++i) {
          const Vertex x{static_cast<int>(j) * u, i};
          double s = 0;
          t.for_each_at_distance(x, k * u, [&](const Vertex& y) {
            if (y.depth <= m * u) s += f[id(y)];
          });
          out[id(x)] = s * inv_n;
        }
    });
  };
  std::vector<double> weight(n, 1.0);
  auto r = iterate(n, weight, apply, max_iters, tol);
  return {r.rayleigh, r.iterations, m};
}

PowerIteration radial_power_iteration(const TreeBuilding& t, int k, int max_iters, double tol) {
  const int u = t.unit();
  const int m = t.depth() / u - k;
  if (m < 0) throw std::out_of_range("tree too shallow for the operator");
  const double inv_n = 1.0 / static_cast<double>(sphere_count(t, t.root(), k));
  // count[j][j'] = |{y in V_k(x) : y at level j'}| for x at level j.
  std::vector<std::vector<double>> count(m + 1, std::vector<double>(m + 1, 0.0));
  std::vector<double> weight(m + 1);
  for (int j = 0; j <= m; ++j) {
    weight[j] = static_cast<double>(t.shell(j * u));
    t.for_each_at_distance(Vertex{j * u, 0}, k * u, [&](const Vertex& y) {
      if (y.depth <= m * u) count[j][y.depth / u] += 1;
    });
  }
  auto apply = [&](const std::vector<double>& f, std::vector<double>& out) {
    for (int j = 0; j <= m; ++j) {
      double s = 0;
      for (int l = 0; l <= m; ++l) s += count[j][l] * f[l];
      out[j] = s * inv_n;
    }
  };
  auto r = iterate(m + 1, weight, apply, max_iters, tol);
  return {r.rayleigh, r.iterations, m};
}

NormEstimate extrapolated_norm(int q0, int q1, int depth, int k) {
  NormEstimate est;
  const int u = q0 == q1 ? 1 : 2;
  for (int s = 2; s >= 0; --s) est.runs.push_back(radial_power_iteration(TreeBuilding::build(q0, q1, depth - s * u), k));
  const double v1 = est.runs[0].rayleigh, v2 = est.runs[1].rayleigh, v3 = est.runs[2].rayleigh;
  const double m = est.runs[0].ball;
  est.raw = v3;
  est.extrapolated = v3;
  const double ratio = (v3 - v2) / (v2 - v1);
  if (!(ratio > 0 && ratio < 1)) return est;
  auto f = [](double x) { return 1.0 / (x * x); };
  auto model = [&](double c) { return (f(m + 1 + c) - f(m + 2 + c)) / (f(m + c) - f(m + 1 + c)); };
  double lo = -m + 1e-9, hi = 1e6;
  if (!(model(lo) < ratio && model(hi) > ratio)) return est;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (model(mid) < ratio ? lo : hi) = mid;
  }
  const double c = 0.5 * (lo + hi);
  const double C = (v2 - v1) / (f(m + c) - f(m + 1 + c));
  est.extrapolated = v3 + C * f(m + 2 + c);
  return est;
}

}  // namespace sfab
