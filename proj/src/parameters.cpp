#include "sfab/parameters.hpp"

#include <cmath>
#include <numeric>

namespace sfab {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

std::string qs(const mpq_class& q) { return q.get_str(); }

}  // namespace

ParamSystem ParamSystem::validate(const RootSystem& rs, const std::map<int, mpq_class>& raw) {
  const int n = rs.rank();
  ParamSystem ps;
  ps.q_.assign(n + 1, 0);
  for (const auto& [k, v] : raw)
    if (k < 0 || k > n) throw ConfigError("parameter index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  for (int i = 0; i <= n; ++i) {
    auto it = raw.find(i);
    if (it == raw.end()) throw ConfigError("missing parameter q" + std::to_string(i));
    if (it->second < 1) throw ConfigError("parameter q" + std::to_string(i) + " = " + qs(it->second) + " is below 1");
    ps.q_[i] = it->second;
  }

  const Family f = rs.family();
  if (f == Family::A && n == 1 && ps.q_[0] != ps.q_[1])
    throw ConfigError("a regular A1~ building with q0 != q1 has root system BC1; use type BC rank 1");
  if (f == Family::C && ps.q_[0] != ps.q_[n])
    throw ConfigError("a C~" + std::to_string(n) + " building with q0 != q" + std::to_string(n) +
                      " has root system BC" + std::to_string(n) + "; use type BC");
  if (f == Family::BC && ps.q_[0] == ps.q_[n]) {
    if (n == 1) throw ConfigError("BC1 with q0 = q1 is the homogeneous tree; use type A rank 1");
    throw ConfigError("BC" + std::to_string(n) + " with q0 = q" + std::to_string(n) + " is type C" +
                      std::to_string(n) + "; use type C");
  }

  // Conjugacy classes: nodes joined by odd Coxeter exponents, plus the
  // identifications forced on A1 and C_n.
  UnionFind uf(n + 1);
  const auto& m = rs.affine_coxeter();
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (m[i][j] % 2 == 1) uf.join(i, j);
  if (f == Family::A && n == 1) uf.join(0, 1);
  if (f == Family::C) uf.join(0, n);

  std::map<int, int> root_to_class;
  ps.class_of_.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    int r = uf.find(i);
    auto [it, fresh] = root_to_class.try_emplace(r, static_cast<int>(ps.class_nodes_.size()));
    if (fresh) {
      ps.class_nodes_.push_back({});
      ps.names_.push_back("z" + std::to_string(i));
    }
    ps.class_of_[i] = it->second;
    ps.class_nodes_[it->second].push_back(i);
  }
  for (const auto& nodes : ps.class_nodes_)
    for (int i : nodes)
      if (ps.q_[i] != ps.q_[nodes[0]]) {
        std::string list;
        for (int j : nodes) list += (list.empty() ? "" : ",") + std::to_string(j);
        throw ConfigError("parameters must agree on conjugate generators {" + list + "}: q" +
                          std::to_string(nodes[0]) + " = " + qs(ps.q_[nodes[0]]) + " but q" + std::to_string(i) +
                          " = " + qs(ps.q_[i]));
      }

  // tau table.
  const auto& roots = rs.positive_roots();
  for (size_t k = 0; k < roots.size(); ++k) {
    const Root& a = roots[k];
    ZExp t = ps.zero_exp();
    if (a.in_r3()) {
      int node = -1;
      for (int i = 0; i < n && node < 0; ++i)
        if (rs.simple_root(i).norm2 == a.norm2) node = i + 1;
      if (node < 0) throw std::logic_error("no simple root of matching length");
      t = ps.q_exp(node);
    } else if (a.in_r1) {
      t = ps.q_exp(0);
    } else {
      t = ps.q_exp(n) - ps.q_exp(0);
    }
    ps.tau_.push_back(t);
  }

  if (f == Family::BC && ps.q_[n] < ps.q_[0]) ps.mode_ = Mode::Exceptional;
  if (f == Family::BC && n >= 2 && ps.q_[1] > 1 && ps.q_[1] * ps.q_[1] < ps.q_[0]) {
    ps.higman_ = true;
    ps.warnings_.push_back("Higman bound violated: q1^2 = " + qs(ps.q_[1] * ps.q_[1]) + " < q0 = " + qs(ps.q_[0]) +
                           "; no building has these parameters");
  }
  return ps;
}

std::vector<mpq_class> ParamSystem::class_q() const {
  std::vector<mpq_class> r;
  for (const auto& nodes : class_nodes_) r.push_back(q_[nodes[0]]);
  return r;
}

std::vector<double> ParamSystem::z_values() const {
  std::vector<double> r;
  for (const auto& nodes : class_nodes_) r.push_back(std::sqrt(q_[nodes[0]].get_d()));
  return r;
}

ZExp ParamSystem::q_exp(int node) const {
  ZExp e = zero_exp();
  e[class_of_[node]] = 2;
  return e;
}

ZExp ParamSystem::tau_half(const RootSystem& rs, int root) const {
  int h = rs.half_of(root);
  return h >= 0 ? tau_[h] : zero_exp();
}

double ParamSystem::tau_value(int root) const {
  auto z = z_values();
  double v = 1.0;
  for (int i = 0; i < tau_[root].size(); ++i) v *= std::pow(z[i], tau_[root][i]);
  return v;
}

ZExp half(const ZExp& e) {
  ZExp r(e.size());
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] % 2 != 0) throw std::logic_error("odd exponent where a square was expected");
    r[i] = e[i] / 2;
  }
  return r;
}

ZExp q_w(const WeylElement& w, const ParamSystem& ps) {
  ZExp e = ps.zero_exp();
  for (int g : w.word) e += ps.q_exp(g + 1);
  return e;
}

ZExp q_w_from_inversions(const RootSystem& rs, const WeylGroup& W, size_t w, const ParamSystem& ps) {
  // A wall H_alpha separates C0 from w^{-1}C0 exactly when w(alpha) < 0.
  ZExp e = ps.zero_exp();
  for (int r : W.inversions(rs, w)) e += ps.tau(r);
  return e;
}

QLaurent poincare(const WeylGroup& W, const std::vector<size_t>& subset, const ParamSystem& ps, bool inverted) {
  QLaurent p;
  for (size_t k : subset) {
    ZExp e = q_w(W[k], ps);
    p.add_term(inverted ? -e : e, 1);
  }
  return p;
}

QLaurent poincare(const WeylGroup& W, const ParamSystem& ps, bool inverted) {
  std::vector<size_t> all(W.size());
  std::iota(all.begin(), all.end(), 0);
  return poincare(W, all, ps, inverted);
}

ZExp q_translation(const RootSystem& rs, const ParamSystem& ps, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("q_translation needs a dominant coweight, got " + lambda.str());
  ZExp e = ps.zero_exp();
  const auto& roots = rs.positive_roots();
  for (size_t k = 0; k < roots.size(); ++k) e += rs.pairing(lambda, roots[k]) * ps.tau(static_cast<int>(k));
  return e;
}

ZExp q_translation_walls(const RootSystem& rs, const ParamSystem& ps, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("q_translation needs a dominant coweight, got " + lambda.str());
  const int n = rs.rank();
  ZExp e = ps.zero_exp();
  const auto& roots = rs.positive_roots();
  for (size_t k = 0; k < roots.size(); ++k) {
    const Root& a = roots[k];
    if (!a.in_r1) continue;
    const int walls = rs.pairing(lambda, a);
    ZExp q_alpha = ps.zero_exp();
    if (!a.in_r2) {
      // alpha = 2 e_i in BC_n: walls alternate between the special
      // vertex type n (even k) and type 0 (odd k).
      for (int j = 1; j <= walls; ++j) e += ps.q_exp(j % 2 ? 0 : n);
      continue;
    }
    for (int i = 0; i < n; ++i)
      if (rs.simple_root(i).norm2 == a.norm2) {
        q_alpha = ps.q_exp(i + 1);
        break;
      }
    e += walls * q_alpha;
  }
  return e;
}

LongestElementReport longest_element_identity(const RootSystem& rs, const WeylGroup& W, const ParamSystem& ps) {
  LongestElementReport r;
  r.from_word = q_w(W.longest(), ps);
  r.from_tau = ps.zero_exp();
  for (size_t k = 0; k < rs.positive_roots().size(); ++k) r.from_tau += ps.tau(static_cast<int>(k));
  r.ok = r.from_word == r.from_tau;
  return r;
}

ZExp RHom::operator()(const Coweight& mu) const {
  ZExp e(per_fundamental.empty() ? 0 : per_fundamental[0].size());
  for (int i = 0; i < mu.size(); ++i) e += mu[i] * per_fundamental[i];
  return e;
}

RHom r_hom(const RootSystem& rs, const ParamSystem& ps) {
  RHom r;
  for (int i = 0; i < rs.rank(); ++i) {
    ZExp t = q_translation_walls(rs, ps, rs.fundamental(i));
    r.per_fundamental.push_back(half(t));
  }
  return r;
}

ZExp r_from_roots(const RootSystem& rs, const ParamSystem& ps, const Coweight& mu) {
  ZExp e = ps.zero_exp();
  const auto& roots = rs.positive_roots();
  for (size_t k = 0; k < roots.size(); ++k) e += rs.pairing(mu, roots[k]) * ps.tau(static_cast<int>(k));
  return half(e);
}

}  // namespace sfab
