#include "sfab/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sfab {

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) m(j, i) -= rs.cartan(i, j);
  return m;
}

WeylGroup WeylGroup::generate(const RootSystem& rs, size_t cap) {
  const unsigned long long order = rs.classical_weyl_order();
  if (order > cap)
    throw ConfigError("W0 of " + rs.name() + " has " + std::to_string(order) +
                      " elements, above the enumeration cap of " + std::to_string(cap));
  const int n = rs.rank();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  WeylGroup g;
  g.elems_.push_back(WeylElement{IntMatrix::identity(n), {}});
  g.index_[g.elems_[0].mat] = 0;
  for (size_t k = 0; k < g.elems_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IntMatrix m = g.elems_[k].mat * gens[i];
      if (g.index_.count(m)) continue;
      WeylElement e{m, g.elems_[k].word};
      e.word.push_back(i);
      g.index_[m] = g.elems_.size();
      g.elems_.push_back(std::move(e));
      if (g.elems_.size() > cap) throw ConfigError("Weyl group enumeration exceeded cap");
    }
  }
  if (g.elems_.size() != order) throw std::logic_error("Weyl group order mismatch for " + rs.name());
  g.longest_ = g.elems_.size() - 1;
  return g;
}

long WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<size_t> WeylGroup::stabilizer(const Coweight& mu) const {
  std::vector<size_t> r;
  for (size_t k = 0; k < elems_.size(); ++k)
    if (elems_[k](mu) == mu) r.push_back(k);
  return r;
}

std::pair<int, int> WeylGroup::act_on_root(const RootSystem& rs, size_t w, int root) const {
  Coweight c = elems_[w](rs.positive_roots()[root].coroot);
  int idx = rs.find_by_coroot(c);
  if (idx >= 0) return {idx, 1};
  idx = rs.find_by_coroot(-c);
  if (idx < 0) throw std::logic_error("Weyl image of a coroot is not a coroot");
  return {idx, -1};
}

std::vector<int> WeylGroup::inversions(const RootSystem& rs, size_t w) const {
  std::vector<int> r;
  for (int k = 0; k < static_cast<int>(rs.positive_roots().size()); ++k)
    if (act_on_root(rs, w, k).second < 0) r.push_back(k);
  return r;
}

std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& mu) {
  std::set<Coweight> seen{mu};
  std::deque<Coweight> todo{mu};
  while (!todo.empty()) {
    Coweight c = todo.front();
    todo.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (c[i] == 0) continue;
      Coweight d = rs.reflect(i, c);
      if (seen.insert(d).second) todo.push_back(d);
    }
  }
  return {seen.begin(), seen.end()};
}

unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& gens) {
  const int n = rs.rank();
  std::vector<IntMatrix> g;
  for (int i : gens) g.push_back(simple_reflection_matrix(rs, i));
  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::deque<IntMatrix> todo{IntMatrix::identity(n)};
  while (!todo.empty()) {
    IntMatrix m = todo.front();
    todo.pop_front();
    for (const auto& s : g) {
      IntMatrix x = m * s;
      if (seen.insert(x).second) todo.push_back(x);
    }
  }
  return seen.size();
}

unsigned long long orbit_size(const RootSystem& rs, const Coweight& mu) {
  Coweight d = rs.dominant_rep(mu);
  std::vector<int> gens;
  for (int i = 0; i < rs.rank(); ++i)
    if (d[i] == 0) gens.push_back(i);
  return rs.classical_weyl_order() / parabolic_order(rs, gens);
}

Coweight lambda_star(const RootSystem& rs, const WeylGroup& w, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("lambda_star needs a dominant coweight, got " + lambda.str());
  (void)rs;
  return -w.longest()(lambda);
}

std::vector<Coweight> dominant_below(const RootSystem& rs, const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("dominant_below needs a dominant coweight");
  const int n = rs.rank();
  const auto coef = rs.coroot_coefficients(lambda);
  std::vector<int> bound(n);
  for (int i = 0; i < n; ++i) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), coef[i].get_num_mpz_t(), coef[i].get_den_mpz_t());
    bound[i] = static_cast<int>(f.get_si());
  }
  std::vector<Coweight> out;
  std::vector<int> k(n, 0);
  for (;;) {
    Coweight mu = lambda;
    for (int i = 0; i < n; ++i) mu -= k[i] * rs.coroot_basis()[i];
    if (is_dominant(mu)) out.push_back(mu);
    int i = 0;
    while (i < n && k[i] == bound[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    long ha = rs.rho_height(a), hb = rs.rho_height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  return out;
}

}  // namespace sfab
