#include "sfab/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sfab {

namespace {

using Vec = std::vector<mpq_class>;

mpq_class dot(const Vec& a, const Vec& b) {
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec unit(int dim, int i, const mpq_class& c = 1) {
  Vec v(dim, 0);
  v[i] = c;
  return v;
}

Vec diff(int dim, int i, int j) {
  Vec v(dim, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Simple roots in the ambient coordinates of the Bourbaki plates.
std::vector<Vec> simple_roots_for(Family f, int n) {
  std::vector<Vec> s;
  switch (f) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
    case Family::BC:
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1, 2));
      break;
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      Vec v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::E: {
      const mpq_class h(1, 2);
      Vec a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      s.push_back(a1);
      Vec a2(8, 0);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i + 2 < n; ++i) s.push_back(diff(8, i + 1, i));
      break;
    }
    case Family::F: {
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      const mpq_class h(1, 2);
      s.push_back(Vec{h, -h, -h, -h});
      break;
    }
    case Family::G:
      s.push_back(Vec{1, -1, 0});
      s.push_back(Vec{-2, 1, 1});
      break;
  }
  return s;
}

mpq_class cartan_entry(const Vec& ai, const Vec& aj) { return 2 * dot(ai, aj) / dot(ai, ai); }

unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(const std::string& type, int& rank) {
  std::string t;
  for (char c : type) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto fixed = [&](Family f, int r) {
    if (rank != 0 && rank != r) throw ConfigError("type " + t + " has rank " + std::to_string(r));
    rank = r;
    return f;
  };
  if (t == "A") return Family::A;
  if (t == "B") return Family::B;
  if (t == "C") return Family::C;
  if (t == "D") return Family::D;
  if (t == "BC") return Family::BC;
  if (t == "E6") return fixed(Family::E, 6);
  if (t == "E7") return fixed(Family::E, 7);
  if (t == "E8") return fixed(Family::E, 8);
  if (t == "F4" || t == "F") return fixed(Family::F, 4);
  if (t == "G2" || t == "G") return fixed(Family::G, 2);
  if (t == "E") {
    if (rank < 6 || rank > 8) throw ConfigError("type E needs rank 6, 7 or 8");
    return Family::E;
  }
  throw ConfigError("unknown root system type '" + type + "'");
}

RootSystem RootSystem::build(const std::string& type, int rank) {
  int r = rank;
  Family f = parse_family(type, r);
  return build(f, r);
}

RootSystem RootSystem::build(Family f, int n) {
  switch (f) {
    case Family::A:
    case Family::BC:
      if (n < 1) throw ConfigError(family_name(f) + " needs rank >= 1");
      break;
    case Family::B:
      if (n < 3) throw ConfigError("B_n needs rank >= 3 (use C2 for rank 2)");
      break;
    case Family::C:
      if (n < 2) throw ConfigError("C_n needs rank >= 2 (use A1 or BC1 for rank 1)");
      break;
    case Family::D:
      if (n < 4) throw ConfigError("D_n needs rank >= 4 (D3 is A3)");
      break;
    case Family::E:
      if (n < 6 || n > 8) throw ConfigError("E_n needs rank 6, 7 or 8");
      break;
    case Family::F:
      if (n != 4) throw ConfigError("F4 has rank 4");
      break;
    case Family::G:
      if (n != 2) throw ConfigError("G2 has rank 2");
      break;
  }
  if (n > kMaxDim) throw ConfigError("rank exceeds supported maximum");

  RootSystem rs;
  rs.family_ = f;
  rs.rank_ = n;
  const auto simple = simple_roots_for(f, n);
  const int dim = static_cast<int>(simple[0].size());

  rs.cartan_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class a = cartan_entry(simple[i], simple[j]);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Positive roots of the reduced part by root strings, height by height.
  std::vector<RootCoords> found;
  std::map<RootCoords, int> seen;
  for (int i = 0; i < n; ++i) {
    RootCoords c = RootCoords::unit(n, i);
    seen[c] = static_cast<int>(found.size());
    found.push_back(c);
  }
  for (size_t k = 0; k < found.size(); ++k) {
    const RootCoords beta = found[k];
    for (int i = 0; i < n; ++i) {
      RootCoords ai = RootCoords::unit(n, i);
      if (beta == ai) continue;
      int p = 0;
      while (seen.count(beta - (p + 1) * ai)) ++p;
      int pair = 0;  // <beta, alpha_i-check>
      for (int j = 0; j < n; ++j) pair += beta[j] * rs.cartan_[i][j];
      int q = p - pair;
      if (q > 0) {
        RootCoords g = beta + ai;
        if (!seen.count(g)) {
          seen[g] = static_cast<int>(found.size());
          found.push_back(g);
        }
      }
    }
  }

  auto ambient_of = [&](const RootCoords& c) {
    Vec v(dim, 0);
    for (int j = 0; j < n; ++j)
      for (int d = 0; d < dim; ++d) v[d] += c[j] * simple[j][d];
    return v;
  };

  if (f == Family::BC) {
    // Add 2*alpha for the short roots e_i.
    std::vector<RootCoords> extra;
    for (const auto& c : found) {
      Vec v = ambient_of(c);
      if (dot(v, v) == 1) extra.push_back(2 * c);
    }
    for (const auto& c : extra) found.push_back(c);
  }

  std::sort(found.begin(), found.end(), [](const RootCoords& a, const RootCoords& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a > b;
  });

  for (const auto& c : found) {
    Root r;
    r.simple = c;
    r.ambient = ambient_of(c);
    r.norm2 = dot(r.ambient, r.ambient);
    r.height = static_cast<int>(c.sum());
    r.coroot = Coweight(n);
    for (int k = 0; k < n; ++k) {
      mpq_class v = 2 * dot(r.ambient, simple[k]) / r.norm2;
      if (v.get_den() != 1) throw std::logic_error("coroot not in coweight lattice");
      r.coroot[k] = static_cast<int>(v.get_num().get_si());
    }
    rs.pos_.push_back(std::move(r));
  }
  for (size_t k = 0; k < rs.pos_.size(); ++k) {
    rs.by_simple_[rs.pos_[k].simple] = static_cast<int>(k);
    rs.by_coroot_[rs.pos_[k].coroot] = static_cast<int>(k);
  }
  rs.half_.assign(rs.pos_.size(), -1);
  rs.double_.assign(rs.pos_.size(), -1);
  for (size_t k = 0; k < rs.pos_.size(); ++k) {
    auto it = rs.by_simple_.find(2 * rs.pos_[k].simple);
    if (it != rs.by_simple_.end()) {
      rs.double_[k] = it->second;
      rs.half_[it->second] = static_cast<int>(k);
      rs.pos_[k].in_r1 = false;
      rs.pos_[it->second].in_r2 = false;
    }
  }
  for (int i = 0; i < n; ++i) rs.simple_idx_.push_back(rs.by_simple_.at(RootCoords::unit(n, i)));

  rs.highest_ = 0;
  for (size_t k = 0; k < rs.pos_.size(); ++k)
    if (rs.pos_[k].height > rs.pos_[rs.highest_].height) rs.highest_ = static_cast<int>(k);

  // Affine diagram with alpha_0 = -highest root.
  std::vector<Vec> aff;
  Vec a0 = rs.pos_[rs.highest_].ambient;
  for (auto& x : a0) x = -x;
  aff.push_back(a0);
  for (const auto& s : simple) aff.push_back(s);
  rs.affine_m_.assign(n + 1, std::vector<int>(n + 1, 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      mpq_class ij = dot(aff[i], aff[j]);
      if (ij * ij == dot(aff[i], aff[i]) * dot(aff[j], aff[j])) {
        rs.affine_m_[i][j] = 0;
        continue;
      }
      mpq_class prod = cartan_entry(aff[i], aff[j]) * cartan_entry(aff[j], aff[i]);
      static const int table[] = {2, 3, 4, 6};
      int p = static_cast<int>(prod.get_num().get_si());
      if (prod.get_den() != 1 || p < 0 || p > 3) throw std::logic_error("bad affine Cartan product");
      rs.affine_m_[i][j] = table[p];
    }

  // Q+ basis: simple coroots, halved where 2*alpha_i is a root.
  for (int i = 0; i < n; ++i) {
    int idx = rs.simple_idx_[i];
    int d = rs.double_[idx];
    rs.coroot_basis_.push_back(d >= 0 ? rs.pos_[d].coroot : rs.pos_[idx].coroot);
  }
  {
    // Invert the matrix whose columns are the basis vectors.
    std::vector<Vec> a(n, Vec(2 * n, 0));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = rs.coroot_basis_[c][r];
      a[r][n + r] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (sgn(a[piv][c]) == 0) ++piv;
      std::swap(a[piv], a[c]);
      mpq_class inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        mpq_class fac = a[r][c];
        for (int k = 0; k < 2 * n; ++k) a[r][k] -= fac * a[c][k];
      }
    }
    rs.coroot_basis_inv_.assign(n, Vec(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rs.coroot_basis_inv_[r][c] = a[r][n + c];
  }

  rs.rho_weights_.assign(n, 0);
  for (const auto& r : rs.pos_)
    for (int i = 0; i < n; ++i) rs.rho_weights_[i] += r.simple[i];

  if (rs.pos_.size() != rs.classical_positive_count())
    throw std::logic_error("positive root count mismatch for " + rs.name());
  return rs;
}

std::string RootSystem::name() const {
  return family_name(family_) + std::to_string(rank_);
}

int RootSystem::pairing(const Coweight& mu, const Root& a) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += mu[i] * a.simple[i];
  return s;
}

int RootSystem::find_root(const RootCoords& c) const {
  auto it = by_simple_.find(c);
  return it == by_simple_.end() ? -1 : it->second;
}

int RootSystem::find_by_coroot(const Coweight& c) const {
  auto it = by_coroot_.find(c);
  return it == by_coroot_.end() ? -1 : it->second;
}

std::vector<int> RootSystem::marks() const { return pos_[highest_].simple.to_vector(); }

std::vector<mpq_class> RootSystem::coroot_coefficients(const Coweight& v) const {
  std::vector<mpq_class> k(rank_, 0);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) k[r] += coroot_basis_inv_[r][c] * v[c];
  return k;
}

bool RootSystem::in_coroot_lattice(const Coweight& v) const {
  for (const auto& k : coroot_coefficients(v))
    if (k.get_den() != 1) return false;
  return true;
}

bool RootSystem::in_coroot_cone(const Coweight& v) const {
  for (const auto& k : coroot_coefficients(v))
    if (k.get_den() != 1 || sgn(k) < 0) return false;
  return true;
}

long RootSystem::rho_height(const Coweight& v) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += rho_weights_[i] * v[i];
  return s;
}

Coweight RootSystem::rho_check() const {
  Coweight r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = 1;
  return r;
}

Coweight RootSystem::reflect(int i, const Coweight& mu) const {
  Coweight r = mu;
  for (int j = 0; j < rank_; ++j) r[j] -= mu[i] * cartan_[i][j];
  return r;
}

Coweight RootSystem::dominant_rep(const Coweight& mu) const {
  Coweight r = mu;
  for (;;) {
    int i = 0;
    while (i < rank_ && r[i] >= 0) ++i;
    if (i == rank_) return r;
    r = reflect(i, r);
  }
}

unsigned long long RootSystem::classical_weyl_order() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (1ULL << n) * factorial(n);
    case Family::D: return (1ULL << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

size_t RootSystem::classical_positive_count() const {
  const size_t n = rank_;
  switch (family_) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::BC: return n * n + n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace sfab
