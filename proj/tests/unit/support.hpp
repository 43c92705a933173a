#pragma once

#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sfab/context.hpp"
#include "sfab/laurent.hpp"

namespace testing {

using sfab::Coweight;
using sfab::QLaurent;
using sfab::TorusPoly;
using sfab::ZExp;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }
inline double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline mpq_class rational(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline QLaurent random_qlaurent(int dim, int terms, int spread = 3) {
  QLaurent p;
  for (int t = 0; t < terms; ++t) {
    ZExp e(dim);
    for (int i = 0; i < dim; ++i) e[i] = uniform(-spread, spread);
    p.add_term(e, rational(uniform(-9, 9), uniform(1, 4)));
  }
  return p;
}

inline TorusPoly random_torus(int rank, int zdim, int terms) {
  TorusPoly p;
  for (int t = 0; t < terms; ++t) {
    Coweight c(rank);
    for (int i = 0; i < rank; ++i) c[i] = uniform(-2, 2);
    p.add_term(c, random_qlaurent(zdim, 2, 2));
  }
  return p;
}

inline std::vector<std::complex<double>> random_torus_point(int rank) {
  std::vector<std::complex<double>> u;
  for (int i = 0; i < rank; ++i) u.push_back(std::polar(1.0, real(0, 6.283185307179586)));
  return u;
}

inline std::vector<std::complex<double>> random_point(int rank) {
  std::vector<std::complex<double>> u;
  for (int i = 0; i < rank; ++i) u.push_back(std::polar(real(0.6, 1.6), real(0, 6.283185307179586)));
  return u;
}

inline std::map<int, mpq_class> equal_q(int nodes, int q) {
  std::map<int, mpq_class> m;
  for (int i = 0; i < nodes; ++i) m[i] = q;
  return m;
}

inline Coweight cw(std::initializer_list<int> xs) { return Coweight(xs); }

}  // namespace testing
