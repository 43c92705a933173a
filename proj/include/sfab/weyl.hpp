#pragma once

#include <map>
#include <vector>

#include "sfab/root_datum.hpp"

namespace sfab {

struct WeylElement {
  IntMatrix mat;          // action on coweight coordinates
  std::vector<int> word;  // reduced word, generators 0-based; w = s_{word[0]} ... s_{word[k-1]}
  int length() const { return static_cast<int>(word.size()); }
  Coweight operator()(const Coweight& mu) const { return mat.apply(mu); }
};

constexpr size_t kWeylCap = 100000;

class WeylGroup {
 public:
  // Breadth-first closure with matrix deduplication; fails fast when the
  // classical order exceeds `cap`.
  static WeylGroup generate(const RootSystem& rs, size_t cap = kWeylCap);

  size_t size() const { return elems_.size(); }
  const std::vector<WeylElement>& elements() const { return elems_; }
  const WeylElement& operator[](size_t i) const { return elems_[i]; }
  const WeylElement& longest() const { return elems_[longest_]; }
  size_t longest_index() const { return longest_; }
  long index_of(const IntMatrix& m) const;

  // Indices of elements fixing mu.
  std::vector<size_t> stabilizer(const Coweight& mu) const;
  // Image of a positive root under w: index into positive roots and sign.
  std::pair<int, int> act_on_root(const RootSystem& rs, size_t w, int root) const;
  // Positive roots sent to negative roots by w.
  std::vector<int> inversions(const RootSystem& rs, size_t w) const;

 private:
  std::vector<WeylElement> elems_;
  std::map<IntMatrix, size_t> index_;
  size_t longest_ = 0;
};

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i);

// Orbit of mu by reflection closure, sorted.
std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& mu);
// |W0 mu| from the parabolic stabilizer of the dominant representative.
unsigned long long orbit_size(const RootSystem& rs, const Coweight& mu);
// Order of the parabolic subgroup generated by the given simple reflections.
unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& gens);

Coweight lambda_star(const RootSystem& rs, const WeylGroup& w, const Coweight& lambda);

// Dominant coweights mu with lambda - mu in Q+, sorted by decreasing
// rho-height then decreasing coordinates.
std::vector<Coweight> dominant_below(const RootSystem& rs, const Coweight& lambda);

}  // namespace sfab
