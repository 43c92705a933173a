#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "sfab/parameters.hpp"
#include "sfab/root_datum.hpp"
#include "sfab/weyl.hpp"

namespace sfab {

struct SphericalExpansion;
struct SymmetrizerData;

// Root system, parameters and lazily built derived data.  Caches are
// read-mostly; inserts take a unique lock.
class Context {
 public:
  Context(RootSystem rs, const std::map<int, mpq_class>& q);
  Context(const std::string& type, int rank, const std::map<int, mpq_class>& q);
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const RootSystem& rs() const { return rs_; }
  const ParamSystem& ps() const { return ps_; }
  int zdim() const { return ps_.n_classes(); }
  const std::vector<std::string>& names() const { return ps_.names(); }

  const WeylGroup& weyl() const;
  const QLaurent& w0_poincare(bool inverted) const;

  // Weyl-transformed c-function numerators; defined with the spherical module.
  const SymmetrizerData& symmetrizer() const;

  std::shared_ptr<const SphericalExpansion> find_expansion(const Coweight& lambda) const;
  std::shared_ptr<const SphericalExpansion> store_expansion(std::shared_ptr<const SphericalExpansion> e) const;

 private:
  RootSystem rs_;
  ParamSystem ps_;
  mutable std::once_flag weyl_once_;
  mutable std::unique_ptr<WeylGroup> weyl_;
  mutable std::unique_ptr<QLaurent> w0q_, w0qinv_;
  mutable std::once_flag sym_once_;
  mutable std::shared_ptr<const SymmetrizerData> sym_;
  mutable std::shared_mutex mu_;
  mutable std::map<Coweight, std::shared_ptr<const SphericalExpansion>> expansions_;
};

std::map<int, mpq_class> parse_q_list(const std::string& text);
mpq_class parse_rational(const std::string& text);

}  // namespace sfab
