#include "sfab/context.hpp"

#include <sstream>

#include "sfab/spherical.hpp"

namespace sfab {

Context::Context(RootSystem rs, const std::map<int, mpq_class>& q)
    : rs_(std::move(rs)), ps_(ParamSystem::validate(rs_, q)) {}

Context::Context(const std::string& type, int rank, const std::map<int, mpq_class>& q)
    : Context(RootSystem::build(type, rank), q) {}

const WeylGroup& Context::weyl() const {
  std::call_once(weyl_once_, [this] {
    weyl_ = std::make_unique<WeylGroup>(WeylGroup::generate(rs_));
    w0q_ = std::make_unique<QLaurent>(poincare(*weyl_, ps_, false));
    w0qinv_ = std::make_unique<QLaurent>(poincare(*weyl_, ps_, true));
  });
  return *weyl_;
}

const QLaurent& Context::w0_poincare(bool inverted) const {
  weyl();
  return inverted ? *w0qinv_ : *w0q_;
}

std::shared_ptr<const SphericalExpansion> Context::find_expansion(const Coweight& lambda) const {
  std::shared_lock lock(mu_);
  auto it = expansions_.find(lambda);
  return it == expansions_.end() ? nullptr : it->second;
}

std::shared_ptr<const SphericalExpansion> Context::store_expansion(std::shared_ptr<const SphericalExpansion> e) const {
  std::unique_lock lock(mu_);
  auto [it, fresh] = expansions_.try_emplace(e->lambda, e);
  return it->second;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty() || v.set_str(t, 10) != 0) throw ConfigError("not an exact rational: '" + text + "'");
  if (v.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

std::map<int, mpq_class> parse_q_list(const std::string& text) {
  std::map<int, mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("parameter entry '" + item + "' is not of the form i=q");
    int idx;
    try {
      idx = std::stoi(item.substr(0, eq));
    } catch (const std::exception&) {
      throw ConfigError("bad parameter index in '" + item + "'");
    }
    if (!out.emplace(idx, parse_rational(item.substr(eq + 1))).second)
      throw ConfigError("parameter q" + std::to_string(idx) + " given twice");
  }
  return out;
}

}  // namespace sfab
