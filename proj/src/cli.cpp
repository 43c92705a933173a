#include "sfab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sfab/checks.hpp"
#include "sfab/hecke.hpp"
#include "sfab/plancherel.hpp"
#include "sfab/spherical.hpp"
#include "sfab/tree.hpp"

namespace sfab::cli {

namespace {

struct Outcome {
  json result = json::object();
  std::vector<std::string> failures;
};

json to_json(const Coweight& c) { return c.to_vector(); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Coweight parse_coweight(std::string text, int rank, const std::string& what) {
  for (char& ch : text)
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    try {
      size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + part + "' is not an integer");
    }
  }
  if (static_cast<int>(v.size()) != rank)
    throw ConfigError(what + " needs " + std::to_string(rank) + " coordinates, got " + std::to_string(v.size()));
  return Coweight::from(v);
}

long parse_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + text + "' is not an integer");
  }
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + text + "' is not a number");
  }
}

std::string task(const RunConfig& cfg, const std::string& key, const std::string& fallback) {
  auto it = cfg.task.find(key);
  return it == cfg.task.end() ? fallback : it->second;
}

bool has(const RunConfig& cfg, const std::string& key) { return cfg.task.count(key) > 0; }

std::unique_ptr<Context> make_context(const RunConfig& cfg) {
  if (cfg.type.empty()) throw ConfigError("missing root system type (--type)");
  if (cfg.rank < 1) throw ConfigError("missing or invalid rank (--rank)");
  if (cfg.q.empty()) throw ConfigError("missing parameters (--q 0=...,1=...)");
  return std::make_unique<Context>(cfg.type, cfg.rank, cfg.q);
}

std::string exact_text(const QLaurent& p, const Context& ctx) { return eval_exact(p, ctx.ps().class_q()).str(); }
std::string exact_text(const QRatio& r, const Context& ctx) { return r.exact_value(ctx.ps().class_q()).str(); }

// ---- commands ------------------------------------------------------------

Outcome cmd_info(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const auto& rs = ctx->rs();
  const auto& ps = ctx->ps();
  Outcome o;
  auto& r = o.result;
  r["root_system"] = rs.name();
  r["rank"] = rs.rank();
  r["mode"] = ps.mode() == Mode::Exceptional ? "exceptional" : "standard";
  r["warnings"] = ps.warnings();
  r["marks"] = rs.marks();
  json classes = json::array();
  const auto cq = ps.class_q();
  for (int k = 0; k < ps.n_classes(); ++k)
    classes.push_back({{"variable", ps.names()[k]}, {"nodes", ps.class_nodes(k)}, {"q", cq[k].get_str()}});
  r["classes"] = classes;
  json roots = json::array();
  const auto& pos = rs.positive_roots();
  for (size_t k = 0; k < pos.size(); ++k) {
    const QLaurent tau(ps.tau(static_cast<int>(k)), 1);
    roots.push_back({{"simple", pos[k].simple.to_vector()},
                     {"coroot", to_json(pos[k].coroot)},
                     {"tau", to_text(tau, ctx->names())},
                     {"tau_numeric", ps.tau_value(static_cast<int>(k))}});
  }
  r["positive_roots"] = roots;
  try {
    const auto& W = ctx->weyl();
    r["weyl_order"] = W.size();
    const auto rep = longest_element_identity(rs, W, ps);
    r["longest_element"] = {{"q_w0", to_text(QLaurent(rep.from_word, 1), ctx->names())},
                            {"tau_product", to_text(QLaurent(rep.from_tau, 1), ctx->names())},
                            {"equal", rep.ok}};
    if (!rep.ok) o.failures.push_back("q_{w0} != product of tau_alpha");
    r["poincare_inverse"] = to_text(ctx->w0_poincare(true), ctx->names());
  } catch (const ConfigError& e) {
    r["weyl_order"] = std::to_string(rs.classical_weyl_order());
    r["weyl_enumeration"] = e.what();
  }
  return o;
}

Outcome cmd_nlambda(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const Coweight l = parse_coweight(task(cfg, "lambda", ""), cfg.rank, "lambda");
  const QLaurent a = n_lambda(*ctx, l), b = n_lambda_first(*ctx, l);
  const Coweight ls = lambda_star(ctx->rs(), ctx->weyl(), l);
  Outcome o;
  auto& r = o.result;
  r["lambda"] = to_json(l);
  r["N"] = exact_text(a, *ctx);
  r["N_numeric"] = eval(a, ctx->ps().z_values());
  r["N_symbolic"] = to_text(a, ctx->names());
  r["N_from_longest_elements"] = to_text(b, ctx->names());
  r["lambda_star"] = to_json(ls);
  if (!(a == b)) o.failures.push_back("vertex count formulas disagree at lambda=" + l.str());
  if (!(n_lambda(*ctx, ls) == a)) o.failures.push_back("N_lambda* != N_lambda at lambda=" + l.str());
  return o;
}

Outcome cmd_spherical(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const Coweight l = parse_coweight(task(cfg, "lambda", ""), cfg.rank, "lambda");
  const auto e = macdonald_expand(*ctx, l);
  const auto z = ctx->ps().z_values();
  Outcome o;
  auto& r = o.result;
  r["lambda"] = to_json(l);
  r["basis"] = "monomial";
  r["normalization"] = "P_prime";
  r["scale"] = e->scale.text(ctx->names());
  json coeffs = json::array();
  for (const auto& [mu, c] : e->coeffs)
    coeffs.push_back({{"mu", to_json(mu)}, {"value", to_text(c, ctx->names())}, {"numeric", eval(c, z)}});
  r["coeffs"] = coeffs;
  const auto n = norm_at_one(*ctx, l);
  r["P_at_one"] = n.exact.text(ctx->names());
  r["P_at_one_numeric"] = n.value;
  return o;
}

Outcome cmd_structure(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const Coweight l = parse_coweight(task(cfg, "lambda", ""), cfg.rank, "lambda");
  const Coweight m = parse_coweight(task(cfg, "mu", ""), cfg.rank, "mu");
  const auto z = ctx->ps().z_values();
  const auto row = structure_constants(*ctx, l, m);
  Outcome o;
  json rows = json::array();
  double sum = 0;
  for (const auto& [nu, a] : row.a) {
    if (has(cfg, "nu") && !(nu == parse_coweight(task(cfg, "nu", ""), cfg.rank, "nu"))) continue;
    const double v = a.value(z);
    sum += v;
    rows.push_back({{"lambda", to_json(l)}, {"mu", to_json(m)}, {"nu", to_json(nu)}, {"a", a.text(ctx->names())},
                    {"a_exact", exact_text(a, *ctx)}, {"a_numeric", v}});
    if (v < -1e-12) o.failures.push_back("negative structure constant at nu=" + nu.str());
  }
  o.result["rows"] = rows;
  if (!has(cfg, "nu")) {
    QRatio total;
    for (const auto& [nu, a] : row.a) total = total.num.is_zero() ? a : total + a;
    const bool one = total.exact_value(ctx->ps().class_q()) == RadicalNumber(mpq_class(1));
    o.result["sum"] = sum;
    o.result["sum_is_one"] = one;
    if (!one) o.failures.push_back("structure constants do not sum to 1 for lambda=" + l.str() + " mu=" + m.str());
    auto top = row.a.find(l + m);
    const QRatio want(n_lambda(*ctx, l + m), n_lambda(*ctx, l) * n_lambda(*ctx, m));
    if (top == row.a.end() || !(top->second == want))
      o.failures.push_back("a_{lambda,mu;lambda+mu} != N_{lambda+mu}/(N_lambda N_mu) for lambda=" + l.str() + " mu=" + m.str());
  }
  return o;
}

std::vector<Coweight> lambdas_from(const RunConfig& cfg, int default_height) {
  if (has(cfg, "lambda")) return {parse_coweight(task(cfg, "lambda", ""), cfg.rank, "lambda")};
  const int h = static_cast<int>(parse_int(task(cfg, "max_height", std::to_string(default_height)), "max_height"));
  if (h < 0) throw ConfigError("max_height must be nonnegative");
  return dominant_up_to_height(cfg.rank, h);
}

Outcome cmd_phi_check(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  Outcome o;
  json rows = json::array();
  for (const auto& l : lambdas_from(cfg, 2)) {
    const auto p = macdonald_expand(*ctx, l);
    const auto phi = phi_lambda(*ctx, l);
    const auto phi2 = phi_lambda(*ctx, l, 1);
    bool equal = true, independent = true;
    for (const auto& [mu, c] : phi.coeffs) {
      if (!(c == p->scale * QRatio::from(p->full.coeff(mu), ctx->zdim()))) equal = false;
      auto it = phi2.coeffs.find(mu);
      if (it == phi2.coeffs.end() || !(it->second == c)) independent = false;
    }
    for (const auto& [mu, c] : p->full.terms())
      if (!phi.coeffs.count(mu)) equal = false;
    rows.push_back({{"lambda", to_json(l)}, {"nu", to_json(phi.nu)}, {"terms", phi.coeffs.size()},
                    {"equal", equal}, {"independent_of_nu", independent}});
    if (!equal) o.failures.push_back("phi_lambda != P_lambda at lambda=" + l.str());
    if (!independent) o.failures.push_back("phi_lambda depends on nu at lambda=" + l.str());
  }
  o.result["rows"] = rows;
  return o;
}

Outcome cmd_plancherel(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const auto lambdas = lambdas_from(cfg, 2);
  const int grid = static_cast<int>(parse_int(task(cfg, "grid", "129"), "grid"));
  const double tol = parse_real(task(cfg, "tol", "1e-8"), "tol");
  const std::string mode = task(cfg, "mode", "auto");
  if (grid < 1 || grid > 4097) throw ConfigError("grid must lie in [1, 4097]");
  const bool exceptional = ctx->ps().mode() == Mode::Exceptional;
  bool boundary = true;
  if (mode == "standard")
    boundary = false;
  else if (mode == "exceptional" && !exceptional)
    throw ConfigError("parameters are in the standard case; --mode exceptional does not apply");
  else if (mode != "auto" && mode != "exceptional")
    throw ConfigError("mode must be auto, standard or exceptional");
  const auto pm = orthogonality(*ctx, lambdas, grid, boundary);
  Outcome o;
  auto& r = o.result;
  r["mode"] = exceptional ? "exceptional" : "standard";
  r["extra_component_included"] = exceptional && boundary;
  r["grid"] = grid;
  json ls = json::array();
  for (const auto& l : lambdas) ls.push_back(to_json(l));
  r["lambdas"] = ls;
  json res = json::array();
  for (size_t a = 0; a < lambdas.size(); ++a) {
    json row = json::array();
    for (size_t b = 0; b < lambdas.size(); ++b)
      row.push_back(std::abs(pm.value[a][b] - (a == b ? pm.expected_diagonal[a] : 0.0)));
    res.push_back(row);
  }
  r["residuals"] = res;
  r["max_residual"] = pm.max_residual;
  const auto spec = spectrum_description(*ctx, {}, 0);
  r["components"] = spec.components;
  if (exceptional) r["b"] = spec.b;
  if (!(pm.max_residual < tol))
    o.failures.push_back("orthogonality residual " + std::to_string(pm.max_residual) + " exceeds " + task(cfg, "tol", "1e-8"));
  return o;
}

Outcome cmd_norm(const RunConfig& cfg) {
  auto ctx = make_context(cfg);
  const Coweight l = parse_coweight(task(cfg, "lambda", ""), cfg.rank, "lambda");
  const size_t samples = static_cast<size_t>(parse_int(task(cfg, "samples", "10000"), "samples"));
  const auto n = norm_at_one(*ctx, l);
  const auto s = sampled_sup(*ctx, l, samples);
  Outcome o;
  auto& r = o.result;
  r["lambda"] = to_json(l);
  r["P_at_one"] = n.exact.text(ctx->names());
  r["P_at_one_exact"] = exact_text(n.exact, *ctx);
  r["P_at_one_numeric"] = n.value;
  r["sampled_sup"] = s.sup;
  r["sampled_near_one"] = s.near_one;
  r["samples"] = samples;
  if (s.sup > n.value + kSupSlack) o.failures.push_back("sampled |P_lambda(u)| exceeds P_lambda(1) at lambda=" + l.str());
  // Rank one with integral parameters: compare with the tree operator.
  int q0 = 0, q1 = 0;
  if (cfg.rank == 1 && cfg.q.at(0).get_den() == 1 && cfg.q.at(1).get_den() == 1) {
    q0 = static_cast<int>(cfg.q.at(0).get_num().get_si());
    q1 = static_cast<int>(cfg.q.at(1).get_num().get_si());
  }
  if (q0 > 0 && has(cfg, "depth")) {
    const int depth = static_cast<int>(parse_int(task(cfg, "depth", "12"), "depth"));
    const auto est = extrapolated_norm(q0, q1, depth, l[0]);
    r["power_iteration"] = est.raw;
    r["power_iteration_extrapolated"] = est.extrapolated;
    if (std::abs(est.extrapolated - n.value) > kPowerIterationRel * n.value)
      o.failures.push_back("tree power iteration differs from P_lambda(1) by more than 1% at lambda=" + l.str());
  }
  return o;
}

Outcome cmd_tree(const RunConfig& cfg) {
  const int q0 = static_cast<int>(parse_int(task(cfg, "q0", "2"), "q0"));
  const int q1 = static_cast<int>(parse_int(task(cfg, "q1", "2"), "q1"));
  const int depth = static_cast<int>(parse_int(task(cfg, "depth", "8"), "depth"));
  const std::string verify = task(cfg, "verify", "all");
  const std::set<std::string> known{"counts", "horocycle", "rn", "integral", "norm", "all"};
  if (!known.count(verify)) throw ConfigError("verify must be one of counts, horocycle, rn, integral, norm, all");
  const auto t = TreeBuilding::build(q0, q1, depth);
  auto ctx = tree_context(q0, q1);
  const int u = t.unit();
  const int kmax = depth / u;
  Outcome o;
  auto& r = o.result;
  r["q0"] = q0;
  r["q1"] = q1;
  r["depth"] = depth;
  r["root_system"] = ctx->rs().name();
  r["vertices"] = t.vertex_count();
  auto want = [&](const char* s) { return verify == "all" || verify == s; };

  if (want("counts")) {
    json rows = json::array();
    for (int k = 0; k <= kmax; ++k) {
      const uint64_t c = sphere_count(t, t.root(), k);
      const std::string n = exact_text(n_lambda(*ctx, Coweight{k}), *ctx);
      rows.push_back({{"k", k}, {"sphere", c}, {"N", n}});
      if (std::to_string(c) != n) o.failures.push_back("sphere count != N_lambda at k=" + std::to_string(k));
    }
    r["counts"] = rows;
  }
  if (want("horocycle") && kmax >= 1) {
    json rows = json::array();
    const End w{{depth, 0}};
    for (int k = 0; k < kmax; ++k) {
      const auto census = horocycle_census(t, k, w);
      const auto dist = horocycle_distribution(*ctx, Coweight{k});
      bool match = true;
      json counts = json::object();
      for (const auto& [mu, c] : dist.counts) {
        auto it = census.find(mu[0]);
        const uint64_t got = it == census.end() ? 0 : it->second;
        counts[std::to_string(mu[0])] = got;
        if (std::to_string(got) != exact_text(c, *ctx)) match = false;
      }
      rows.push_back({{"k", k}, {"census", counts}, {"matches_algebra", match}});
      if (!match) o.failures.push_back("horocycle census != horocycle distribution at k=" + std::to_string(k));
    }
    r["horocycle"] = rows;
  }
  if (want("rn") && kmax >= 2) {
    const int mk = std::min(3, (depth - 1) / u - 1);
    const int rd = std::min(depth, (mk + 1) * u + 1);
    const auto small = TreeBuilding::build(q0, q1, rd);
    const auto rep = radon_nikodym_check(small, mk);
    r["rn"] = {{"checked", rep.checked}, {"failures", rep.failures}, {"max_distance", mk}, {"depth", rd},
               {"masses_sum_to_one", cylinder_masses_sum_to_one(small)}};
    if (rep.failures) o.failures.push_back("cylinder mass ratio != tau product (" + std::to_string(rep.failures) + " cases)");
  }
  if (want("integral") && kmax >= 1) {
    json rows = json::array();
    const std::vector<std::complex<double>> us{1.0, 2.0, std::polar(1.0, 0.7), {0.3, 1.1}};
    for (int k = 0; k < kmax; ++k)
      for (const auto& uu : us) {
        const auto f = boundary_integral_hom(t, k, uu, End{{depth, 0}});
        const auto p = macdonald_eval(*ctx, Coweight{k}, {uu});
        const double err = std::abs(f - p) / std::max(1.0, std::abs(p));
        rows.push_back({{"k", k}, {"u", {uu.real(), uu.imag()}}, {"boundary", {f.real(), f.imag()}},
                        {"P", {p.real(), p.imag()}}, {"rel_error", err}});
        if (err > 1e-10) o.failures.push_back("boundary integral != P_lambda(u) at k=" + std::to_string(k));
      }
    r["integral"] = rows;
  }
  if (want("norm") && kmax >= 3) {
    const auto est = extrapolated_norm(q0, q1, depth, 1);
    const double exact = norm_at_one(*ctx, Coweight{1}).value;
    r["norm"] = {{"power_iteration", est.raw}, {"extrapolated", est.extrapolated}, {"P_at_one", exact}};
    if (std::abs(est.extrapolated - exact) > kPowerIterationRel * exact)
      o.failures.push_back("tree power iteration differs from P_lambda(1) by more than 1%");
  }
  return o;
}

Outcome cmd_selftest(const RunConfig& cfg, std::ostream& err) {
  const std::string suite = task(cfg, "suite", "quick");
  if (suite != "quick" && suite != "full") throw ConfigError("suite must be quick or full");
  std::vector<int> ids;
  if (has(cfg, "criteria")) {
    std::stringstream ss(task(cfg, "criteria", ""));
    std::string part;
    while (std::getline(ss, part, ',')) {
      const long id = parse_int(trim(part), "criteria");
      if (id < 1 || id > kCriteria) throw ConfigError("criteria entries must lie in [1, " + std::to_string(kCriteria) + "]");
      ids.push_back(static_cast<int>(id));
    }
  }
  Outcome o;
  json rows = json::array();
  run_checks(suite == "full" ? Suite::Full : Suite::Quick, ids, [&](const CheckResult& c) {
    err << summary_line(c) << "\n";
    rows.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"failures", c.failures}});
    for (const auto& f : c.failures) o.failures.push_back("criterion " + std::to_string(c.id) + ": " + f);
  });
  o.result["suite"] = suite;
  o.result["criteria"] = rows;
  return o;
}

// ---- output ----------------------------------------------------------------

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else
    s = v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

std::string render(const json& report, const RunConfig& cfg) {
  if (cfg.format == "json") return report.dump(cfg.pretty ? 2 : -1) + "\n";
  std::ostringstream os;
  const json& res = report["result"];
  const json* rows = nullptr;
  for (const auto& key : {"rows", "coeffs", "criteria", "counts"})
    if (res.contains(key) && res[key].is_array() && !res[key].empty() && res[key][0].is_object()) {
      rows = &res[key];
      break;
    }
  if (rows) {
    std::vector<std::string> cols;
    for (const auto& [k, v] : (*rows)[0].items()) cols.push_back(k);
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& row : *rows) {
      for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
      os << "\n";
    }
  } else {
    os << "key,value\n";
    for (const auto& [k, v] : res.items()) os << k << "," << csv_cell(v) << "\n";
  }
  return os.str();
}

}  // namespace

const std::vector<std::string>& task_keys() {
  static const std::vector<std::string> keys = {"lambda", "mu",   "nu", "max_height", "grid",  "tol",  "mode",
                                                "samples", "depth", "q0", "q1",         "verify", "suite", "criteria"};
  return keys;
}

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  auto text = [](const json& v, const std::string& what) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) {
        if (!x.is_number_integer()) throw ConfigError(what + " must be a list of integers");
        s += (s.empty() ? "" : ",") + std::to_string(x.get<long long>());
      }
      return s;
    }
    throw ConfigError(what + " has an unsupported value");
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "type") {
      c.type = text(v, "type");
    } else if (key == "rank") {
      c.rank = static_cast<int>(parse_int(text(v, "rank"), "rank"));
    } else if (key == "q") {
      if (!v.is_object()) throw ConfigError("q must map node indices to rational strings");
      for (const auto& [node, qv] : v.items())
        c.q[static_cast<int>(parse_int(node, "q node"))] = parse_rational(text(qv, "q"));
    } else if (key == "task") {
      if (!v.is_object()) throw ConfigError("task must be an object");
      const auto& keys = task_keys();
      for (const auto& [tk, tv] : v.items()) {
        if (std::find(keys.begin(), keys.end(), tk) == keys.end()) throw ConfigError("unknown task key '" + tk + "'");
        c.task[tk] = text(tv, tk);
      }
    } else if (key == "output") {
      if (!v.is_object()) throw ConfigError("output must be an object");
      for (const auto& [ok, ov] : v.items()) {
        if (ok == "path")
          c.out_path = text(ov, "path");
        else if (ok == "format")
          c.format = text(ov, "format");
        else if (ok == "pretty")
          c.pretty = text(ov, "pretty") == "true";
        else
          throw ConfigError("unknown output key '" + ok + "'");
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
  return c;
}

json RunConfig::to_json() const {
  json j = json::object();
  if (!type.empty()) j["type"] = type;
  if (rank) j["rank"] = rank;
  if (!q.empty()) {
    json qj = json::object();
    for (const auto& [i, v] : q) qj[std::to_string(i)] = v.get_str();
    j["q"] = qj;
  }
  if (!task.empty()) j["task"] = task;
  json out = {{"format", format}, {"pretty", pretty}};
  if (!out_path.empty()) out["path"] = out_path;
  j["output"] = out;
  return j;
}

std::string option_help(const std::string& opt) {
  static const std::map<std::string, std::string> h = {
      {"lambda", "dominant coweight, e.g. 1,0"},
      {"mu", "dominant coweight"},
      {"nu", "restrict output to this coweight"},
      {"max-height", "sweep all dominant coweights up to this height"},
      {"grid", "quadrature points per dimension (default 129)"},
      {"tol", "residual tolerance (default 1e-8)"},
      {"mode", "auto, standard (torus only) or exceptional"},
      {"samples", "torus sample count"},
      {"depth", "tree depth"},
      {"q0", "tree parameter q0"},
      {"q1", "tree parameter q1"},
      {"verify", "counts, horocycle, rn, integral, norm or all"},
      {"suite", "quick or full"},
      {"criteria", "comma list of criterion numbers"},
  };
  auto it = h.find(opt);
  return it == h.end() ? std::string() : it->second;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical functions on affine buildings"};
  app.require_subcommand(1);
  std::map<std::string, std::string> flags;
  std::string config_path, type, rank, qtext, out_path, format;
  bool pretty = false;

  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> opts;
  };
  const std::vector<Spec> specs = {
      {"info", "root system, parameters and tau table", {}},
      {"nlambda", "vertex count N_lambda", {"lambda"}},
      {"spherical", "monomial expansion of P'_lambda", {"lambda"}},
      {"structure", "structure constants a_{lambda,mu;nu}", {"lambda", "mu", "nu"}},
      {"phi-check", "boundary integral homomorphism against P_lambda", {"lambda", "max-height"}},
      {"plancherel", "orthogonality under the Plancherel measure", {"lambda", "max-height", "grid", "tol", "mode"}},
      {"norm", "operator norm P_lambda(1) and sampled sup", {"lambda", "samples", "depth"}},
      {"tree", "explicit tree checks", {"q0", "q1", "depth", "verify"}},
      {"selftest", "acceptance suite", {"suite", "criteria"}},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--type", type, "root system type (A, B, C, D, E, F, G, BC)");
    sub->add_option("--rank", rank, "rank");
    sub->add_option("--q", qtext, "parameters, e.g. 0=4,1=4");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv");
    sub->add_flag("--pretty", pretty, "indent JSON output");
    for (const char* opt : s.opts) {
      std::string key = opt;
      std::replace(key.begin(), key.end(), '-', '_');
      sub->add_option(std::string("--") + opt, flags[key], option_help(opt));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  RunConfig cfg;
  json report;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read config " + config_path);
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
      cfg = RunConfig::from_json(j);
    }
    if (sub->count("--type")) cfg.type = type;
    if (sub->count("--rank")) cfg.rank = static_cast<int>(parse_int(rank, "rank"));
    if (sub->count("--q")) cfg.q = parse_q_list(qtext);
    if (sub->count("--out")) cfg.out_path = out_path;
    if (sub->count("--format")) cfg.format = format;
    if (pretty) cfg.pretty = true;
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
    for (const auto& [key, value] : flags) {
      std::string opt = key;
      std::replace(opt.begin(), opt.end(), '_', '-');
      if (sub->get_option_no_throw("--" + opt) && sub->count("--" + opt)) cfg.task[key] = value;
    }

    Outcome o;
    if (command == "info")
      o = cmd_info(cfg);
    else if (command == "nlambda")
      o = cmd_nlambda(cfg);
    else if (command == "spherical")
      o = cmd_spherical(cfg);
    else if (command == "structure")
      o = cmd_structure(cfg);
    else if (command == "phi-check")
      o = cmd_phi_check(cfg);
    else if (command == "plancherel")
      o = cmd_plancherel(cfg);
    else if (command == "norm")
      o = cmd_norm(cfg);
    else if (command == "tree")
      o = cmd_tree(cfg);
    else
      o = cmd_selftest(cfg, err);

    report = json{{"command", command}, {"result", o.result}, {"failures", o.failures},
                  {"status", o.failures.empty() ? "ok" : "failed"}};
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    report = json{{"command", command}, {"result", json::object()}, {"failures", {std::string("internal: ") + e.what()}},
                  {"status", "failed"}};
  }

  const std::string text = render(report, cfg);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << cfg.out_path << "\n";
      return 2;
    }
    f << text;
  }
  const auto& failures = report["failures"];
  for (const auto& f : failures) err << "FAILED: " << f.get<std::string>() << "\n";
  return failures.empty() ? 0 : 1;
}

}  // namespace sfab::cli
