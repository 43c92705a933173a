#include "sfab/laurent.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace sfab {

namespace {

std::string var_name(const std::vector<std::string>& names, int i) {
  if (i < static_cast<int>(names.size())) return names[i];
  return "z" + std::to_string(i);
}

std::string monomial_text(const ZExp& e, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(names, i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-')
      s += " - " + terms[i].substr(1);
    else
      s += " + " + terms[i];
  }
  return s;
}

}  // namespace

std::string to_text(const QLaurent& p, const std::vector<std::string>& names) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(e, names);
    std::string cs = c.get_str();
    if (mono.empty())
      terms.push_back(cs);
    else if (c == 1)
      terms.push_back(mono);
    else if (c == -1)
      terms.push_back("-" + mono);
    else
      terms.push_back(cs + "*" + mono);
  }
  return join_terms(terms);
}

std::string to_text(const TorusPoly& p, const std::vector<std::string>& names) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back("(" + to_text(it->second, names) + ")*x" + it->first.str());
  return join_terms(terms);
}

QLaurent parse_qlaurent(const std::string& text, const std::vector<std::string>& names) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  const int dim = static_cast<int>(names.size());
  QLaurent out;
  if (s == "0") return out;

  // Split into signed terms; a sign right after '^' belongs to an exponent.
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') {
      terms.push_back(cur);
      cur.clear();
      if (ch == '-') cur = "-";
      continue;
    }
    cur += ch;
  }
  terms.push_back(cur);

  for (std::string term : terms) {
    if (term.empty() || term == "-") throw std::invalid_argument("malformed polynomial text: " + text);
    mpq_class coef = 1;
    if (term[0] == '-') {
      coef = -1;
      term = term.substr(1);
    } else if (term[0] == '+') {
      term = term.substr(1);
    }
    ZExp e(dim);
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("malformed polynomial text: " + text);
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        mpq_class c;
        if (c.set_str(factor, 10) != 0) throw std::invalid_argument("bad rational '" + factor + "'");
        c.canonicalize();
        coef *= c;
        continue;
      }
      std::string name = factor;
      int power = 1;
      if (auto pos = factor.find('^'); pos != std::string::npos) {
        name = factor.substr(0, pos);
        power = std::stoi(factor.substr(pos + 1));
      }
      int idx = -1;
      for (int i = 0; i < dim; ++i)
        if (names[i] == name) idx = i;
      if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
      e[idx] += power;
    }
    out.add_term(e, coef);
  }
  return out;
}

double eval(const QLaurent& p, const std::vector<double>& z) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double m = c.get_d();
    for (int i = 0; i < e.size(); ++i)
      if (e[i]) m *= std::pow(z[i], e[i]);
    s += m;
  }
  return s;
}

NumericTorusPoly numeric(const TorusPoly& p, const std::vector<double>& z) {
  NumericTorusPoly r;
  for (const auto& [k, c] : p.terms()) {
    r.dim = k.size();
    r.exps.push_back(k);
    r.coeffs.push_back(eval(c, z));
  }
  return r;
}

std::complex<double> NumericTorusPoly::operator()(const std::vector<std::complex<double>>& u) const {
  std::complex<double> s = 0.0;
  for (size_t t = 0; t < exps.size(); ++t) {
    std::complex<double> m = coeffs[t];
    for (int i = 0; i < dim; ++i)
      if (exps[t][i]) m *= ipow(u[i], exps[t][i]);
    s += m;
  }
  return s;
}

}  // namespace sfab
