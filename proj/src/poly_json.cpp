#include "segrekit/poly_json.hpp"

#include <sstream>

namespace segrekit {

Var var_from_name(const std::string& name) {
  for (Var v : {Var::Z, Var::W, Var::ZB, Var::WB})
    if (name == var_name(v)) return v;
  // alias set used by the Segre-variable viewpoint
  if (name == "xi") return Var::Z;
  if (name == "eta") return Var::W;
  if (name == "xibar") return Var::ZB;
  if (name == "etabar") return Var::WB;
  throw std::invalid_argument("unknown variable: " + name);
}

static ComplexRational term_quotient(const ComplexRational& a, const ComplexRational& b) {
  return a / b;
}

Poly divide_exact(const Poly& a, const Poly& b, Var v) {
  if (!a.is_univariate_in(v) || !b.is_univariate_in(v))
    throw std::invalid_argument("divide_exact: inputs must be univariate");
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  Poly rem = a, quot;
  int db = b.degree_in(v);
  ComplexRational lb = leading_coeff(b, v);
  while (!rem.is_zero() && rem.degree_in(v) >= db) {
    int dr = rem.degree_in(v);
    ComplexRational q = term_quotient(leading_coeff(rem, v), lb);
    Poly t(q, mono_var(v, static_cast<uint32_t>(dr - db)));
    quot += t;
    rem -= t * b;
  }
  if (!rem.is_zero()) throw std::domain_error("divide_exact: division is not exact");
  return quot;
}

Poly poly_mod(const Poly& a, const Poly& b, Var v) {
  if (!a.is_univariate_in(v) || !b.is_univariate_in(v))
    throw std::invalid_argument("poly_mod: inputs must be univariate");
  if (b.is_zero()) throw std::domain_error("poly_mod: division by zero");
  Poly rem = a;
  int db = b.degree_in(v);
  ComplexRational lb = leading_coeff(b, v);
  while (!rem.is_zero() && rem.degree_in(v) >= db) {
    int dr = rem.degree_in(v);
    ComplexRational q = term_quotient(leading_coeff(rem, v), lb);
    rem -= Poly(q, mono_var(v, static_cast<uint32_t>(dr - db))) * b;
  }
  return rem;
}

Poly gcd_univariate(const Poly& a, const Poly& b, Var v) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd_univariate: gcd(0,0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y, v);
    x = y;
    y = r;
  }
  ComplexRational l = leading_coeff(x, v);
  return ComplexRational(1) / l * x;  // monic
}

Poly lcm_univariate(const Poly& a, const Poly& b, Var v) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = gcd_univariate(a, b, v);
  Poly l = divide_exact(a * b, g, v);
  ComplexRational lead = leading_coeff(l, v);
  return ComplexRational(1) / lead * l;
}

std::pair<Poly, Poly> reduce_by(const Poly& a, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("reduce_by: zero divisor");
  // leading term under graded-lex
  const auto& dt = d.terms();
  auto lead_it = std::prev(dt.end());
  const Monomial lead_m = lead_it->first;
  const ComplexRational lead_c = lead_it->second;

  Poly rem = a, quot;
  bool progress = true;
  while (progress) {
    progress = false;
    // scan from the top term downward for a reducible monomial
    const auto& terms = rem.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (lead_m.divides(it->first)) {
        ComplexRational q = it->second / lead_c;
        Poly t(q, it->first.divide(lead_m));
        quot += t;
        rem -= t * d;
        progress = true;
        break;
      }
    }
  }
  return {quot, rem};
}

ComplexRational leading_coeff(const Poly& p, Var v) {
  if (p.is_zero()) return ComplexRational(0);
  int d = p.degree_in(v);
  return p.coeff(mono_var(v, static_cast<uint32_t>(d)));
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (Var v : {Var::Z, Var::W, Var::ZB, Var::WB}) {
      uint32_t k = m[v];
      if (k == 0) continue;
      os << "*" << var_name(v);
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (Var v : {Var::Z, Var::W, Var::ZB, Var::WB})
      if (m[v] > 0) exps[var_name(v)] = m[v];
    terms.push_back({{"exps", exps},
                     {"re", rat_to_string(c.re())},
                     {"im", rat_to_string(c.im())}});
  }
  return {{"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
  Poly p;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (auto it = t.at("exps").begin(); it != t.at("exps").end(); ++it)
      m[var_from_name(it.key())] = it.value().get<uint32_t>();
    ComplexRational c(rat_from_string(t.at("re").get<std::string>()),
                      rat_from_string(t.at("im").get<std::string>()));
    p.add_term(m, c);
  }
  return p;
}

}  // namespace segrekit
