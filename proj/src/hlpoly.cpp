#include "braidmono/hlpoly.hpp"

#include <sstream>

namespace braidmono {

std::vector<std::string> hl_var_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("z");
  return names;
}

IntPoly hl_discriminant(const ExponentVector& l, const HlBudget& budget) {
  long long mu = l.mu();
  if (mu > budget.max_mu_disc)
    throw ResourceExceeded("mu = " + std::to_string(mu) +
                           " exceeds discriminant budget " +
                           std::to_string(budget.max_mu_disc));
  int n = l.dim();
  // working arity: a_1..a_n, z, w
  const int nv = n + 2;
  const int zv = n, wv = n + 1;
  IntPoly p = IntPoly::variable(nv, zv);  // P_0 = z
  for (int k = 1; k <= n; ++k) {
    int lk = l[k];
    // A = w^{l_k} - (-1)^{l_k} a_k^{l_k+1}
    IntPoly a = IntPoly::variable(nv, wv, lk);
    IntPoly ak = IntPoly::variable(nv, k - 1, lk + 1);
    a = (lk % 2 == 0) ? a - ak : a + ak;
    // B = P_{k-1}(z - l_k w)
    IntPoly shift = IntPoly::variable(nv, zv) -
                    IntPoly::constant(nv, lk) * IntPoly::variable(nv, wv);
    IntPoly b = p.substitute(zv, shift);
    p = resultant(a, b, wv);
  }
  IntPoly out = p.drop_var(wv);
  // monic in z by construction; any deviation is a hard failure
  IntPoly lead = out.leading_coeff(n);
  if (!(lead == IntPoly::constant(n + 1, 1)))
    throw Error("discriminant polynomial is not monic in z");
  if (out.degree(n) != mu)
    throw Error("discriminant z-degree differs from the Milnor number");
  return out;
}

IntPoly hl_bifurcation(const ExponentVector& l, const HlBudget& budget) {
  long long mu = l.mu();
  if (mu < 2) throw Error("bifurcation polynomial needs mu >= 2");
  if (mu > budget.max_mu_bif)
    throw ResourceExceeded("mu = " + std::to_string(mu) +
                           " exceeds bifurcation budget " +
                           std::to_string(budget.max_mu_bif));
  HlBudget disc_budget = budget;
  disc_budget.max_mu_disc = std::max(budget.max_mu_disc, mu);
  IntPoly pd = hl_discriminant(l, disc_budget);
  int zv = l.dim();
  IntPoly r = resultant(pd, pd.derivative(zv), zv);
  if (r.is_zero())
    throw Error("z-discriminant vanished; discriminant was not reduced");
  return r.drop_var(zv).primitive_part().normalized_sign();
}

DegreeReport degree_report(const IntPoly& p, const ExponentVector& l) {
  DegreeReport r;
  int n = l.dim();
  r.total_degree = p.total_degree();
  r.var_degrees.clear();
  for (int v = 0; v < p.nvars(); ++v) r.var_degrees.push_back(p.degree(v));
  if (p.nvars() == n + 1) r.deg_z = p.degree(n);
  for (int v = 0; v < n && v < p.nvars(); ++v)
    r.vanishing_orders.push_back(p.is_zero() ? 0 : p.vanishing_order(v));
  r.content = p.content();
  return r;
}

std::string degree_report_json(const DegreeReport& r) {
  std::ostringstream os;
  os << "{\"deg_z\":" << r.deg_z << ",\"total_degree\":" << r.total_degree
     << ",\"var_degrees\":[";
  for (std::size_t k = 0; k < r.var_degrees.size(); ++k)
    os << (k ? "," : "") << r.var_degrees[k];
  os << "],\"vanishing_orders\":[";
  for (std::size_t k = 0; k < r.vanishing_orders.size(); ++k)
    os << (k ? "," : "") << r.vanishing_orders[k];
  os << "],\"content\":\"" << r.content.get_str() << "\"}";
  return os.str();
}

}  // namespace braidmono
