#pragma once

#include "braidmono/intpoly.hpp"
#include "braidmono/multiindex.hpp"

namespace braidmono {

// Budgets for the exact discriminant/bifurcation computations; overridable.
struct HlBudget {
  long long max_mu_disc = 12;
  long long max_mu_bif = 8;
};

// Variables of the returned polynomials: a_1, ..., a_n, z (z last, largest).
std::vector<std::string> hl_var_names(int n);

// Monic-in-z polynomial whose z-roots at fixed a are exactly the critical
// values of x_1^{l_1+1} + ... + x_n^{l_n+1} - sum a_i (l_i+1) x_i, computed by
// iterated resultants: P_k = Res_w(w^{l_k} - (-1)^{l_k} a_k^{l_k+1},
// P_{k-1}(z - l_k w)).
IntPoly hl_discriminant(const ExponentVector& l, const HlBudget& budget = {});

// Primitive part of Res_z(p_D, d/dz p_D), sign fixed so the leading
// coefficient is positive.  Defined for mu >= 2.
IntPoly hl_bifurcation(const ExponentVector& l, const HlBudget& budget = {});

struct DegreeReport {
  int deg_z = -1;
  int total_degree = -1;
  std::vector<int> var_degrees;      // per a_i, then z
  std::vector<int> vanishing_orders; // along each a_i = 0
  mpz_class content;
};

DegreeReport degree_report(const IntPoly& p, const ExponentVector& l);

std::string degree_report_json(const DegreeReport& r);

}  // namespace braidmono
