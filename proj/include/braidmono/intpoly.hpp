#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "braidmono/common.hpp"

namespace braidmono {

// Monomials compared by total degree, ties broken lexicographically with the
// last variable strongest (variables are listed in increasing order).
struct GrLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial with exact integer coefficients.
class IntPoly {
public:
  explicit IntPoly(int nvars);
  static IntPoly constant(int nvars, mpz_class c);
  static IntPoly variable(int nvars, int var, int exp = 1);  // var 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, mpz_class, GrLexLess>& terms() const {
    return terms_;
  }

  void add_term(const std::vector<int>& exps, const mpz_class& c);

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly pow(int e) const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  int degree(int var) const;        // -1 for the zero polynomial
  int total_degree() const;         // -1 for zero
  int vanishing_order(int var) const;  // max k with x_var^k dividing; 0 for zero? -> error
  IntPoly derivative(int var) const;
  IntPoly coeff_of(int var, int k) const;       // coefficient of x_var^k
  IntPoly leading_coeff(int var) const;
  mpz_class content() const;                     // nonnegative gcd, 0 for zero
  IntPoly primitive_part() const;                // content 1, sign preserved
  IntPoly normalized_sign() const;               // leading coefficient > 0
  IntPoly substitute(int var, const IntPoly& value) const;
  IntPoly drop_var(int var) const;  // var must not occur

  mpz_class eval_int(const std::vector<mpz_class>& point) const;
  std::complex<double> eval_complex(
      const std::vector<std::complex<double>>& point) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string json(const std::vector<std::string>& names) const;

private:
  int nvars_;
  std::map<std::vector<int>, mpz_class, GrLexLess> terms_;
};

// Exact quotient; throws if the division is not exact.
IntPoly exact_divide(const IntPoly& num, const IntPoly& den);

// Sylvester resultant with respect to `var`, computed fraction-free.
IntPoly resultant(const IntPoly& p, const IntPoly& q, int var);

}  // namespace braidmono
