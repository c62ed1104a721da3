#include "braidmono/intpoly.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace braidmono {

bool GrLexLess::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

IntPoly::IntPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error("polynomial needs at least one variable");
}

IntPoly IntPoly::constant(int nvars, mpz_class c) {
  IntPoly p(nvars);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
  return p;
}

IntPoly IntPoly::variable(int nvars, int var, int exp) {
  IntPoly p(nvars);
  if (var < 0 || var >= nvars) throw IndexOutOfRange("variable out of range");
  std::vector<int> e(nvars, 0);
  e[var] = exp;
  p.terms_[std::move(e)] = 1;
  return p;
}

void IntPoly::add_term(const std::vector<int>& exps, const mpz_class& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw RankMismatch("exponent vector arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  if (rhs.nvars_ != nvars_) throw RankMismatch("polynomial arity mismatch");
  IntPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  if (rhs.nvars_ != nvars_) throw RankMismatch("polynomial arity mismatch");
  IntPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

IntPoly IntPoly::operator-() const {
  IntPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (rhs.nvars_ != nvars_) throw RankMismatch("polynomial arity mismatch");
  IntPoly out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

IntPoly IntPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  IntPoly out = IntPoly::constant(nvars_, 1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

int IntPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int IntPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // leading monomial has the largest total degree under graded orders
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int IntPoly::vanishing_order(int var) const {
  if (terms_.empty()) throw ZeroPolynomial("vanishing order of zero polynomial");
  int v = INT_MAX;
  for (const auto& [e, c] : terms_) v = std::min(v, e[var]);
  return v;
}

IntPoly IntPoly::derivative(int var) const {
  IntPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

IntPoly IntPoly::coeff_of(int var, int k) const {
  IntPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    std::vector<int> d = e;
    d[var] = 0;
    out.add_term(d, c);
  }
  return out;
}

IntPoly IntPoly::leading_coeff(int var) const {
  int d = degree(var);
  if (d < 0) return IntPoly(nvars_);
  return coeff_of(var, d);
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  IntPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = c / g;
  return out;
}

IntPoly IntPoly::normalized_sign() const {
  if (terms_.empty()) return *this;
  if (terms_.rbegin()->second > 0) return *this;
  return -*this;
}

IntPoly IntPoly::substitute(int var, const IntPoly& value) const {
  if (value.nvars_ != nvars_) throw RankMismatch("arity mismatch in substitute");
  // cache powers of value
  std::vector<IntPoly> powers{IntPoly::constant(nvars_, 1)};
  IntPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[var])
      powers.push_back(powers.back() * value);
    std::vector<int> d = e;
    d[var] = 0;
    IntPoly term(nvars_);
    term.add_term(d, c);
    out = out + term * powers[e[var]];
  }
  return out;
}

IntPoly IntPoly::drop_var(int var) const {
  if (degree(var) > 0) throw Error("variable still occurs, cannot drop");
  IntPoly out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    std::vector<int> d;
    d.reserve(nvars_ - 1);
    for (int k = 0; k < nvars_; ++k)
      if (k != var) d.push_back(e[k]);
    out.add_term(d, c);
  }
  return out;
}

mpz_class IntPoly::eval_int(const std::vector<mpz_class>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw RankMismatch("evaluation point arity mismatch");
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    total += t;
  }
  return total;
}

std::complex<double> IntPoly::eval_complex(
    const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw RankMismatch("evaluation point arity mismatch");
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    total += t;
  }
  return total;
}

std::string IntPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool had = false;
    if (a != 1) {
      os << a.get_str();
      had = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (had) os << '*';
      os << names[k];
      if (e[k] > 1) os << '^' << e[k];
      had = true;
    }
    if (!had) os << a.get_str();
    first = false;
  }
  return os.str();
}

std::string IntPoly::json(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "{\"vars\":[";
  for (std::size_t k = 0; k < names.size(); ++k)
    os << (k ? "," : "") << '"' << names[k] << '"';
  os << "],\"terms\":[";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << ',';
    os << "{\"exps\":[";
    for (int k = 0; k < nvars_; ++k) os << (k ? "," : "") << it->first[k];
    os << "],\"coeff\":\"" << it->second.get_str() << "\"}";
    first = false;
  }
  os << "]}";
  return os.str();
}

IntPoly exact_divide(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  IntPoly rem = num;
  IntPoly quot(num.nvars());
  const auto& dlead = *den.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    std::vector<int> e(num.nvars());
    for (int k = 0; k < num.nvars(); ++k) {
      e[k] = rlead.first[k] - dlead.first[k];
      if (e[k] < 0) throw Error("non-exact polynomial division (monomial)");
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(),
                dlead.second.get_mpz_t());
    if (r != 0) throw Error("non-exact polynomial division (coefficient)");
    IntPoly t(num.nvars());
    t.add_term(e, q);
    quot = quot + t;
    rem = rem - t * den;
  }
  return quot;
}

IntPoly resultant(const IntPoly& p, const IntPoly& q, int var) {
  if (p.is_zero() || q.is_zero())
    throw ZeroPolynomial("resultant of zero polynomial");
  int dp = p.degree(var), dq = q.degree(var);
  if (dp == 0 && dq == 0) return IntPoly::constant(p.nvars(), 1);
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);

  int n = dp + dq;
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly(p.nvars())));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[r][r + k] = p.coeff_of(var, dp - k);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = q.coeff_of(var, dq - k);

  // fraction-free Bareiss elimination
  int sign = 1;
  IntPoly prev = IntPoly::constant(p.nvars(), 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return IntPoly(p.nvars());  // singular: resultant 0
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = IntPoly(p.nvars());
    }
    prev = m[k][k];
  }
  IntPoly det = m[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

}  // namespace braidmono
