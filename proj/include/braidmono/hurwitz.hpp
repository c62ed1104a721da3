#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "braidmono/words.hpp"

namespace braidmono {

// Element of SL_2(Z) with unbounded integer entries.
class SL2Matrix {
public:
  SL2Matrix(mpz_class a, mpz_class b, mpz_class c, mpz_class d);
  static SL2Matrix identity();
  static SL2Matrix minus_identity();

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }

  SL2Matrix operator*(const SL2Matrix& rhs) const;
  SL2Matrix inverse() const;
  mpz_class trace() const { return a_ + d_; }
  std::string str() const;  // [[a,b],[c,d]]

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
  friend auto operator<=>(const SL2Matrix&, const SL2Matrix&) = default;

private:
  mpz_class a_, b_, c_, d_;
};

enum class Target { SL2, Braid, Perm };

// Tuple of group elements acted on by the Hurwitz moves.  All entries share
// one target group.
class GTuple {
public:
  static GTuple sl2(std::vector<SL2Matrix> entries);
  static GTuple braid(int strands, std::vector<BraidWord> entries);
  static GTuple perm(int degree, std::vector<Permutation> entries);

  Target target() const { return target_; }
  int size() const;
  int braid_strands() const { return strands_; }
  int perm_degree() const { return degree_; }

  const std::vector<SL2Matrix>& sl2_entries() const { return sl2_; }
  const std::vector<BraidWord>& braid_entries() const { return braid_; }
  const std::vector<Permutation>& perm_entries() const { return perm_; }

  // entrywise equality; braid entries via braids_equal
  bool same_tuple(const GTuple& other) const;

  // product of all entries, as group element data
  SL2Matrix sl2_product() const;
  BraidWord braid_product() const;
  Permutation perm_product() const;

  std::string serialize() const;  // canonical visited-set key
  std::string json() const;

private:
  GTuple() = default;
  Target target_ = Target::SL2;
  int strands_ = 0, degree_ = 0;
  std::vector<SL2Matrix> sl2_;
  std::vector<BraidWord> braid_;
  std::vector<Permutation> perm_;
};

// Left Hurwitz action: sigma_i sends (..., x_i, x_{i+1}, ...) to
// (..., x_i x_{i+1} x_i^-1, x_i, ...), and hurwitz_act(b1*b2, t) ==
// hurwitz_act(b1, hurwitz_act(b2, t)).
GTuple hurwitz_act(const BraidWord& b, const GTuple& t);

enum class BaseTupleKind { PhiN, Psi, PermH };

// phi_n: alternating (a, b, a, ...) in Br_3.
// psi(l, l'): l copies of -id, then alternating [[1,1],[0,1]] and
// [[1,0],[-1,1]] starting with the former.
// perm_h(n): adjacent transpositions in S_{n+1}.
GTuple base_tuple_phi(int n);
GTuple base_tuple_psi(int l, int lp);
GTuple base_tuple_perm_h(int n);

bool stabilizes(const BraidWord& b, const GTuple& t);

struct OrbitResult {
  bool exceeded = false;
  std::vector<GTuple> orbit;  // populated when not exceeded
  std::size_t visited = 0;
};

// BFS closure of t under the generators and their inverses, halting with an
// explicit resource-exceeded verdict once more than `cap` states are seen.
OrbitResult orbit_enumerate(const GTuple& t, const std::vector<BraidWord>& gens,
                            std::size_t cap);

}  // namespace braidmono
