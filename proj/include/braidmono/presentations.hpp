#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmono/generators.hpp"
#include "braidmono/multiindex.hpp"
#include "braidmono/words.hpp"

namespace braidmono {

enum class RelatorTag { Braid, Commute, Triple };

struct Relator {
  FreeWord word;
  RelatorTag tag;
  friend bool operator==(const Relator&, const Relator&) = default;
};

struct Presentation {
  std::vector<std::string> generator_labels;
  std::vector<Relator> relators;

  int rank() const { return static_cast<int>(generator_labels.size()); }
  std::string text() const;  // "< gens | relators >"
  std::string json() const;
};

// Thm-style presentation over the multiindex set: braid relation per
// correlated pair, commutation per non-correlated pair, t_i t_j t_k t_i =
// t_j t_k t_i t_j per correlated triple.
Presentation bp_presentation(const ExponentVector& l);

// Same relation shapes read off a Pham diagram: edges, non-edges and
// triangles of weight product -1.
Presentation presentation_from_dynkin(const DynkinDiagram& d);

// Artin presentation of Br_n on n-1 generators.
Presentation artin_presentation_br(int n);

// Relator words t_i^-1 beta(t_i), trivial ones dropped.  When a
// factorization b = b0 sigma_pos^e b0^-1 is supplied, returns the two
// reduced relators instead.
struct TwistFactorization {
  BraidWord b0;
  int exponent;
  int position = 1;
};
std::vector<FreeWord> relators_of_braid(
    const BraidWord& b,
    const std::optional<TwistFactorization>& factorization = std::nullopt);

// Presentations are compared as multisets of relators up to free-group
// conjugacy and inverses.
bool same_presentation(const Presentation& a, const Presentation& b);

struct DerivationVerdict {
  bool holds = true;
  std::string witness;  // offending generator label + relator
};

// Checks that every relator derived from every bp_monodromy generator is
// conjugate to a presentation relator or its inverse.
DerivationVerdict verify_derivation(const ExponentVector& l);

enum class AbelianType { Trivial, EqualPair, Other };

struct AbelianizeReport {
  std::vector<AbelianType> per_relator;
  bool all_conform = true;  // braid/triple -> EqualPair or Trivial, commute -> Trivial
};

AbelianizeReport abelianize_check(const Presentation& p);

}  // namespace braidmono
