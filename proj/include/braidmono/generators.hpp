#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmono/multiindex.hpp"
#include "braidmono/words.hpp"

namespace braidmono {

// ---- positional constructors (1-based strand positions) ----

// Band generator sigma_{i,j} = sigma_{j-1}...sigma_{i+1} sigma_i
// sigma_{i+1}^-1...sigma_{j-1}^-1 (sigma_{i,i+1} = sigma_i); the half twist
// on the arc passing in front of the intermediate punctures.
BraidWord band(int strands, int i, int j);

// Half twist on the arc passing behind all intermediate punctures,
// (prod_{i<j<k} sigma_{i,j}^2) sigma_{i,k} (prod ...)^-1.
BraidWord back_band(int strands, int i, int k);

// Half twist passing in front up to j and behind from j+1 onwards.
BraidWord split_band(int strands, int i, int j, int k);

// BKL fundamental word on positions i..j-1: prod_{i<=k<j} sigma_k.
BraidWord subcable(int strands, int i, int j);

// delta_n = sigma_1 ... sigma_{n-1}.
BraidWord fundamental(int strands);

// ---- multiindex-aware constructors over Br_mu ----

// Band between the punctures of two in-range multiindices.
BraidWord band_mi(const ExponentVector& l, const MultiIndex& i,
                  const MultiIndex& j);

// Subcable twist delta_{i,j} on the punctures between i and j.
BraidWord subcable_mi(const ExponentVector& l, const MultiIndex& i,
                      const MultiIndex& j);

// Cable twist delta_phi = prod over blocks of the block fundamental word;
// blocks are the fibres of the last component.
BraidWord cable_twist(const ExponentVector& l);

// Fundamental word of the block of all indices with prefix i' (all values of
// the last component).
BraidWord block_cable(const ExponentVector& l, const MultiIndex& i_prefix);

// Extended band generator: the last components a, b may be arbitrary
// integers.  With in-range representatives r == a (mod l_n), the shift
// m = a - r is realised by conjugation with block cable powers.
BraidWord extended_band(const ExponentVector& l,
                        const std::vector<int>& i_prefix, int a,
                        const std::vector<int>& j_prefix, int b);

// tau twist for a pair of multiindices with i_1 < j_1, normalised so that the
// level-one element coincides with the extended band generator.  `shift`
// displaces the last component of j.  For level > 1 the word is
// C sigma^ext C^-1 with C the product of full twists sigma_{i,p}^2 over all
// positions p in first-component blocks strictly between i_1 and j_1.
BraidWord tau_generator(const ExponentVector& l, const MultiIndex& i,
                        const MultiIndex& j, int shift = 0);

// tau with arbitrary integer last components on both sides (the raw index
// convention); tau_raw(i1, i2 - l_n, j1, j2) == tau_generator(i, j, 0).
BraidWord tau_raw(const ExponentVector& l, const std::vector<int>& i_prefix,
                  int a, const std::vector<int>& j_prefix, int b);

// ---- homomorphisms between braid groups ----

// phi_{i1}: Br_{l2...ln} -> Br_{l1...ln}, Artin generator at position m to
// the one at position (i1-1) l2...ln + m.
BraidWord lift_primary(const ExponentVector& l, int i1, const BraidWord& b);

// psi_{in}: Br_{l1...l_{n-1}} -> Br_{l1...ln}; sigma_{m,m+1} maps to the band
// between the strands (m-1) l_n + i_n and m l_n + i_n.
BraidWord lift_secondary(const ExponentVector& l, int in_, const BraidWord& b);

// eta_{l_n}: replaces each strand by a ribbon of block_size strands.
BraidWord cable_band(int block_size, const BraidWord& b);

// ---- named generator specs ----

enum class GeneratorKind {
  Band,        // sigma_{i,j} by positions
  BackBand,    // sigma-check
  SplitBand,   // remark-sig arc
  Subcable,    // delta_{i,j} by positions
  Fundamental, // delta_n
  CableTwist,  // delta_phi of an exponent vector
  ExtendedBand,
  Tau,
};

struct GeneratorSpec {
  GeneratorKind kind;
  int strands = 0;                      // positional kinds
  std::vector<int> positions;           // i[,j[,k]]
  std::optional<ExponentVector> l;      // multiindex kinds
  std::vector<int> i_index, j_index;    // full index incl. possibly-shifted last comp
  int shift = 0;                        // tau
};

BraidWord make_generator(const GeneratorSpec& spec);

// ---- generator families ----

struct LabeledBraid {
  std::string label;
  std::string kind;
  std::vector<std::string> indices;
  BraidWord word;
};

enum class Family {
  BpMonodromy,  // Thm mainref generators over I(l)
  An,           // sigma_i^3, sigma_{i,j}^2 (|i-j|>=2)
  Gn,           // primary lifts of BP(l_2..l_n) generators
  Fn,           // the f_a list
  CwDelta,      // delta_2^3 ... delta_n^{n+1}
  E,            // Hurwitz stabilizer generators E_{l,l'}
  ESpherical,   // E^s_{6k,l}, planar words + spherical relation metadata
  Companions,   // std-comp of a base family
};

struct FamilySpec {
  Family family;
  std::optional<ExponentVector> l;  // BpMonodromy, Gn, Fn
  int n = 0;                        // An (number of punctures = strands), CwDelta
  int el = 0, elp = 0;              // E(l, l'); ESpherical uses (k=el, l=elp)
  // Companions: base family spec and block size
  std::optional<Family> base;
  std::optional<ExponentVector> base_l;
  int base_n = 0;
  int block = 0;
};

struct FamilyResult {
  std::vector<LabeledBraid> generators;
  std::string metadata;  // e.g. the spherical relation
};

FamilyResult generator_family(const FamilySpec& spec);

std::string family_json(const FamilyResult& fam);

}  // namespace braidmono
