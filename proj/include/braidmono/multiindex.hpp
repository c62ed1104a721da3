#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "braidmono/common.hpp"

namespace braidmono {

// Exponent data l_1,...,l_n of a Brieskorn-Pham polynomial
// x_1^{l_1+1} + ... + x_n^{l_n+1}.
class ExponentVector {
public:
  explicit ExponentVector(std::vector<int> l);
  static ExponentVector parse(const std::string& text);  // "2,3,2"

  int dim() const { return static_cast<int>(l_.size()); }
  int operator[](int nu) const { return l_[nu - 1]; }  // 1-based
  const std::vector<int>& exponents() const { return l_; }
  long long mu() const;  // Milnor number, product of the l_i
  std::string str() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
  std::vector<int> l_;
};

// Element of I_n(l_1,...,l_n); components are 1-based and bounded by the
// exponent vector.  Total order is lexicographic.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> components);

  int dim() const { return static_cast<int>(c_.size()); }
  int operator[](int nu) const { return c_[nu - 1]; }
  const std::vector<int>& components() const { return c_; }
  std::string str() const;  // "12" or "[1,2]" when wide

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.c_ <=> b.c_;
  }

private:
  std::vector<int> c_;
};

// All multiindices in lexicographic order; position in this list is the
// 1-based rank, which doubles as the strand/puncture number.
std::vector<MultiIndex> enumerate_indices(const ExponentVector& l);

bool in_range(const ExponentVector& l, const MultiIndex& i);

// 1-based rank within lexicographic order.
long long rank_of(const ExponentVector& l, const MultiIndex& i);
MultiIndex unrank(const ExponentVector& l, long long rank);

// Immediate lexicographic successor; error past the maximum.
MultiIndex successor(const ExponentVector& l, const MultiIndex& i);
// Successor in a single component (i_nu + 1); may leave the index range.
MultiIndex component_successor(const MultiIndex& i, int nu);

bool is_correlated_pair(const MultiIndex& i, const MultiIndex& j);
bool is_correlated_triple(const MultiIndex& i, const MultiIndex& j,
                          const MultiIndex& k);
bool is_correlated_quadruple(const MultiIndex& i, const MultiIndex& j,
                             const MultiIndex& k, const MultiIndex& m);

// Difference of the leading components.
int level_of(const MultiIndex& i, const MultiIndex& j);

// eta2 * |sin(pi (i2-j2)/l2) / sin(pi (i1-j1)/l1)|
double modulus_of(int i1, int i2, int j1, int j2, int l1, int l2, double eta2);

struct DynkinEdge {
  long long a, b;  // 1-based vertex ranks, a < b
  int weight;      // +1 or -1
  friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

// The Pham diagram: vertices are the multiindices, edges the correlated
// pairs weighted by (-1)^{1 + sum_nu (j_nu - i_nu)}.
struct DynkinDiagram {
  ExponentVector exponents;
  std::vector<MultiIndex> vertices;
  std::vector<DynkinEdge> edges;  // sorted by (a, b)

  // all edge triangles as vertex rank triples a < b < c
  std::vector<std::array<long long, 3>> triangles() const;
  int weight_of(long long a, long long b) const;  // 0 when no edge

  std::string dot() const;
  std::string json() const;
};

DynkinDiagram build_dynkin(const ExponentVector& l);

}  // namespace braidmono
