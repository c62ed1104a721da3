#include "braidmono/multiindex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace braidmono {

ExponentVector::ExponentVector(std::vector<int> l) : l_(std::move(l)) {
  if (l_.empty()) throw IndexOutOfRange("exponent vector must be nonempty");
  for (int v : l_)
    if (v < 1) throw IndexOutOfRange("exponents must be positive");
}

ExponentVector ExponentVector::parse(const std::string& text) {
  std::vector<int> l;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty exponent in '" + text + "'");
    l.push_back(std::stoi(item));
  }
  return ExponentVector(std::move(l));
}

long long ExponentVector::mu() const {
  long long m = 1;
  for (int v : l_) m *= v;
  return m;
}

std::string ExponentVector::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (i) os << ',';
    os << l_[i];
  }
  return os.str();
}

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
  if (c_.empty()) throw IndexOutOfRange("multiindex must be nonempty");
}

std::string MultiIndex::str() const {
  bool wide = std::any_of(c_.begin(), c_.end(), [](int v) { return v >= 10 || v < 0; });
  std::ostringstream os;
  if (wide) {
    os << '[';
    for (int nu = 0; nu < dim(); ++nu) {
      if (nu) os << ',';
      os << c_[nu];
    }
    os << ']';
  } else {
    for (int v : c_) os << v;
  }
  return os.str();
}

std::vector<MultiIndex> enumerate_indices(const ExponentVector& l) {
  std::vector<MultiIndex> out;
  out.reserve(l.mu());
  std::vector<int> c(l.dim(), 1);
  for (;;) {
    out.push_back(MultiIndex(c));
    int nu = l.dim() - 1;
    while (nu >= 0 && c[nu] == l.exponents()[nu]) {
      c[nu] = 1;
      --nu;
    }
    if (nu < 0) break;
    ++c[nu];
  }
  return out;
}

bool in_range(const ExponentVector& l, const MultiIndex& i) {
  if (i.dim() != l.dim()) return false;
  for (int nu = 1; nu <= l.dim(); ++nu)
    if (i[nu] < 1 || i[nu] > l[nu]) return false;
  return true;
}

long long rank_of(const ExponentVector& l, const MultiIndex& i) {
  if (!in_range(l, i)) throw IndexOutOfRange("multiindex out of range");
  long long r = 0;
  for (int nu = 1; nu <= l.dim(); ++nu) r = r * l[nu] + (i[nu] - 1);
  return r + 1;
}

MultiIndex unrank(const ExponentVector& l, long long rank) {
  if (rank < 1 || rank > l.mu()) throw IndexOutOfRange("rank out of range");
  long long r = rank - 1;
  std::vector<int> c(l.dim());
  for (int nu = l.dim(); nu >= 1; --nu) {
    c[nu - 1] = static_cast<int>(r % l[nu]) + 1;
    r /= l[nu];
  }
  return MultiIndex(std::move(c));
}

MultiIndex successor(const ExponentVector& l, const MultiIndex& i) {
  return unrank(l, rank_of(l, i) + 1);
}

MultiIndex component_successor(const MultiIndex& i, int nu) {
  if (nu < 1 || nu > i.dim()) throw IndexOutOfRange("component out of range");
  std::vector<int> c = i.components();
  ++c[nu - 1];
  return MultiIndex(std::move(c));
}

bool is_correlated_pair(const MultiIndex& i, const MultiIndex& j) {
  if (i.dim() != j.dim()) throw RankMismatch("multiindex dimensions differ");
  if (!(i < j)) return false;
  for (int nu = 1; nu <= i.dim(); ++nu)
    if (j[nu] != i[nu] && j[nu] != i[nu] + 1) return false;
  return true;
}

bool is_correlated_triple(const MultiIndex& i, const MultiIndex& j,
                          const MultiIndex& k) {
  return is_correlated_pair(i, j) && is_correlated_pair(i, k) &&
         is_correlated_pair(j, k);
}

bool is_correlated_quadruple(const MultiIndex& i, const MultiIndex& j,
                             const MultiIndex& k, const MultiIndex& m) {
  return is_correlated_pair(i, j) && is_correlated_pair(i, k) &&
         is_correlated_pair(i, m) && is_correlated_pair(j, k) &&
         is_correlated_pair(j, m) && is_correlated_pair(k, m);
}

int level_of(const MultiIndex& i, const MultiIndex& j) {
  if (i.dim() != j.dim()) throw RankMismatch("multiindex dimensions differ");
  return j[1] - i[1];
}

double modulus_of(int i1, int i2, int j1, int j2, int l1, int l2, double eta2) {
  if (i1 == j1) throw UndefinedModulus("modulus needs i1 != j1");
  if (i2 == j2) return 0.0;
  const double pi = 3.14159265358979323846;
  double num = std::sin(pi * static_cast<double>(i2 - j2) / l2);
  double den = std::sin(pi * static_cast<double>(i1 - j1) / l1);
  return eta2 * std::fabs(num / den);
}

int DynkinDiagram::weight_of(long long a, long long b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges)
    if (e.a == a && e.b == b) return e.weight;
  return 0;
}

std::vector<std::array<long long, 3>> DynkinDiagram::triangles() const {
  std::vector<std::array<long long, 3>> out;
  const long long n = static_cast<long long>(vertices.size());
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& e : edges) adj[e.a][e.b] = 1;
  for (long long a = 1; a <= n; ++a)
    for (long long b = a + 1; b <= n; ++b) {
      if (!adj[a][b]) continue;
      for (long long c = b + 1; c <= n; ++c)
        if (adj[a][c] && adj[b][c]) out.push_back({a, b, c});
    }
  return out;
}

std::string DynkinDiagram::dot() const {
  std::ostringstream os;
  os << "graph dynkin {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v)
    os << "  v" << v + 1 << " [label=\"" << vertices[v].str() << "\"];\n";
  for (const auto& e : edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << (e.weight > 0 ? "+1" : "-1")
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string DynkinDiagram::json() const {
  std::ostringstream os;
  os << "{\"exponents\":[";
  for (int nu = 1; nu <= exponents.dim(); ++nu) {
    if (nu > 1) os << ',';
    os << exponents[nu];
  }
  os << "],\"vertices\":[";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (v) os << ',';
    os << '[';
    for (int nu = 1; nu <= vertices[v].dim(); ++nu) {
      if (nu > 1) os << ',';
      os << vertices[v][nu];
    }
    os << ']';
  }
  os << "],\"edges\":[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) os << ',';
    os << "{\"i\":" << edges[k].a << ",\"j\":" << edges[k].b
       << ",\"weight\":" << edges[k].weight << '}';
  }
  os << "]}";
  return os.str();
}

DynkinDiagram build_dynkin(const ExponentVector& l) {
  DynkinDiagram d{l, enumerate_indices(l), {}};
  const auto& vs = d.vertices;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!is_correlated_pair(vs[a], vs[b])) continue;
      int diff = 0;
      for (int nu = 1; nu <= l.dim(); ++nu) diff += vs[b][nu] - vs[a][nu];
      int weight = (1 + diff) % 2 == 0 ? 1 : -1;
      d.edges.push_back({static_cast<long long>(a + 1),
                         static_cast<long long>(b + 1), weight});
    }
  return d;
}

}  // namespace braidmono
