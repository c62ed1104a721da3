#include "braidmono/presentations.hpp"

#include <map>
#include <set>
#include <sstream>

namespace braidmono {

namespace {

FreeWord braid_relator(int rank, int i, int j) {
  // t_i t_j t_i (t_j t_i t_j)^-1
  FreeWord w(rank);
  w.append(i, 1);
  w.append(j, 1);
  w.append(i, 1);
  w.append(j, -1);
  w.append(i, -1);
  w.append(j, -1);
  return w;
}

FreeWord commute_relator(int rank, int i, int j) {
  FreeWord w(rank);
  w.append(i, 1);
  w.append(j, 1);
  w.append(i, -1);
  w.append(j, -1);
  return w;
}

FreeWord triple_relator(int rank, int i, int j, int k) {
  // t_i t_j t_k t_i (t_j t_k t_i t_j)^-1
  FreeWord w(rank);
  w.append(i, 1);
  w.append(j, 1);
  w.append(k, 1);
  w.append(i, 1);
  w.append(j, -1);
  w.append(i, -1);
  w.append(k, -1);
  w.append(j, -1);
  return w;
}

}  // namespace

std::string Presentation::text() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t k = 0; k < generator_labels.size(); ++k)
    os << (k ? " " : "") << 't' << generator_labels[k];
  os << " | ";
  for (std::size_t k = 0; k < relators.size(); ++k)
    os << (k ? ", " : "") << relators[k].word.str();
  os << " >";
  return os.str();
}

std::string Presentation::json() const {
  std::ostringstream os;
  os << "{\"generators\":[";
  for (std::size_t k = 0; k < generator_labels.size(); ++k)
    os << (k ? "," : "") << '"' << generator_labels[k] << '"';
  os << "],\"relators\":[";
  for (std::size_t k = 0; k < relators.size(); ++k) {
    const char* tag = relators[k].tag == RelatorTag::Braid     ? "braid"
                      : relators[k].tag == RelatorTag::Commute ? "commute"
                                                               : "triple";
    os << (k ? "," : "") << "{\"word\":\"" << relators[k].word.str()
       << "\",\"tag\":\"" << tag << "\"}";
  }
  os << "]}";
  return os.str();
}

Presentation bp_presentation(const ExponentVector& l) {
  auto idx = enumerate_indices(l);
  int mu = static_cast<int>(idx.size());
  Presentation p;
  for (const auto& i : idx) p.generator_labels.push_back(i.str());
  for (int a = 1; a <= mu; ++a)
    for (int b = a + 1; b <= mu; ++b) {
      if (is_correlated_pair(idx[a - 1], idx[b - 1]))
        p.relators.push_back({braid_relator(mu, a, b), RelatorTag::Braid});
      else
        p.relators.push_back({commute_relator(mu, a, b), RelatorTag::Commute});
    }
  for (int a = 1; a <= mu; ++a)
    for (int b = a + 1; b <= mu; ++b)
      for (int c = b + 1; c <= mu; ++c)
        if (is_correlated_triple(idx[a - 1], idx[b - 1], idx[c - 1]))
          p.relators.push_back({triple_relator(mu, a, b, c), RelatorTag::Triple});
  return p;
}

Presentation presentation_from_dynkin(const DynkinDiagram& d) {
  int mu = static_cast<int>(d.vertices.size());
  Presentation p;
  for (const auto& v : d.vertices) p.generator_labels.push_back(v.str());
  std::set<std::pair<long long, long long>> edges;
  for (const auto& e : d.edges) edges.insert({e.a, e.b});
  for (int a = 1; a <= mu; ++a)
    for (int b = a + 1; b <= mu; ++b) {
      if (edges.count({a, b}))
        p.relators.push_back({braid_relator(mu, a, b), RelatorTag::Braid});
      else
        p.relators.push_back({commute_relator(mu, a, b), RelatorTag::Commute});
    }
  for (const auto& tri : d.triangles()) {
    int w = d.weight_of(tri[0], tri[1]) * d.weight_of(tri[0], tri[2]) *
            d.weight_of(tri[1], tri[2]);
    if (w == -1)
      p.relators.push_back({triple_relator(mu, static_cast<int>(tri[0]),
                                           static_cast<int>(tri[1]),
                                           static_cast<int>(tri[2])),
                            RelatorTag::Triple});
  }
  return p;
}

Presentation artin_presentation_br(int n) {
  int rank = n - 1;
  Presentation p;
  for (int i = 1; i <= rank; ++i) p.generator_labels.push_back(std::to_string(i));
  for (int a = 1; a <= rank; ++a)
    for (int b = a + 1; b <= rank; ++b) {
      if (b == a + 1)
        p.relators.push_back({braid_relator(rank, a, b), RelatorTag::Braid});
      else
        p.relators.push_back({commute_relator(rank, a, b), RelatorTag::Commute});
    }
  return p;
}

std::vector<FreeWord> relators_of_braid(
    const BraidWord& b, const std::optional<TwistFactorization>& factorization) {
  int n = b.strands();
  std::vector<FreeWord> out;
  if (!factorization) {
    auto imgs = artin_images(b);
    for (int i = 1; i <= n; ++i) {
      FreeWord w = FreeWord::generator(n, i, -1) * imgs[i - 1];
      if (!w.is_identity()) out.push_back(w);
    }
    return out;
  }
  const auto& f = *factorization;
  if (f.b0.strands() != n) throw StrandMismatch("factorization strand mismatch");
  if (f.position < 1 || f.position + 1 > n)
    throw IndexOutOfRange("factorization position out of range");
  FreeEndo beta0 = artin_action(f.b0);
  FreeEndo tw = artin_action(BraidWord(n, {f.position}).power(f.exponent));
  for (int i = f.position; i <= f.position + 1; ++i) {
    FreeWord w = FreeWord::generator(n, i, -1) * tw.image(i);
    FreeWord r = beta0.apply(w);
    if (!r.is_identity()) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<int> canonical_class_key(const FreeWord& w) {
  auto k1 = w.conjugacy_key();
  auto k2 = w.inverse().conjugacy_key();
  return std::min(k1, k2);
}

std::multiset<std::vector<int>> relator_class_multiset(const Presentation& p) {
  std::multiset<std::vector<int>> keys;
  for (const auto& r : p.relators) keys.insert(canonical_class_key(r.word));
  return keys;
}

}  // namespace

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.rank() != b.rank()) return false;
  return relator_class_multiset(a) == relator_class_multiset(b);
}

DerivationVerdict verify_derivation(const ExponentVector& l) {
  DerivationVerdict v;
  Presentation pres = bp_presentation(l);
  std::set<std::vector<int>> keys;
  for (const auto& r : pres.relators) keys.insert(canonical_class_key(r.word));
  FamilyResult fam = generator_family({Family::BpMonodromy, l});
  for (const auto& g : fam.generators) {
    for (const auto& rel : relators_of_braid(g.word)) {
      if (!keys.count(canonical_class_key(rel))) {
        v.holds = false;
        v.witness = g.label + " yields relator " + rel.str() +
                    " not conjugate to any presentation relator";
        return v;
      }
    }
  }
  return v;
}

AbelianizeReport abelianize_check(const Presentation& p) {
  AbelianizeReport rep;
  for (const auto& r : p.relators) {
    std::map<int, long long> sums;
    for (const auto& s : r.word.syllables()) sums[s.gen] += s.exp;
    std::erase_if(sums, [](const auto& kv) { return kv.second == 0; });
    AbelianType type;
    if (sums.empty()) {
      type = AbelianType::Trivial;
    } else if (sums.size() == 2) {
      auto it = sums.begin();
      long long e1 = it->second;
      long long e2 = std::next(it)->second;
      type = (e1 + e2 == 0 && (e1 == 1 || e1 == -1)) ? AbelianType::EqualPair
                                                     : AbelianType::Other;
    } else {
      type = AbelianType::Other;
    }
    rep.per_relator.push_back(type);
    bool ok = false;
    switch (r.tag) {
      case RelatorTag::Commute:
        ok = type == AbelianType::Trivial;
        break;
      case RelatorTag::Braid:
      case RelatorTag::Triple:
        ok = type == AbelianType::Trivial || type == AbelianType::EqualPair;
        break;
    }
    if (!ok) rep.all_conform = false;
  }
  return rep;
}

}  // namespace braidmono
