#include "braidmono/generators.hpp"

#include <algorithm>
#include <sstream>

namespace braidmono {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw IndexOutOfRange(msg);
}

long long checked_mu(const ExponentVector& l) { return l.mu(); }

}  // namespace

BraidWord band(int strands, int i, int j) {
  require(1 <= i && i < j && j <= strands, "band indices out of range");
  BraidWord w(strands);
  for (int k = j - 1; k > i; --k) w.push(k);
  w.push(i);
  for (int k = i + 1; k <= j - 1; ++k) w.push(-k);
  return w;
}

BraidWord back_band(int strands, int i, int k) {
  require(1 <= i && i < k && k <= strands, "band indices out of range");
  BraidWord conj(strands);
  for (int j = i + 1; j < k; ++j) conj = conj * band(strands, i, j).power(2);
  return band(strands, i, k).conjugated_by(conj);
}

BraidWord split_band(int strands, int i, int j, int k) {
  require(1 <= i && i < k && k <= strands, "band indices out of range");
  require(i <= j && j < k, "split point out of range");
  BraidWord conj(strands);
  for (int jp = j + 1; jp < k; ++jp) conj = conj * band(strands, i, jp).power(2);
  return band(strands, i, k).conjugated_by(conj);
}

BraidWord subcable(int strands, int i, int j) {
  require(1 <= i && i <= j && j <= strands, "subcable range invalid");
  BraidWord w(strands);
  for (int k = i; k < j; ++k) w.push(k);
  return w;
}

BraidWord fundamental(int strands) { return subcable(strands, 1, strands); }

BraidWord band_mi(const ExponentVector& l, const MultiIndex& i,
                  const MultiIndex& j) {
  return band(static_cast<int>(checked_mu(l)), static_cast<int>(rank_of(l, i)),
              static_cast<int>(rank_of(l, j)));
}

BraidWord subcable_mi(const ExponentVector& l, const MultiIndex& i,
                      const MultiIndex& j) {
  return subcable(static_cast<int>(checked_mu(l)),
                  static_cast<int>(rank_of(l, i)),
                  static_cast<int>(rank_of(l, j)));
}

BraidWord block_cable(const ExponentVector& l, const MultiIndex& i_prefix) {
  int n = l.dim();
  require(n >= 2, "block cable needs dimension >= 2");
  require(i_prefix.dim() == n - 1, "prefix dimension mismatch");
  std::vector<int> lo = i_prefix.components();
  lo.push_back(1);
  long long p0 = rank_of(l, MultiIndex(lo));
  int mu = static_cast<int>(l.mu());
  return subcable(mu, static_cast<int>(p0), static_cast<int>(p0 + l[n] - 1));
}

BraidWord cable_twist(const ExponentVector& l) {
  int mu = static_cast<int>(l.mu());
  if (l.dim() == 1) return fundamental(mu);
  std::vector<int> prefix_l(l.exponents().begin(), l.exponents().end() - 1);
  ExponentVector lp{prefix_l};
  BraidWord w(mu);
  for (const auto& ip : enumerate_indices(lp)) w = w * block_cable(l, ip);
  return w;
}

namespace {

// representative of a in 1..m, congruent mod m
int range_rep(int a, int m) {
  int r = a % m;
  if (r <= 0) r += m;
  return r;
}

}  // namespace

BraidWord extended_band(const ExponentVector& l, const std::vector<int>& i_prefix,
                        int a, const std::vector<int>& j_prefix, int b) {
  int n = l.dim();
  require(static_cast<int>(i_prefix.size()) == n - 1 &&
              static_cast<int>(j_prefix.size()) == n - 1,
          "extended band prefix dimension mismatch");
  require(i_prefix < j_prefix, "extended band needs i' < j'");
  int ln = l[n];
  int ra = range_rep(a, ln), rb = range_rep(b, ln);
  int ma = a - ra, mb = b - rb;
  std::vector<int> ic = i_prefix, jc = j_prefix;
  ic.push_back(ra);
  jc.push_back(rb);
  BraidWord core = band_mi(l, MultiIndex(ic), MultiIndex(jc));
  if (ma == 0 && mb == 0) return core;
  // conjugation by positive cable powers shifts indices upward, so a shift
  // of m is realised by delta^m (...) delta^-m
  BraidWord di = block_cable(l, MultiIndex(i_prefix));
  BraidWord dj = block_cable(l, MultiIndex(j_prefix));
  return dj.power(mb) * di.power(ma) * core * di.power(-ma) * dj.power(-mb);
}

BraidWord tau_generator(const ExponentVector& l, const MultiIndex& i,
                        const MultiIndex& j, int shift) {
  int n = l.dim();
  require(in_range(l, i) && in_range(l, j), "tau indices out of range");
  require(i[1] < j[1], "tau needs i_1 < j_1");
  std::vector<int> ip(i.components().begin(), i.components().end() - 1);
  std::vector<int> jp(j.components().begin(), j.components().end() - 1);
  BraidWord core = extended_band(l, ip, i[n], jp, j[n] + shift);
  if (j[1] - i[1] == 1) return core;
  // full twists around every puncture in the blocks strictly between
  int mu = static_cast<int>(l.mu());
  long long block = 1;
  for (int nu = 2; nu <= n; ++nu) block *= l[nu];
  long long pos_i = rank_of(l, i);
  BraidWord conj(mu);
  for (int b = i[1] + 1; b < j[1]; ++b) {
    long long first = static_cast<long long>(b - 1) * block + 1;
    for (long long p = first; p < first + block; ++p)
      conj = conj * band(mu, static_cast<int>(pos_i), static_cast<int>(p)).power(2);
  }
  return core.conjugated_by(conj);
}

BraidWord tau_raw(const ExponentVector& l, const std::vector<int>& i_prefix,
                  int a, const std::vector<int>& j_prefix, int b) {
  int n = l.dim();
  int ln = l[n];
  int ra = range_rep(a, ln);
  int a0 = ra - ln;          // representative in 1-l_n .. 0
  int ma = a - a0;
  int rb = range_rep(b, ln);
  std::vector<int> ic = i_prefix, jc = j_prefix;
  ic.push_back(ra);
  jc.push_back(rb);
  BraidWord base =
      tau_generator(l, MultiIndex(ic), MultiIndex(jc), b - rb);
  if (ma == 0) return base;
  BraidWord di = block_cable(l, MultiIndex(i_prefix));
  return di.power(ma) * base * di.power(-ma);
}

BraidWord lift_primary(const ExponentVector& l, int i1, const BraidWord& b) {
  int n = l.dim();
  require(1 <= i1 && i1 <= l[1], "primary block index out of range");
  long long tail = 1;
  for (int nu = 2; nu <= n; ++nu) tail *= l[nu];
  require(b.strands() == tail, "primary lift strand mismatch");
  int mu = static_cast<int>(l.mu());
  long long off = static_cast<long long>(i1 - 1) * tail;
  BraidWord out(mu);
  for (int letter : b.letters()) {
    int m = std::abs(letter);
    out.push(letter > 0 ? static_cast<int>(off + m) : -static_cast<int>(off + m));
  }
  return out;
}

BraidWord lift_secondary(const ExponentVector& l, int in_, const BraidWord& b) {
  int n = l.dim();
  require(1 <= in_ && in_ <= l[n], "secondary block index out of range");
  long long head = 1;
  for (int nu = 1; nu < n; ++nu) head *= l[nu];
  require(b.strands() == head, "secondary lift strand mismatch");
  int mu = static_cast<int>(l.mu());
  int ln = l[n];
  BraidWord out(mu);
  for (int letter : b.letters()) {
    int m = std::abs(letter);
    BraidWord image = band(mu, (m - 1) * ln + in_, m * ln + in_);
    if (letter < 0) image = image.inverse();
    out = out * image;
  }
  return out;
}

BraidWord cable_band(int block_size, const BraidWord& b) {
  require(block_size >= 1, "block size must be positive");
  if (block_size == 1) return b;
  int m = b.strands();
  BraidWord out(m * block_size);
  for (int letter : b.letters()) {
    int p = std::abs(letter);
    int q = (p - 1) * block_size + 1;
    BraidWord image(m * block_size);
    for (int k = 0; k < block_size; ++k)
      for (int s = q + block_size - 1 + k; s >= q + k; --s) image.push(s);
    if (letter < 0) image = image.inverse();
    out = out * image;
  }
  return out;
}

BraidWord make_generator(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Band:
      require(spec.positions.size() == 2, "band needs two positions");
      return band(spec.strands, spec.positions[0], spec.positions[1]);
    case GeneratorKind::BackBand:
      require(spec.positions.size() == 2, "back band needs two positions");
      return back_band(spec.strands, spec.positions[0], spec.positions[1]);
    case GeneratorKind::SplitBand:
      require(spec.positions.size() == 3, "split band needs three positions");
      return split_band(spec.strands, spec.positions[0], spec.positions[1],
                        spec.positions[2]);
    case GeneratorKind::Subcable:
      require(spec.positions.size() == 2, "subcable needs two positions");
      return subcable(spec.strands, spec.positions[0], spec.positions[1]);
    case GeneratorKind::Fundamental:
      return fundamental(spec.strands);
    case GeneratorKind::CableTwist:
      require(spec.l.has_value(), "cable twist needs an exponent vector");
      return cable_twist(*spec.l);
    case GeneratorKind::ExtendedBand: {
      require(spec.l.has_value(), "extended band needs an exponent vector");
      require(!spec.i_index.empty() && !spec.j_index.empty(),
              "extended band needs full indices");
      std::vector<int> ip(spec.i_index.begin(), spec.i_index.end() - 1);
      std::vector<int> jp(spec.j_index.begin(), spec.j_index.end() - 1);
      return extended_band(*spec.l, ip, spec.i_index.back(), jp,
                           spec.j_index.back());
    }
    case GeneratorKind::Tau:
      require(spec.l.has_value(), "tau needs an exponent vector");
      return tau_generator(*spec.l, MultiIndex(spec.i_index),
                           MultiIndex(spec.j_index), spec.shift);
  }
  throw Error("unknown generator kind");
}

namespace {

// conj * band(p,q)^exp * conj^-1 over `strands` strands
struct TwistEntry {
  BraidWord conj;
  int p, q;
  int exp;
  std::string label;
  std::string kind;
  std::vector<std::string> indices;
};

BraidWord realize(const TwistEntry& t, int strands) {
  return band(strands, t.p, t.q).power(t.exp).conjugated_by(t.conj);
}

std::vector<TwistEntry> bp_entries(const ExponentVector& l) {
  auto idx = enumerate_indices(l);
  int mu = static_cast<int>(l.mu());
  std::vector<TwistEntry> out;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      bool corr = is_correlated_pair(idx[a], idx[b]);
      TwistEntry t{BraidWord(mu), static_cast<int>(a + 1),
                   static_cast<int>(b + 1), corr ? 3 : 2,
                   "", corr ? "cube" : "square",
                   {idx[a].str(), idx[b].str()}};
      t.label = "s(" + idx[a].str() + "," + idx[b].str() + ")^" +
                (corr ? "3" : "2");
      out.push_back(std::move(t));
    }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (std::size_t c = b + 1; c < idx.size(); ++c) {
        if (!is_correlated_triple(idx[a], idx[b], idx[c])) continue;
        TwistEntry t{band(mu, static_cast<int>(b + 1), static_cast<int>(c + 1)),
                     static_cast<int>(a + 1), static_cast<int>(b + 1), 2,
                     "", "conj-square",
                     {idx[a].str(), idx[b].str(), idx[c].str()}};
        t.label = "s(" + idx[b].str() + "," + idx[c].str() + ") s(" +
                  idx[a].str() + "," + idx[b].str() + ")^2 s(" + idx[b].str() +
                  "," + idx[c].str() + ")^-1";
        out.push_back(std::move(t));
      }
  return out;
}

std::vector<TwistEntry> an_entries(int n) {
  std::vector<TwistEntry> out;
  for (int i = 1; i < n; ++i) {
    TwistEntry t{BraidWord(n), i, i + 1, 3, "s" + std::to_string(i) + "^3",
                 "cube",
                 {std::to_string(i), std::to_string(i + 1)}};
    out.push_back(std::move(t));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      TwistEntry t{BraidWord(n), i, j, 2,
                   "s(" + std::to_string(i) + "," + std::to_string(j) + ")^2",
                   "square",
                   {std::to_string(i), std::to_string(j)}};
      out.push_back(std::move(t));
    }
  return out;
}

// the finite f_a list (level-one cubes, non-correlated squares, conjugated
// squares for level-one correlated pairs)
std::vector<TwistEntry> fn_entries(const ExponentVector& l) {
  auto idx = enumerate_indices(l);
  int mu = static_cast<int>(l.mu());
  std::vector<TwistEntry> out;
  auto rank1 = [&](const MultiIndex& m) {
    return static_cast<int>(rank_of(l, m));
  };
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const MultiIndex &i = idx[a], &k = idx[b];
      bool corr = is_correlated_pair(i, k);
      bool tail_equal = true;
      for (int nu = 2; nu <= l.dim(); ++nu)
        if (i[nu] != k[nu]) tail_equal = false;
      if (k[1] == i[1] + 1 && tail_equal) {
        TwistEntry t{BraidWord(mu), rank1(i), rank1(k), 3,
                     "s(" + i.str() + "," + k.str() + ")^3", "cube",
                     {i.str(), k.str()}};
        out.push_back(std::move(t));
      } else if (i[1] < k[1] && !corr) {
        TwistEntry t{BraidWord(mu), rank1(i), rank1(k), 2,
                     "s(" + i.str() + "," + k.str() + ")^2", "square",
                     {i.str(), k.str()}};
        out.push_back(std::move(t));
      } else if (corr && k[1] == i[1] + 1 && !tail_equal) {
        std::vector<int> j1 = i.components(), j2 = k.components();
        j1[0] = i[1] + 1;  // i_1^+ tail(i)
        j2[0] = i[1];      // i_1 tail(k)
        for (const auto& jc : {MultiIndex(j1), MultiIndex(j2)}) {
          TwistEntry t{band(mu, rank1(i), rank1(jc)).power(2), rank1(i),
                       rank1(k), 2,
                       "s(" + i.str() + "," + jc.str() + ")^2 s(" + i.str() +
                           "," + k.str() + ")^2 s(" + i.str() + "," + jc.str() +
                           ")^-2",
                       "conj-square",
                       {i.str(), jc.str(), k.str()}};
          out.push_back(std::move(t));
        }
      }
    }
  return out;
}

int e_exponent(int i, int j, int l) {
  if (j <= l) return 1;
  if (i <= l) return 2;
  return (i - j) % 2 == 0 ? 1 : 3;
}

std::vector<TwistEntry> e_entries(int l, int lp) {
  int n = l + lp;
  std::vector<TwistEntry> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int m = e_exponent(i, j, l);
      TwistEntry t{BraidWord(n), i, j, m,
                   "s(" + std::to_string(i) + "," + std::to_string(j) + ")^" +
                       std::to_string(m),
                   m == 1 ? "band" : (m == 2 ? "square" : "cube"),
                   {std::to_string(i), std::to_string(j)}};
      out.push_back(std::move(t));
    }
  return out;
}

std::vector<TwistEntry> companion_entries(const std::vector<TwistEntry>& base,
                                          int base_strands, int block) {
  std::vector<TwistEntry> out;
  int strands = base_strands * block;
  for (const auto& src : base) {
    BraidWord conj = cable_band(block, src.conj);
    auto child = [&](int basepos, int c) { return (basepos - 1) * block + c; };
    if (src.exp == 2) {
      for (int a = 1; a <= block; ++a)
        for (int b = 1; b <= block; ++b) {
          TwistEntry t{conj, child(src.p, a), child(src.q, b), 2,
                       src.label + " @comp(" + std::to_string(a) + "," +
                           std::to_string(b) + ")",
                       "companion-square", src.indices};
          out.push_back(std::move(t));
        }
    } else {
      for (int c = 1; c <= block; ++c) {
        TwistEntry t{conj, child(src.p, c), child(src.q, c), 3,
                     src.label + " @comp(" + std::to_string(c) + "," +
                         std::to_string(c) + ")",
                     "companion-cube", src.indices};
        out.push_back(std::move(t));
      }
      for (int a = 2; a <= block; ++a)
        for (int b = 1; b < a; ++b) {
          TwistEntry t{conj, child(src.p, a), child(src.q, b), 2,
                       src.label + " @comp(" + std::to_string(a) + "," +
                           std::to_string(b) + ")",
                       "companion-square", src.indices};
          out.push_back(std::move(t));
        }
    }
  }
  return out;
}

ExponentVector drop_first(const ExponentVector& l) {
  std::vector<int> tail(l.exponents().begin() + 1, l.exponents().end());
  return ExponentVector(tail);
}

}  // namespace

FamilyResult generator_family(const FamilySpec& spec) {
  FamilyResult res;
  auto emit = [&](const std::vector<TwistEntry>& entries, int strands) {
    for (const auto& t : entries)
      res.generators.push_back(
          {t.label, t.kind, t.indices, realize(t, strands)});
  };
  switch (spec.family) {
    case Family::BpMonodromy: {
      require(spec.l.has_value(), "bp_monodromy needs an exponent vector");
      emit(bp_entries(*spec.l), static_cast<int>(spec.l->mu()));
      break;
    }
    case Family::An: {
      require(spec.n >= 1, "an needs n >= 1");
      emit(an_entries(spec.n), spec.n);
      break;
    }
    case Family::Gn: {
      require(spec.l.has_value() && spec.l->dim() >= 2,
              "g_n needs an exponent vector of dimension >= 2");
      const ExponentVector& l = *spec.l;
      ExponentVector tail = drop_first(l);
      FamilySpec inner{Family::BpMonodromy, tail};
      FamilyResult sub = generator_family(inner);
      for (int i1 = 1; i1 <= l[1]; ++i1)
        for (const auto& g : sub.generators)
          res.generators.push_back({"phi_" + std::to_string(i1) + "(" +
                                        g.label + ")",
                                    g.kind, g.indices,
                                    lift_primary(l, i1, g.word)});
      break;
    }
    case Family::Fn: {
      require(spec.l.has_value() && spec.l->dim() >= 2,
              "f_n needs an exponent vector of dimension >= 2");
      emit(fn_entries(*spec.l), static_cast<int>(spec.l->mu()));
      break;
    }
    case Family::CwDelta: {
      require(spec.n >= 2, "cw_delta needs n >= 2");
      for (int i = 2; i <= spec.n; ++i) {
        BraidWord d = subcable(spec.n, 1, i).power(i + 1);
        res.generators.push_back({"delta_" + std::to_string(i) + "^" +
                                      std::to_string(i + 1),
                                  "delta-power",
                                  {std::to_string(i)},
                                  d});
      }
      break;
    }
    case Family::E: {
      require(spec.el >= 0 && spec.elp >= 0 && spec.el + spec.elp >= 2,
              "E needs l + l' >= 2");
      emit(e_entries(spec.el, spec.elp), spec.el + spec.elp);
      break;
    }
    case Family::ESpherical: {
      require(spec.el >= 1 || spec.elp >= 2, "E^s needs 6k + l >= 2");
      int n = 6 * spec.el + spec.elp;
      emit(e_entries(spec.elp, 6 * spec.el), n);
      std::ostringstream meta;
      meta << "spherical relation: (";
      for (int i = 1; i < n; ++i) meta << 's' << i << (i + 1 < n ? " " : "");
      meta << ")^" << n << " = e";
      res.metadata = meta.str();
      break;
    }
    case Family::Companions: {
      require(spec.base.has_value() && spec.block >= 1,
              "companions need a base family and block size");
      std::vector<TwistEntry> base;
      int base_strands = 0;
      if (*spec.base == Family::An) {
        require(spec.base_n >= 1, "companions of an need n");
        base = an_entries(spec.base_n);
        base_strands = spec.base_n;
      } else if (*spec.base == Family::BpMonodromy) {
        require(spec.base_l.has_value(), "companions of bp need exponents");
        base = bp_entries(*spec.base_l);
        base_strands = static_cast<int>(spec.base_l->mu());
      } else {
        throw Error("companion base must be an or bp_monodromy");
      }
      emit(companion_entries(base, base_strands, spec.block),
           base_strands * spec.block);
      break;
    }
  }
  return res;
}

std::string family_json(const FamilyResult& fam) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < fam.generators.size(); ++k) {
    const auto& g = fam.generators[k];
    if (k) os << ',';
    os << "{\"label\":\"" << g.label << "\",\"kind\":\"" << g.kind
       << "\",\"indices\":[";
    for (std::size_t i = 0; i < g.indices.size(); ++i) {
      if (i) os << ',';
      os << '"' << g.indices[i] << '"';
    }
    os << "],\"word\":\"" << g.word.str() << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace braidmono
