#include "braidmono/hurwitz.hpp"

#include <deque>
#include <sstream>

namespace braidmono {

SL2Matrix::SL2Matrix(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw Error("matrix is not in SL_2(Z): det != 1");
}

SL2Matrix SL2Matrix::identity() { return SL2Matrix(1, 0, 0, 1); }
SL2Matrix SL2Matrix::minus_identity() { return SL2Matrix(-1, 0, 0, -1); }

SL2Matrix SL2Matrix::operator*(const SL2Matrix& rhs) const {
  return SL2Matrix(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                   c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

SL2Matrix SL2Matrix::inverse() const {
  return SL2Matrix(d_, -b_, -c_, a_);
}

std::string SL2Matrix::str() const {
  std::ostringstream os;
  os << "[[" << a_ << ',' << b_ << "],[" << c_ << ',' << d_ << "]]";
  return os.str();
}

GTuple GTuple::sl2(std::vector<SL2Matrix> entries) {
  GTuple t;
  t.target_ = Target::SL2;
  t.sl2_ = std::move(entries);
  return t;
}

GTuple GTuple::braid(int strands, std::vector<BraidWord> entries) {
  GTuple t;
  t.target_ = Target::Braid;
  t.strands_ = strands;
  for (const auto& w : entries)
    if (w.strands() != strands)
      throw StrandMismatch("braid tuple entries have mixed strand counts");
  t.braid_ = std::move(entries);
  return t;
}

GTuple GTuple::perm(int degree, std::vector<Permutation> entries) {
  GTuple t;
  t.target_ = Target::Perm;
  t.degree_ = degree;
  for (const auto& p : entries)
    if (p.degree() != degree)
      throw RankMismatch("permutation tuple entries have mixed degrees");
  t.perm_ = std::move(entries);
  return t;
}

int GTuple::size() const {
  switch (target_) {
    case Target::SL2: return static_cast<int>(sl2_.size());
    case Target::Braid: return static_cast<int>(braid_.size());
    case Target::Perm: return static_cast<int>(perm_.size());
  }
  return 0;
}

bool GTuple::same_tuple(const GTuple& other) const {
  if (target_ != other.target_ || size() != other.size()) return false;
  switch (target_) {
    case Target::SL2: return sl2_ == other.sl2_;
    case Target::Perm: return perm_ == other.perm_;
    case Target::Braid:
      for (std::size_t k = 0; k < braid_.size(); ++k)
        if (!braids_equal(braid_[k], other.braid_[k])) return false;
      return true;
  }
  return false;
}

SL2Matrix GTuple::sl2_product() const {
  SL2Matrix p = SL2Matrix::identity();
  for (const auto& m : sl2_) p = p * m;
  return p;
}

BraidWord GTuple::braid_product() const {
  BraidWord p(strands_);
  for (const auto& w : braid_) p = p * w;
  return p;
}

Permutation GTuple::perm_product() const {
  Permutation p(degree_);
  for (const auto& q : perm_) p = p * q;
  return p;
}

std::string GTuple::serialize() const {
  std::ostringstream os;
  switch (target_) {
    case Target::SL2:
      os << "sl2:";
      for (const auto& m : sl2_) os << m.str() << ';';
      break;
    case Target::Perm:
      os << "perm:";
      for (const auto& p : perm_) {
        for (int i = 1; i <= p.degree(); ++i) os << p(i) << ',';
        os << ';';
      }
      break;
    case Target::Braid: {
      os << "braid:";
      for (const auto& w : braid_) {
        for (const auto& img : artin_images(w)) os << img.str() << ',';
        os << ';';
      }
      break;
    }
  }
  return os.str();
}

std::string GTuple::json() const {
  std::ostringstream os;
  os << "{\"target\":\"";
  switch (target_) {
    case Target::SL2: os << "sl2"; break;
    case Target::Braid: os << "braid(" << strands_ << ")"; break;
    case Target::Perm: os << "permutation(" << degree_ << ")"; break;
  }
  os << "\",\"entries\":[";
  int k = 0;
  switch (target_) {
    case Target::SL2:
      for (const auto& m : sl2_) os << (k++ ? "," : "") << m.str();
      break;
    case Target::Braid:
      for (const auto& w : braid_) os << (k++ ? "," : "") << '"' << w.str() << '"';
      break;
    case Target::Perm:
      for (const auto& p : perm_) os << (k++ ? "," : "") << '"' << p.str() << '"';
      break;
  }
  os << "]}";
  return os.str();
}

namespace {

template <class El, class Mul, class Inv>
void hurwitz_letter(std::vector<El>& xs, int letter, Mul mul, Inv inv) {
  int i = std::abs(letter) - 1;  // 0-based slot
  if (letter > 0) {
    El xi = xs[i];
    xs[i] = mul(mul(xi, xs[i + 1]), inv(xi));
    xs[i + 1] = xi;
  } else {
    El xi1 = xs[i + 1];
    El moved = mul(mul(inv(xi1), xs[i]), xi1);
    xs[i] = xi1;
    xs[i + 1] = moved;
  }
}

}  // namespace

GTuple hurwitz_act(const BraidWord& b, const GTuple& t) {
  if (b.strands() != t.size())
    throw StrandMismatch("braid strand count must equal tuple length");
  GTuple out = t;
  const auto& letters = b.letters();
  // left action: the rightmost letter acts first
  switch (t.target()) {
    case Target::SL2: {
      auto xs = t.sl2_entries();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        hurwitz_letter(
            xs, *it, [](const SL2Matrix& x, const SL2Matrix& y) { return x * y; },
            [](const SL2Matrix& x) { return x.inverse(); });
      return GTuple::sl2(std::move(xs));
    }
    case Target::Perm: {
      auto xs = t.perm_entries();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        hurwitz_letter(
            xs, *it,
            [](const Permutation& x, const Permutation& y) { return x * y; },
            [](const Permutation& x) { return x.inverse(); });
      return GTuple::perm(t.perm_degree(), std::move(xs));
    }
    case Target::Braid: {
      auto xs = t.braid_entries();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        hurwitz_letter(
            xs, *it,
            [](const BraidWord& x, const BraidWord& y) { return x * y; },
            [](const BraidWord& x) { return x.inverse(); });
      return GTuple::braid(t.braid_strands(), std::move(xs));
    }
  }
  return out;
}

GTuple base_tuple_phi(int n) {
  if (n < 1) throw IndexOutOfRange("phi_n needs n >= 1");
  std::vector<BraidWord> entries;
  for (int i = 1; i <= n; ++i)
    entries.push_back(BraidWord(3, {i % 2 == 1 ? 1 : 2}));
  return GTuple::braid(3, std::move(entries));
}

GTuple base_tuple_psi(int l, int lp) {
  if (l < 0 || lp < 0 || l + lp < 1)
    throw IndexOutOfRange("psi needs l, l' >= 0 and l + l' >= 1");
  std::vector<SL2Matrix> entries;
  SL2Matrix u(1, 1, 0, 1);    // i > l, i !== l (mod 2)
  SL2Matrix v(1, 0, -1, 1);   // i > l, i  == l (mod 2)
  for (int i = 1; i <= l + lp; ++i) {
    if (i <= l)
      entries.push_back(SL2Matrix::minus_identity());
    else
      entries.push_back((i - l) % 2 == 1 ? u : v);
  }
  return GTuple::sl2(std::move(entries));
}

GTuple base_tuple_perm_h(int n) {
  if (n < 1) throw IndexOutOfRange("perm_h needs n >= 1");
  std::vector<Permutation> entries;
  for (int i = 1; i <= n; ++i)
    entries.push_back(Permutation::transposition(n + 1, i, i + 1));
  return GTuple::perm(n + 1, std::move(entries));
}

bool stabilizes(const BraidWord& b, const GTuple& t) {
  return hurwitz_act(b, t).same_tuple(t);
}

OrbitResult orbit_enumerate(const GTuple& t, const std::vector<BraidWord>& gens,
                            std::size_t cap) {
  OrbitResult res;
  std::set<std::string> seen;
  std::deque<GTuple> queue;
  seen.insert(t.serialize());
  queue.push_back(t);
  std::vector<BraidWord> moves;
  for (const auto& g : gens) {
    moves.push_back(g);
    moves.push_back(g.inverse());
  }
  while (!queue.empty()) {
    GTuple cur = queue.front();
    queue.pop_front();
    res.orbit.push_back(cur);
    for (const auto& g : moves) {
      GTuple next = hurwitz_act(g, cur);
      std::string key = next.serialize();
      if (seen.insert(key).second) {
        if (seen.size() > cap) {
          res.exceeded = true;
          res.visited = seen.size();
          res.orbit.clear();
          return res;
        }
        queue.push_back(next);
      }
    }
  }
  res.visited = seen.size();
  return res;
}

}  // namespace braidmono
