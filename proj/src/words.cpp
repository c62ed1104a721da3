#include "braidmono/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidmono {

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw IndexOutOfRange("free word rank must be positive");
}

FreeWord FreeWord::generator(int rank, int gen, long long exp) {
  FreeWord w(rank);
  if (gen < 1 || gen > rank)
    throw IndexOutOfRange("generator index " + std::to_string(gen) +
                          " out of range 1.." + std::to_string(rank));
  if (exp != 0) w.syl_.push_back({gen, exp});
  return w;
}

FreeWord FreeWord::reduce(int rank, const std::vector<Syllable>& raw) {
  FreeWord w(rank);
  for (const auto& s : raw) w.append(s.gen, s.exp);
  return w;
}

long long FreeWord::letter_length() const {
  long long n = 0;
  for (const auto& s : syl_) n += std::llabs(s.exp);
  return n;
}

void FreeWord::check_budget() const {
  if (syl_.size() > WordBudget::max_syllables())
    throw WordLengthOverflow("free word exceeds " +
                             std::to_string(WordBudget::max_syllables()) +
                             " syllables");
}

void FreeWord::append(int gen, long long exp) {
  if (exp == 0) return;
  if (gen < 1 || gen > rank_)
    throw IndexOutOfRange("generator index " + std::to_string(gen) +
                          " out of range 1.." + std::to_string(rank_));
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
  } else {
    syl_.push_back({gen, exp});
    check_budget();
  }
}

void FreeWord::append_word(const FreeWord& w) {
  if (w.rank_ != rank_) throw RankMismatch("free word ranks differ");
  for (const auto& s : w.syl_) append(s.gen, s.exp);
}

void FreeWord::append_word_inverse(const FreeWord& w) {
  if (w.rank_ != rank_) throw RankMismatch("free word ranks differ");
  for (auto it = w.syl_.rbegin(); it != w.syl_.rend(); ++it)
    append(it->gen, -it->exp);
}

void FreeWord::append_word_power(const FreeWord& w, long long e) {
  if (e >= 0) {
    for (long long k = 0; k < e; ++k) append_word(w);
  } else {
    for (long long k = 0; k < -e; ++k) append_word_inverse(w);
  }
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w = *this;
  w.append_word(rhs);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  w.append_word_inverse(*this);
  return w;
}

FreeWord FreeWord::cyclic_reduce() const {
  FreeWord w = *this;
  while (w.syl_.size() >= 2 && w.syl_.front().gen == w.syl_.back().gen) {
    Syllable a = w.syl_.front();
    Syllable b = w.syl_.back();
    // strip the shorter side of the conjugating pair t^x ... t^-x
    long long cancel = 0;
    if ((a.exp > 0) != (b.exp > 0))
      cancel = std::min(std::llabs(a.exp), std::llabs(b.exp));
    if (cancel == 0) break;
    long long sign = a.exp > 0 ? 1 : -1;
    a.exp -= sign * cancel;
    b.exp += sign * cancel;
    std::vector<Syllable> inner(w.syl_.begin() + 1, w.syl_.end() - 1);
    w.syl_.clear();
    if (a.exp != 0) w.syl_.push_back(a);
    for (const auto& s : inner) {
      if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
        w.syl_.back().exp += s.exp;
        if (w.syl_.back().exp == 0) w.syl_.pop_back();
      } else {
        w.syl_.push_back(s);
      }
    }
    if (b.exp != 0) {
      if (!w.syl_.empty() && w.syl_.back().gen == b.gen) {
        w.syl_.back().exp += b.exp;
        if (w.syl_.back().exp == 0) w.syl_.pop_back();
      } else {
        w.syl_.push_back(b);
      }
    }
  }
  return w;
}

namespace {

// letters as +gen / -gen
std::vector<int> flatten(const std::vector<Syllable>& syl) {
  std::vector<int> out;
  for (const auto& s : syl) {
    int letter = s.exp > 0 ? s.gen : -s.gen;
    for (long long k = 0; k < std::llabs(s.exp); ++k) out.push_back(letter);
  }
  return out;
}

// Booth's least-rotation algorithm.
std::size_t least_rotation(const std::vector<int>& v) {
  if (v.empty()) return 0;
  std::vector<int> s(v);
  s.insert(s.end(), v.begin(), v.end());
  std::vector<std::ptrdiff_t> f(s.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    int sj = s[j];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

std::vector<int> FreeWord::conjugacy_key() const {
  std::vector<int> letters = flatten(cyclic_reduce().syl_);
  if (letters.empty()) return letters;
  std::size_t r = least_rotation(letters);
  std::rotate(letters.begin(), letters.begin() + r, letters.end());
  return letters;
}

std::string FreeWord::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << ' ';
    os << 't' << s.gen << '^' << s.exp;
    first = false;
  }
  return os.str();
}

FreeWord FreeWord::parse(int rank, const std::string& text) {
  FreeWord w(rank);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 't')
      throw ParseError("bad free word token '" + tok + "'");
    auto caret = tok.find('^');
    long long exp = 1;
    std::string gen_part;
    if (caret == std::string::npos) {
      gen_part = tok.substr(1);
    } else {
      gen_part = tok.substr(1, caret - 1);
      exp = std::stoll(tok.substr(caret + 1));
    }
    int gen = std::stoi(gen_part);
    w.append(gen, exp);
  }
  return w;
}

FreeEndo::FreeEndo(int rank) : rank_(rank) {
  images_.reserve(rank);
  for (int i = 1; i <= rank; ++i) images_.push_back(FreeWord::generator(rank, i));
}

FreeEndo::FreeEndo(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank)
    throw RankMismatch("endomorphism needs one image per generator");
  for (const auto& w : images_)
    if (w.rank() != rank) throw RankMismatch("image rank differs");
}

const FreeWord& FreeEndo::image(int gen) const {
  if (gen < 1 || gen > rank_) throw IndexOutOfRange("no such generator");
  return images_[gen - 1];
}

FreeWord FreeEndo::apply(const FreeWord& w) const {
  if (w.rank() != rank_) throw RankMismatch("rank mismatch in apply");
  FreeWord out(rank_);
  for (const auto& s : w.syllables())
    out.append_word_power(images_[s.gen - 1], s.exp);
  return out;
}

FreeEndo FreeEndo::compose(const FreeEndo& g) const {
  if (g.rank_ != rank_) throw RankMismatch("rank mismatch in compose");
  std::vector<FreeWord> images;
  images.reserve(rank_);
  for (int i = 1; i <= rank_; ++i) images.push_back(apply(g.images_[i - 1]));
  return FreeEndo(rank_, std::move(images));
}

bool FreeEndo::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    const auto& w = images_[i - 1];
    if (w.syllables().size() != 1) return false;
    if (w.syllables()[0].gen != i || w.syllables()[0].exp != 1) return false;
  }
  return true;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw IndexOutOfRange("strand count must be >= 1");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw IndexOutOfRange("strand count must be >= 1");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw IndexOutOfRange("Artin letter " + std::to_string(l) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
}

void BraidWord::push(int letter) {
  if (letter == 0 || std::abs(letter) > strands_ - 1)
    throw IndexOutOfRange("Artin letter out of range");
  letters_.push_back(letter);
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) throw StrandMismatch("strand counts differ");
  BraidWord w = *this;
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return w;
}

BraidWord BraidWord::inverse() const {
  BraidWord w(strands_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

BraidWord BraidWord::power(long long e) const {
  BraidWord base = e >= 0 ? *this : inverse();
  BraidWord w(strands_);
  for (long long k = 0; k < std::llabs(e); ++k) w = w * base;
  return w;
}

BraidWord BraidWord::conjugated_by(const BraidWord& c) const {
  return c * *this * c.inverse();
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (int l : letters_) {
    if (!first) os << ' ';
    os << (l > 0 ? 's' : 'S') << std::abs(l);
    first = false;
  }
  return os.str();
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  BraidWord w(strands);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw ParseError("bad braid token '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    w.push(tok[0] == 's' ? idx : -idx);
  }
  return w;
}

Permutation::Permutation(int degree) {
  if (degree < 1) throw IndexOutOfRange("permutation degree must be >= 1");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw IndexOutOfRange("not a bijection on 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree)
    throw IndexOutOfRange("transposition out of range");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw RankMismatch("permutation degrees differ");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= degree(); ++i) img[i - 1] = img_[rhs.img_[i - 1] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= degree(); ++i) img[img_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> type;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = true;
      j = img_[j - 1];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::str() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || img_[i - 1] == i) {
      seen[i - 1] = true;
      continue;
    }
    os << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << j;
      seen[j - 1] = true;
      j = img_[j - 1];
      first = false;
    } while (j != i);
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

namespace {

// Apply the substitution of a single Artin letter to w.
FreeWord apply_letter(int letter, const FreeWord& w) {
  int i = std::abs(letter);
  FreeWord out(w.rank());
  if (letter > 0) {
    // t_i -> t_i t_{i+1} t_i^-1,  t_{i+1} -> t_i
    for (const auto& s : w.syllables()) {
      if (s.gen == i) {
        out.append(i, 1);
        out.append(i + 1, s.exp);
        out.append(i, -1);
      } else if (s.gen == i + 1) {
        out.append(i, s.exp);
      } else {
        out.append(s.gen, s.exp);
      }
    }
  } else {
    // inverse: t_i -> t_{i+1},  t_{i+1} -> t_{i+1}^-1 t_i t_{i+1}
    for (const auto& s : w.syllables()) {
      if (s.gen == i) {
        out.append(i + 1, s.exp);
      } else if (s.gen == i + 1) {
        out.append(i + 1, -1);
        out.append(i, s.exp);
        out.append(i + 1, 1);
      } else {
        out.append(s.gen, s.exp);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FreeWord> artin_images(const BraidWord& b) {
  int n = b.strands();
  std::vector<FreeWord> imgs;
  imgs.reserve(n);
  for (int i = 1; i <= n; ++i) imgs.push_back(FreeWord::generator(n, i));
  // alpha(g_1...g_k)(t) = alpha(g_1)(...alpha(g_k)(t)); the rightmost letter
  // is substituted first.
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    for (auto& w : imgs) w = apply_letter(*it, w);
  return imgs;
}

FreeEndo artin_action(const BraidWord& b) {
  return FreeEndo(b.strands(), artin_images(b));
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch("strand counts differ");
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (!(permutation_of(a) == permutation_of(b))) return false;
  return artin_images(a) == artin_images(b);
}

Permutation permutation_of(const BraidWord& b) {
  Permutation p(b.strands());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    int i = std::abs(*it);
    p = Permutation::transposition(b.strands(), i, i + 1) * p;
  }
  return p;
}

long long exponent_sum(const BraidWord& b) {
  long long s = 0;
  for (int l : b.letters()) s += l > 0 ? 1 : -1;
  return s;
}

}  // namespace braidmono
