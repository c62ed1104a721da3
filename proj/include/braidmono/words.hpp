#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidmono/common.hpp"

namespace braidmono {

// One run of a free-group word: generator index (1-based) with nonzero
// exponent.
struct Syllable {
  int gen;
  long long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in F_rank = <t_1,...,t_rank | >.
class FreeWord {
public:
  explicit FreeWord(int rank);
  static FreeWord generator(int rank, int gen, long long exp = 1);
  static FreeWord reduce(int rank, const std::vector<Syllable>& raw);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  // number of single letters, sum of |exp|
  long long letter_length() const;

  void append(int gen, long long exp);           // free reduction on the fly
  void append_word(const FreeWord& w);           // same rank required
  void append_word_inverse(const FreeWord& w);
  void append_word_power(const FreeWord& w, long long e);

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  FreeWord cyclic_reduce() const;
  // Canonical representative of the conjugacy class: cyclic reduction
  // followed by the least rotation of the letter sequence.
  std::vector<int> conjugacy_key() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string str() const;                         // "t3^-2 t1^1", identity "1"
  static FreeWord parse(int rank, const std::string& text);

private:
  int rank_;
  std::vector<Syllable> syl_;
  void check_budget() const;
};

// Endomorphism of F_rank given by the images of the generators.
class FreeEndo {
public:
  explicit FreeEndo(int rank);  // identity
  FreeEndo(int rank, std::vector<FreeWord> images);

  int rank() const { return rank_; }
  const FreeWord& image(int gen) const;
  const std::vector<FreeWord>& images() const { return images_; }

  FreeWord apply(const FreeWord& w) const;
  // (f * g)(t) = f(g(t))
  FreeEndo compose(const FreeEndo& g) const;
  bool is_identity() const;
  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

private:
  int rank_;
  std::vector<FreeWord> images_;
};

// Word in Br_strands as a sequence of Artin letters; +i encodes sigma_i,
// -i its inverse.  The empty word is the identity braid.
class BraidWord {
public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity_word() const { return letters_.empty(); }

  void push(int letter);
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord power(long long e) const;
  BraidWord conjugated_by(const BraidWord& c) const;  // c * this * c^-1

  std::string str() const;  // "s2 s1 S2", identity "e"
  static BraidWord parse(int strands, const std::string& text);

private:
  int strands_;
  std::vector<int> letters_;
};

class Permutation {
public:
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  Permutation operator*(const Permutation& rhs) const;  // (p*q)(i) = p(q(i))
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<int> cycle_type() const;  // descending cycle lengths
  std::string str() const;              // cycle notation, "id" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<int> img_;  // img_[i-1] = image of i
};

// The Artin action.  sigma_i maps t_i -> t_i t_{i+1} t_i^-1,
// t_{i+1} -> t_i and fixes the other generators.
FreeEndo artin_action(const BraidWord& b);

// Word problem via faithfulness of the Artin representation.
bool braids_equal(const BraidWord& a, const BraidWord& b);

Permutation permutation_of(const BraidWord& b);
long long exponent_sum(const BraidWord& b);

// Image tuple (artin_action(b)(t_1), ..., artin_action(b)(t_n)); shared by
// braids_equal and the relator machinery.
std::vector<FreeWord> artin_images(const BraidWord& b);

}  // namespace braidmono
