#include "braidmono/words.hpp"

#include <random>

#include "doctest.h"

using namespace braidmono;

namespace {

BraidWord random_braid(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord w(strands);
  for (int k = 0; k < len; ++k) w.push(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace

TEST_CASE("free reduction") {
  // t1 t2 t2^-1 t1 -> t1^2
  FreeWord w = FreeWord::reduce(2, {{1, 1}, {2, 1}, {2, -1}, {1, 1}});
  CHECK(w == FreeWord::generator(2, 1, 2));
  CHECK(FreeWord::reduce(2, {}).is_identity());
  CHECK(FreeWord::reduce(2, {{1, 1}, {1, -1}}).is_identity());
  CHECK_THROWS_AS(FreeWord::reduce(2, {{3, 1}}), IndexOutOfRange);
}

TEST_CASE("free reduce is idempotent on random input") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(1, 4), ex(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Syllable> raw;
    for (int k = 0; k < 20; ++k) {
      int e = ex(rng);
      if (e) raw.push_back({gen(rng), e});
    }
    FreeWord once = FreeWord::reduce(4, raw);
    CHECK(FreeWord::reduce(4, once.syllables()) == once);
  }
}

TEST_CASE("cyclic reduction") {
  FreeWord w = FreeWord::generator(2, 1) * FreeWord::generator(2, 2) *
               FreeWord::generator(2, 1, -1);
  CHECK(w.cyclic_reduce() == FreeWord::generator(2, 2));

  // t2^-1 t1 t2 -> t1
  FreeWord v = FreeWord::generator(2, 2, -1) * FreeWord::generator(2, 1) *
               FreeWord::generator(2, 2);
  CHECK(v.cyclic_reduce() == FreeWord::generator(2, 1));

  // already cyclically reduced commutator-like word stays put
  FreeWord c = FreeWord::reduce(2, {{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}});
  CHECK(c.cyclic_reduce() == c);
}

TEST_CASE("conjugacy keys identify conjugate words") {
  FreeWord a = FreeWord::reduce(3, {{1, 1}, {2, 1}});
  FreeWord b = FreeWord::reduce(3, {{2, 1}, {1, 1}});
  CHECK(a.conjugacy_key() == b.conjugacy_key());
  FreeWord c = FreeWord::reduce(3, {{3, 1}, {1, 1}, {2, 1}, {3, -1}});
  CHECK(c.conjugacy_key() == a.conjugacy_key());
  CHECK(a.conjugacy_key() != FreeWord::reduce(3, {{1, 1}, {2, -1}}).conjugacy_key());
}

TEST_CASE("artin action of a single generator") {
  BraidWord s1(2, {1});
  FreeEndo f = artin_action(s1);
  CHECK(f.image(1) == FreeWord::reduce(2, {{1, 1}, {2, 1}, {1, -1}}));
  CHECK(f.image(2) == FreeWord::generator(2, 1));

  FreeEndo inv = artin_action(s1.inverse());
  CHECK(inv.image(1) == FreeWord::generator(2, 2));
  CHECK(inv.image(2) == FreeWord::reduce(2, {{2, -1}, {1, 1}, {2, 1}}));
  CHECK(f.compose(inv).is_identity());
  CHECK(inv.compose(f).is_identity());

  CHECK(artin_action(BraidWord(3)).is_identity());
}

TEST_CASE("apply endo") {
  BraidWord s1(2, {1});
  FreeEndo f = artin_action(s1);
  CHECK(f.apply(FreeWord::generator(2, 2)) == FreeWord::generator(2, 1));
  FreeEndo id(2);
  FreeWord w = FreeWord::reduce(2, {{1, 2}, {2, -1}});
  CHECK(id.apply(w) == w);
  CHECK_THROWS_AS(f.apply(FreeWord::generator(3, 1)), RankMismatch);
}

TEST_CASE("compose endos matches homomorphism property") {
  BraidWord a(3, {1});
  BraidWord b(3, {2});
  CHECK(artin_action(a * b) ==
        artin_action(a).compose(artin_action(b)));
  CHECK(artin_action(a).compose(artin_action(a.inverse())).is_identity());
}

TEST_CASE("braid relations via braids_equal") {
  BraidWord lhs(3, {1, 2, 1});
  BraidWord rhs(3, {2, 1, 2});
  CHECK(braids_equal(lhs, rhs));
  CHECK(braids_equal(BraidWord(3, {1}), BraidWord(3, {1})));
  CHECK(!braids_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  CHECK_THROWS_AS(braids_equal(BraidWord(3), BraidWord(4)), StrandMismatch);

  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i)
      CHECK(braids_equal(BraidWord(n, {i, i + 1, i}),
                         BraidWord(n, {i + 1, i, i + 1})));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        CHECK(braids_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
  }
}

TEST_CASE("homomorphism property on random words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int strands = 2 + trial % 5;  // up to 6
    BraidWord a = random_braid(rng, strands, 12);
    BraidWord b = random_braid(rng, strands, 12);
    CHECK(artin_action(a * b) == artin_action(a).compose(artin_action(b)));
  }
}

TEST_CASE("braids_equal respects permutation and exponent sum") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord a = random_braid(rng, 4, 10);
    BraidWord b = random_braid(rng, 4, 10);
    if (braids_equal(a, b)) {
      CHECK(permutation_of(a) == permutation_of(b));
      CHECK(exponent_sum(a) == exponent_sum(b));
    }
    // b * b^-1 is always trivial
    CHECK(braids_equal(a * a.inverse(), BraidWord(4)));
  }
}

TEST_CASE("permutation of braids") {
  CHECK(permutation_of(BraidWord(3, {1})) == Permutation::transposition(3, 1, 2));
  CHECK(permutation_of(BraidWord(3, {2, 1, -2})) ==
        Permutation::transposition(3, 1, 3));
  Permutation threecycle = permutation_of(BraidWord(3, {1, 2}));
  CHECK(threecycle.cycle_type() == std::vector<int>{3});
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(BraidWord(3, {1, 2, 1})) == 3);
  CHECK(exponent_sum(BraidWord(2, {1, -1})) == 0);
  BraidWord full = BraidWord(3, {1, 2}).power(3);
  CHECK(exponent_sum(full) == 6);
}

TEST_CASE("text round trips") {
  FreeWord w = FreeWord::reduce(3, {{3, -2}, {1, 1}});
  CHECK(w.str() == "t3^-2 t1^1");
  CHECK(FreeWord::parse(3, w.str()) == w);
  CHECK(FreeWord(3).str() == "1");
  CHECK(FreeWord::parse(3, "1").is_identity());

  BraidWord b(3, {2, 1, -2});
  CHECK(b.str() == "s2 s1 S2");
  CHECK(BraidWord::parse(3, b.str()).letters() == b.letters());
  CHECK(BraidWord(3).str() == "e");
  CHECK(BraidWord::parse(3, "e").is_identity_word());
}

TEST_CASE("word length overflow is loud") {
  std::size_t saved = WordBudget::max_syllables();
  WordBudget::set_max_syllables(40);
  // (sigma_1 sigma_2)^k images blow up in Br_3
  BraidWord b = BraidWord(3, {1, 2}).power(40);
  CHECK_THROWS_AS(artin_images(b), WordLengthOverflow);
  WordBudget::set_max_syllables(saved);
}
