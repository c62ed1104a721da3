#include "braidmono/multiindex.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"

using namespace braidmono;

TEST_CASE("enumeration is lexicographic") {
  ExponentVector l22({2, 2});
  auto idx = enumerate_indices(l22);
  REQUIRE(idx.size() == 4);
  CHECK(idx[0] == MultiIndex({1, 1}));
  CHECK(idx[1] == MultiIndex({1, 2}));
  CHECK(idx[2] == MultiIndex({2, 1}));
  CHECK(idx[3] == MultiIndex({2, 2}));

  auto idx23 = enumerate_indices(ExponentVector({2, 3}));
  REQUIRE(idx23.size() == 6);
  CHECK(idx23[0] == MultiIndex({1, 1}));
  CHECK(idx23[1] == MultiIndex({1, 2}));
  CHECK(idx23[2] == MultiIndex({1, 3}));
  CHECK(idx23[3] == MultiIndex({2, 1}));

  auto idx3 = enumerate_indices(ExponentVector({3}));
  REQUIRE(idx3.size() == 3);
  CHECK(idx3[0] == MultiIndex({1}));
  CHECK(idx3[2] == MultiIndex({3}));
}

TEST_CASE("rank, unrank and successors agree with list position") {
  for (auto lv : {std::vector<int>{2, 3}, std::vector<int>{3, 2, 2}}) {
    ExponentVector l(lv);
    auto idx = enumerate_indices(l);
    CHECK(static_cast<long long>(idx.size()) == l.mu());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      CHECK(rank_of(l, idx[k]) == static_cast<long long>(k + 1));
      CHECK(unrank(l, k + 1) == idx[k]);
      if (k + 1 < idx.size()) CHECK(successor(l, idx[k]) == idx[k + 1]);
    }
  }
}

TEST_CASE("component successor is distinct from lexicographic successor") {
  MultiIndex i({1, 2});
  CHECK(component_successor(i, 1) == MultiIndex({2, 2}));
  CHECK(component_successor(i, 2) == MultiIndex({1, 3}));  // may leave range
  ExponentVector l({2, 2});
  CHECK(successor(l, i) == MultiIndex({2, 1}));
}

TEST_CASE("correlation predicate") {
  CHECK(is_correlated_pair(MultiIndex({1, 1}), MultiIndex({2, 2})));
  CHECK(!is_correlated_pair(MultiIndex({1, 2}), MultiIndex({2, 1})));
  CHECK(is_correlated_triple(MultiIndex({1, 1}), MultiIndex({1, 2}),
                             MultiIndex({2, 2})));
  CHECK(!is_correlated_pair(MultiIndex({1, 1}), MultiIndex({1, 1})));
  // a correlated quadruple needs three dimensions
  CHECK(is_correlated_quadruple(MultiIndex({1, 1, 1}), MultiIndex({1, 1, 2}),
                                MultiIndex({1, 2, 2}), MultiIndex({2, 2, 2})));
  CHECK(!is_correlated_quadruple(MultiIndex({1, 1, 1}), MultiIndex({1, 1, 2}),
                                 MultiIndex({1, 2, 1}), MultiIndex({2, 2, 2})));
}

TEST_CASE("correlated pairs have level 0 or 1") {
  ExponentVector l({3, 2, 2});
  auto idx = enumerate_indices(l);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (is_correlated_pair(idx[a], idx[b])) {
        int lev = level_of(idx[a], idx[b]);
        CHECK(lev >= 0);
        CHECK(lev <= 1);
      }
}

TEST_CASE("level examples") {
  CHECK(level_of(MultiIndex({1, 1}), MultiIndex({2, 1})) == 1);
  CHECK(level_of(MultiIndex({1, 2}), MultiIndex({1, 2})) == 0);
  CHECK(level_of(MultiIndex({1, 1}), MultiIndex({3, 1})) == 2);
}

TEST_CASE("modulus formula") {
  CHECK(modulus_of(1, 1, 2, 2, 2, 2, 1.0) == doctest::Approx(1.0));
  CHECK(modulus_of(1, 2, 2, 2, 2, 2, 1.0) == 0.0);
  CHECK(modulus_of(1, 1, 2, 2, 2, 4, 1.0) ==
        doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK_THROWS_AS(modulus_of(1, 1, 1, 2, 2, 2, 1.0), UndefinedModulus);
}

TEST_CASE("dynkin diagram of (2,2)") {
  DynkinDiagram d = build_dynkin(ExponentVector({2, 2}));
  CHECK(d.vertices.size() == 4);
  REQUIRE(d.edges.size() == 5);
  // step edges +1, the diagonal (11,22) has weight -1
  CHECK(d.weight_of(1, 2) == 1);
  CHECK(d.weight_of(1, 3) == 1);
  CHECK(d.weight_of(2, 4) == 1);
  CHECK(d.weight_of(3, 4) == 1);
  CHECK(d.weight_of(1, 4) == -1);
  CHECK(d.weight_of(2, 3) == 0);
}

TEST_CASE("dynkin diagram of (2,4) matches the x^3 + x^5 picture") {
  DynkinDiagram d = build_dynkin(ExponentVector({2, 4}));
  CHECK(d.vertices.size() == 8);
  CHECK(d.edges.size() == 13);
  int horizontal = 0, vertical = 0, diagonal = 0;
  for (const auto& e : d.edges) {
    const auto &a = d.vertices[e.a - 1], &b = d.vertices[e.b - 1];
    if (a[1] == b[1])
      ++horizontal;
    else if (a[2] == b[2])
      ++vertical;
    else
      ++diagonal;
  }
  CHECK(horizontal == 6);
  CHECK(vertical == 4);
  CHECK(diagonal == 3);
}

TEST_CASE("trivial diagram") {
  DynkinDiagram d = build_dynkin(ExponentVector({1}));
  CHECK(d.vertices.size() == 1);
  CHECK(d.edges.empty());
}

TEST_CASE("every edge triangle has weight product -1") {
  for (auto lv : {std::vector<int>{2, 2}, std::vector<int>{2, 4},
                  std::vector<int>{3, 3}, std::vector<int>{2, 2, 2}}) {
    DynkinDiagram d = build_dynkin(ExponentVector(lv));
    for (const auto& tri : d.triangles()) {
      int w = d.weight_of(tri[0], tri[1]) * d.weight_of(tri[0], tri[2]) *
              d.weight_of(tri[1], tri[2]);
      CHECK(w == -1);
    }
  }
}

TEST_CASE("diagram construction is deterministic") {
  ExponentVector l({2, 3});
  DynkinDiagram a = build_dynkin(l);
  DynkinDiagram b = build_dynkin(l);
  CHECK(a.edges == b.edges);
  CHECK(a.dot() == b.dot());
  CHECK(a.json() == b.json());
}

TEST_CASE("parsing and printing") {
  ExponentVector l = ExponentVector::parse("2,3,2");
  CHECK(l.dim() == 3);
  CHECK(l.mu() == 12);
  CHECK(l.str() == "2,3,2");
  CHECK(MultiIndex({1, 2}).str() == "12");
  CHECK(MultiIndex({11, 2}).str() == "[11,2]");
  CHECK_THROWS_AS(ExponentVector::parse("2,,3"), ParseError);
  CHECK_THROWS_AS(ExponentVector(std::vector<int>{0}), IndexOutOfRange);
}
