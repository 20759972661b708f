#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "siegelkr/weyl_finite.hpp"

using namespace skr;

namespace {

// Independent length oracle: breadth-first word search over all of W.
std::map<SignedPerm, int> bfs_length_table(int g) {
  std::map<SignedPerm, int> dist;
  std::vector<SignedPerm> frontier{SignedPerm(g)};
  dist[SignedPerm(g)] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<SignedPerm> next;
    for (const SignedPerm& x : frontier)
      for (int i = 1; i <= g; ++i) {
        SignedPerm y = simple_reflection(i, g) * x;
        if (dist.emplace(y, depth).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("simple reflections and composition") {
  CHECK(simple_reflection(1, 2).one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(simple_reflection(2, 2).one_line() == std::vector<int>{1, 3, 2, 4});
  CHECK(simple_reflection(2, 3).one_line() ==
        std::vector<int>{1, 3, 2, 5, 4, 6});
  CHECK_THROWS_AS(simple_reflection(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(simple_reflection(3, 2), std::invalid_argument);

  // s_1 s_1 = identity
  SignedPerm s1 = simple_reflection(1, 2);
  CHECK((s1 * s1).is_identity());

  // Rightmost factor acts first: these reproduce the p-rank labels of the
  // g = 2 table.
  SignedPerm s2 = simple_reflection(2, 2);
  CHECK((s1 * s2).one_line() == std::vector<int>{2, 4, 1, 3});
  CHECK((s2 * s1 * s2).one_line() == std::vector<int>{3, 4, 1, 2});
  CHECK(s2 * s1 * s2 == longest_final(2));

  CHECK_THROWS_AS(s1 * simple_reflection(1, 3), std::invalid_argument);
}

TEST_CASE("one-line validation") {
  CHECK_THROWS_AS(SignedPerm(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm(2, {1, 1, 4, 4}), std::invalid_argument);
  // Bijection but violates the centralizing condition.
  CHECK_THROWS_AS(SignedPerm(2, {2, 1, 3, 4}), std::invalid_argument);
  CHECK_NOTHROW(SignedPerm(2, {3, 4, 1, 2}));
}

TEST_CASE("finite length matches word-search oracle") {
  for (int g = 1; g <= 4; ++g) {
    auto table = bfs_length_table(g);
    CHECK(table.size() == (1u << g) * [g] {
      unsigned f = 1;
      for (int k = 2; k <= g; ++k) f *= static_cast<unsigned>(k);
      return f;
    }());
    for (const auto& [w, len] : table) CHECK(finite_length(w) == len);
  }
}

TEST_CASE("length values") {
  CHECK(finite_length(SignedPerm(2)) == 0);
  CHECK(finite_length(longest_final(2)) == 3);   // g(g+1)/2
  CHECK(finite_length(longest_element(2)) == 4); // g^2
  for (int g = 1; g <= 5; ++g) {
    CHECK(finite_length(longest_final(g)) == g * (g + 1) / 2);
    CHECK(finite_length(longest_element(g)) == g * g);
  }
}

TEST_CASE("reduced words multiply back") {
  for (int g = 2; g <= 3; ++g)
    for (const SignedPerm& w : enumerate_weyl(g)) {
      std::vector<int> word = finite_reduced_word(w);
      CHECK(static_cast<int>(word.size()) == finite_length(w));
      SignedPerm acc(g);
      for (int i : word) acc = acc * simple_reflection(i, g);
      CHECK(acc == w);
    }
}

TEST_CASE("longest element of finite parabolics") {
  // J = {0,2}: generated by s_1 alone.
  CHECK(longest_element_parabolic({0, 2}, 2) == simple_reflection(1, 2));
  // J = {0,1}: generated by s_2 alone.
  CHECK(longest_element_parabolic({0, 1}, 2) == simple_reflection(2, 2));
  // J = {0,...,g}: empty generating set.
  CHECK(longest_element_parabolic({0, 1, 2}, 2).is_identity());
  // J = {1} keeps s_0: affine, rejected here.
  CHECK_THROWS_AS(longest_element_parabolic({1}, 2), std::invalid_argument);
  // J = {0}: all finite generators; the longest element of W.
  CHECK(longest_element_parabolic({0}, 3) == longest_element(3));
}

TEST_CASE("final elements") {
  CHECK(is_final(SignedPerm(2)));
  CHECK(is_final(simple_reflection(2, 2)));
  CHECK_FALSE(is_final(simple_reflection(1, 2)));

  // g = 1: {id, s_1}
  auto f1 = enumerate_final(1);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].is_identity());
  CHECK(f1[1] == simple_reflection(1, 1));

  // g = 2: {id, s_2, s_1 s_2, s_2 s_1 s_2}
  auto f2 = enumerate_final(2);
  REQUIRE(f2.size() == 4);
  SignedPerm s1 = simple_reflection(1, 2), s2 = simple_reflection(2, 2);
  CHECK(f2[0].is_identity());
  CHECK(f2[1] == s2);
  CHECK(f2[2] == s1 * s2);
  CHECK(f2[3] == s2 * s1 * s2);

  CHECK(enumerate_final(3).size() == 8);

  for (int g = 1; g <= 7; ++g) {
    auto finals = enumerate_final(g);
    CHECK(finals.size() == (1u << g));
    for (const SignedPerm& w : finals) CHECK(is_final(w));
    // Canonical sort puts the unique length-0 and length-1 elements first:
    // the identity and s_g.
    CHECK(finals[0].is_identity());
    CHECK(finals[1] == simple_reflection(g, g));
    // Oracle: filter the whole group (small ranks only).
    if (g <= 4) {
      size_t count = 0;
      for (const SignedPerm& w : enumerate_weyl(g))
        if (is_final(w)) ++count;
      CHECK(count == finals.size());
    }
  }
}

TEST_CASE("elementary sequences") {
  CHECK_THROWS_AS(ElementarySequence(2, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ElementarySequence(2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ElementarySequence(2, {1, 0}), std::invalid_argument);

  CHECK(final_to_nu(SignedPerm(2)).values() == std::vector<int>{0, 0});
  CHECK(final_to_nu(simple_reflection(2, 2)).values() == std::vector<int>{0, 1});
  CHECK(final_to_nu(longest_final(2)).values() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(final_to_nu(simple_reflection(1, 2)), std::invalid_argument);

  CHECK(mw_to_phi(SignedPerm(2)).values() == std::vector<int>{0, 0});
  CHECK(mw_to_phi(simple_reflection(2, 2)).values() == std::vector<int>{0, 1});
  CHECK(mw_to_phi(longest_final(2).inverse()).values() ==
        std::vector<int>{1, 2});

  // nu_w = phi_{w^{-1}} on all final elements.
  for (int g = 1; g <= 5; ++g)
    for (const SignedPerm& w : enumerate_final(g))
      CHECK(final_to_nu(w) == mw_to_phi(w.inverse()));
}

TEST_CASE("eo invariants") {
  SignedPerm s2 = simple_reflection(2, 2);
  SignedPerm w1 = simple_reflection(1, 2) * s2;

  CHECK(eo_dimension(SignedPerm(2)) == 0);
  CHECK(eo_dimension(s2) == 1);
  CHECK(eo_dimension(longest_final(2)) == 3);

  CHECK(eo_prank(longest_final(2)) == 2);
  CHECK(eo_prank(w1) == 1);
  CHECK(eo_prank(SignedPerm(2)) == 0);

  CHECK(eo_supersingular(SignedPerm(2)));
  CHECK(eo_supersingular(s2));
  CHECK_FALSE(eo_supersingular(w1));

  CHECK_THROWS_AS(eo_dimension(simple_reflection(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(eo_prank(simple_reflection(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(eo_supersingular(simple_reflection(1, 2)),
                  std::invalid_argument);

  for (int g = 1; g <= 7; ++g) {
    CHECK(eo_prank(longest_final(g)) == g);
    CHECK(eo_prank(SignedPerm(g)) == 0);
    for (const SignedPerm& w : enumerate_final(g))
      CHECK(eo_dimension(w) == final_to_nu(w).sum());
  }
}
