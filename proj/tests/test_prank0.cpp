#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>
#include <vector>

#include "siegelkr/admissible_set.hpp"
#include "siegelkr/kr_strata.hpp"
#include "siegelkr/prank0.hpp"

using namespace skr;

namespace {

// Brute-force oracle for the A statistic.
int a_statistic_oracle(const SgPerm& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.rank(); ++i)
    for (int j = 1; j <= sigma.rank(); ++j)
      if (i < j && j < sigma(j) && sigma(j) < sigma(i)) ++count;
  return count;
}

}  // namespace

TEST_CASE("embed") {
  CHECK(embed(SignVector(2, {0, 0}), SgPerm(2)).is_identity());
  CHECK(embed(SignVector(1, {1}), SgPerm(1)) == simple_reflection(1, 1));
  CHECK(embed(SignVector(2, {0, 0}), SgPerm(2, {2, 1})).one_line() ==
        std::vector<int>{2, 1, 4, 3});
  CHECK_THROWS_AS(embed(SignVector(2, {0, 0}), SgPerm(3)),
                  std::invalid_argument);

  // Every embedded pair lands in W with the right fixed points.
  for (const SgPerm& sigma : enumerate_sg(3))
    for (const SignVector& v : sigma_admissible_vectors(sigma)) {
      SignedPerm w = embed(v, sigma);
      for (int i = 1; i <= 3; ++i) CHECK(w(i) != i);
    }
}

TEST_CASE("fixed point free elements") {
  auto f1 = fixed_point_free_elements(1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == simple_reflection(1, 1));

  // Counted two ways: directly and as sum over sigma of 2^(g - fix).
  for (int g = 1; g <= 5; ++g) {
    size_t expected = 0;
    for (const SgPerm& sigma : enumerate_sg(g))
      expected += sigma_admissible_vectors(sigma).size();
    auto fpf = fixed_point_free_elements(g);
    CHECK(fpf.size() == expected);
    for (const SignedPerm& w : fpf)
      for (int i = 1; i <= 2 * g; ++i) CHECK(w(i) != i);
  }
  // |W^(0)| for g = 2 is 5, matching the five p-rank 0 strata.
  CHECK(fixed_point_free_elements(2).size() == 5);
  CHECK_THROWS_AS(fixed_point_free_elements(8), std::invalid_argument);
}

TEST_CASE("lift to the p-rank 0 admissible set") {
  CHECK(lift_to_adm0(simple_reflection(1, 1)) == tau(1));
  CHECK(im_length(lift_to_adm0(simple_reflection(1, 1))) == 0);

  SignedPerm w(2, {2, 1, 4, 3});
  AffineElement lifted = lift_to_adm0(w);
  CHECK(lifted.translation_part().entries() == std::vector<int>{0, 1, 0, 1});
  CHECK(im_length(lifted) == 2);

  CHECK_THROWS_AS(lift_to_adm0(SignedPerm(2)), std::invalid_argument);

  // Bijection with the p-rank 0 slice of the admissible set.
  for (int g = 1; g <= 3; ++g) {
    std::set<AffineElement> adm0;
    const AdmissiblePoset poset = enumerate_adm(g);
    for (const AffineElement& x : poset.elements())
      if (prank(x) == 0) adm0.insert(x);
    auto fpf = fixed_point_free_elements(g);
    CHECK(adm0.size() == fpf.size());
    for (const SignedPerm& w0 : fpf) {
      AffineElement x = lift_to_adm0(w0);
      CHECK(adm0.count(x) == 1);
      CHECK(x.finite_part() == w0);
    }
    for (const AffineElement& x : adm0)
      CHECK(lift_to_adm0(x.finite_part()) == x);
  }
}

TEST_CASE("sigma admissible vectors") {
  CHECK(sigma_admissible_vectors(SgPerm(2)) ==
        std::vector<SignVector>{SignVector(2, {1, 1})});
  CHECK(sigma_admissible_vectors(SgPerm(2, {2, 1})).size() == 4);
  // sigma = (12) in S_3 fixes only 3, so 2^(3-1) vectors, all with v(3) = 1.
  auto v3 = sigma_admissible_vectors(SgPerm(3, {2, 1, 3}));
  CHECK(v3.size() == 4);
  for (const SignVector& v : v3) CHECK(v(3) == 1);
}

TEST_CASE("sign monotonicity") {
  SgPerm swap2(2, {2, 1});
  SignVector v00(2, {0, 0}), v10(2, {1, 0});
  CHECK(sign_monotone_check(swap2, v00, v00));  // reflexive
  CHECK(sign_monotone_check(swap2, v10, v00));
  CHECK_THROWS_AS(sign_monotone_check(swap2, v00, v10), std::invalid_argument);
  CHECK_THROWS_AS(sign_monotone_check(SgPerm(2), v00, v00),
                  std::invalid_argument);
}

TEST_CASE("maximal p-rank 0 elements") {
  CHECK(maximal_prank0(SgPerm(1)) == tau(1));
  AffineElement m = maximal_prank0(SgPerm(2, {2, 1}));
  CHECK(m.translation_part().entries() == std::vector<int>{0, 1, 0, 1});
  CHECK(m.finite_part().one_line() == std::vector<int>{2, 1, 4, 3});

  // Same element through the embedding route, for all sigma.
  for (int g = 1; g <= 5; ++g)
    for (const SgPerm& sigma : enumerate_sg(g)) {
      std::vector<int> bits(static_cast<size_t>(g), 0);
      for (int i = 1; i <= g; ++i)
        if (sigma(i) == i) bits[static_cast<size_t>(i) - 1] = 1;
      CHECK(maximal_prank0(sigma) ==
            lift_to_adm0(embed(SignVector(g, bits), sigma)));
    }
}

TEST_CASE("a statistic") {
  CHECK(a_statistic(SgPerm(2)) == 0);
  CHECK(a_statistic(SgPerm(4, {4, 3, 2, 1})) == 1);
  for (const SgPerm& sigma : enumerate_sg(2)) CHECK(a_statistic(sigma) == 0);
  for (int g = 1; g <= 5; ++g)
    for (const SgPerm& sigma : enumerate_sg(g))
      CHECK(a_statistic(sigma) == a_statistic_oracle(sigma));
}

TEST_CASE("margin") {
  CHECK(a_statistic_margin(SgPerm(1)) == 0);
  CHECK(a_statistic_margin(SgPerm(2)) == 0);
  // Equality case: sigma = (4,3,2,1) has l = 6, A = A' = 1, no fixed points.
  CHECK(a_statistic_margin(SgPerm(4, {4, 3, 2, 1})) == 0);
  for (int g = 1; g <= 7; ++g)
    for (const SgPerm& sigma : enumerate_sg(g))
      CHECK(a_statistic_margin(sigma) >= 0);
}

TEST_CASE("pattern counts") {
  PatternCounts id_counts = excedance_pattern_counts(SgPerm(2));
  CHECK(id_counts.c1 == 0);
  CHECK(id_counts.c2 == 0);
  CHECK(id_counts.c3 == 0);
  CHECK(id_counts.c4 == 0);

  PatternCounts swap_counts = excedance_pattern_counts(SgPerm(2, {2, 1}));
  CHECK(swap_counts.c1 == 1);
  CHECK(swap_counts.c2 == 1);

  for (int g = 1; g <= 7; ++g)
    for (const SgPerm& sigma : enumerate_sg(g)) {
      PatternCounts c = excedance_pattern_counts(sigma);
      CHECK(c.c1 == c.c2);
      CHECK(c.c3 == c.c4);
    }
}

TEST_CASE("length formula") {
  CHECK(max_prank0_length(SgPerm(2, {2, 1})) == 2);
  CHECK(max_prank0_length(SgPerm(3, {2, 1, 3})) == 4);
  CHECK(max_prank0_length(SgPerm(2)) == 1);

  // The central oracle: closed form equals the Iwahori-Matsumoto length.
  for (int g = 1; g <= 5; ++g)
    for (const SgPerm& sigma : enumerate_sg(g))
      CHECK(max_prank0_length(sigma) == im_length(maximal_prank0(sigma)));
}

TEST_CASE("dimension of the p-rank 0 locus") {
  CHECK(dim_prank0(2) == 2);
  CHECK(dim_prank0(3) == 4);
  CHECK(dim_prank0(4) == 8);
  for (int g = 1; g <= 7; ++g) CHECK(dim_prank0(g) == g * g / 2);

  // Achieved by (12)(34)... for even g.
  CHECK(max_prank0_length(SgPerm(4, {2, 1, 4, 3})) == 8);

  // Full enumeration oracle at small rank.
  for (int g = 1; g <= 3; ++g) {
    int best = -1;
    const AdmissiblePoset poset = enumerate_adm(g);
    for (const AffineElement& x : poset.elements())
      if (prank(x) == 0) best = std::max(best, im_length(x));
    CHECK(best == g * g / 2);
  }
}
