#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "siegelkr/kr_strata.hpp"

using namespace skr;

namespace {

AffineElement from_word(std::vector<int> letters, int g) {
  return word_to_element(letters, 1, g);
}

}  // namespace

TEST_CASE("prank") {
  CHECK(prank(tau(2)) == 0);
  CHECK(prank(from_word({0, 1}, 2)) == 1);
  CHECK(prank(AffineElement::translation(TranslationVector::mu(2))) == 2);
  CHECK_THROWS_AS(prank(AffineElement::identity(2)), std::invalid_argument);

  // Partition of the 13 strata by p-rank.
  std::map<int, int> histogram;
  const AdmissiblePoset poset = enumerate_adm(2);
  for (const AffineElement& x : poset.elements())
    ++histogram[prank(x)];
  CHECK(histogram == std::map<int, int>{{0, 5}, {1, 4}, {2, 4}});
}

TEST_CASE("support") {
  CHECK(support(tau(2)).empty());
  CHECK(support(from_word({0, 2}, 2)) == std::vector<int>{0, 2});
  CHECK(support(AffineElement::translation(TranslationVector::mu(2))) ==
        std::vector<int>{1, 2});
  CHECK_THROWS_AS(support(AffineElement::identity(2)), std::invalid_argument);
}

TEST_CASE("superspecial criterion") {
  const int g = 2;
  std::set<AffineElement> expected;
  for (const std::vector<int>& word :
       {std::vector<int>{}, {1}, {0}, {2}, {0, 2}})
    expected.insert(from_word(word, g));
  const AdmissiblePoset poset = enumerate_adm(g);
  for (const AffineElement& x : poset.elements()) {
    CHECK(is_superspecial(x) == (expected.count(x) == 1));
    CHECK(non_superspecial_criterion(x) == !is_superspecial(x));
  }
  CHECK_FALSE(is_superspecial(from_word({0, 1}, g)));
  for (int rank = 1; rank <= 3; ++rank)
    CHECK_FALSE(is_superspecial(
        AffineElement::translation(TranslationVector::mu(rank))));
}

TEST_CASE("superspecial implies p-rank zero") {
  for (int g = 1; g <= 4; ++g) {
    const AdmissiblePoset poset = enumerate_adm(g);
    for (const AffineElement& x : poset.elements())
      if (is_superspecial(x)) CHECK(prank(x) == 0);
  }
}

TEST_CASE("superspecial set equals the parabolic union") {
  for (int g = 1; g <= 3; ++g) {
    std::set<AffineElement> by_support;
    const AdmissiblePoset poset = enumerate_adm(g);
    for (const AffineElement& x : poset.elements())
      if (is_superspecial(x)) by_support.insert(x);
    std::vector<AffineElement> by_parabolic = superspecial_elements(g);
    CHECK(by_support ==
          std::set<AffineElement>(by_parabolic.begin(), by_parabolic.end()));
  }
}

TEST_CASE("max superspecial stratum") {
  MaxSuperspecial m2 = max_superspecial(2);
  CHECK(m2.dim == 2);
  CHECK(m2.element == from_word({0, 2}, 2));

  MaxSuperspecial m3 = max_superspecial(3);
  CHECK(m3.dim == 3);
  // w is the longest element of W_{{0,3}} = S_3, of length 3.
  CHECK(m3.element ==
        AffineElement::from_finite(longest_element_parabolic({0, 3}, 3)) *
            tau(3));

  CHECK(max_superspecial(4).dim == 8);
  CHECK(max_superspecial(1).dim == 0);
  CHECK(max_superspecial(1).element == tau(1));
}

TEST_CASE("supersingular dimension bounds") {
  CHECK(supersingular_dim_bounds(2) == std::pair<int, int>{2, 2});
  CHECK(supersingular_dim_bounds(3) == std::pair<int, int>{3, 4});
  CHECK(supersingular_dim_bounds(4) == std::pair<int, int>{8, 8});
}

TEST_CASE("closure") {
  auto only_tau = closure(tau(2));
  CHECK(only_tau == std::vector<AffineElement>{tau(2)});

  auto c = closure(from_word({0, 2}, 2));
  std::set<AffineElement> expected{tau(2), from_word({0}, 2), from_word({2}, 2),
                                   from_word({0, 2}, 2)};
  CHECK(std::set<AffineElement>(c.begin(), c.end()) == expected);

  auto below_t_mu =
      closure(AffineElement::translation(TranslationVector::mu(2)));
  CHECK(below_t_mu.size() == 6);
  auto slice = w_tau_slice(2);
  CHECK(std::set<AffineElement>(below_t_mu.begin(), below_t_mu.end()) ==
        std::set<AffineElement>(slice.begin(), slice.end()));

  CHECK_THROWS_AS(closure(AffineElement::identity(2)), std::invalid_argument);

  // Closure agrees with bruhat_leq pointwise.
  for (int g = 1; g <= 3; ++g) {
    AdmissiblePoset poset = enumerate_adm(g);
    for (const AffineElement& x : poset.elements()) {
      std::set<AffineElement> via_covers;
      for (const AffineElement& y : closure(x)) via_covers.insert(y);
      for (const AffineElement& y : poset.elements())
        CHECK((via_covers.count(y) == 1) == bruhat_leq(y, x));
    }
  }
}

TEST_CASE("es labels") {
  SignedPerm s2 = simple_reflection(2, 2);
  CHECK(es_image(s2) == std::vector<SignedPerm>{s2});
  CHECK_THROWS_AS(es_image(simple_reflection(1, 2)), std::invalid_argument);

  CHECK(g2_es_table().size() == 13);

  // Fixture p-rank column matches prank() on all rows.
  for (const EsTableRow& row : g2_es_table())
    CHECK(prank(from_word(row.word, 2)) == row.p_rank);

  // The records pick up the fixture labels (sample: s02.tau).
  AdmissiblePoset poset = enumerate_adm(2);
  bool found = false;
  for (const StratumRecord& rec : stratum_records(poset)) {
    CHECK(rec.dim == im_length(rec.x));
    if (rec.x == from_word({0, 2}, 2)) {
      found = true;
      CHECK(rec.es == std::vector<std::string>{"ssp", "ssi"});
      CHECK(rec.superspecial);
      CHECK(rec.p_rank == 0);
    }
  }
  CHECK(found);
}

TEST_CASE("prank of w tau agrees with the eo p-rank") {
  for (int g = 1; g <= 4; ++g)
    for (const SignedPerm& w : enumerate_final(g)) {
      AffineElement x = AffineElement::from_finite(w) * tau(g);
      CHECK(is_admissible(x));
      CHECK(prank(x) == eo_prank(w));
    }
}
