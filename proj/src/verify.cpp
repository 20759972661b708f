#include "siegelkr/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "siegelkr/admissible_set.hpp"
#include "siegelkr/alcove_geometry.hpp"
#include "siegelkr/kr_strata.hpp"
#include "siegelkr/prank0.hpp"
#include "siegelkr/weyl_finite.hpp"

namespace skr {

namespace {

struct Suite {
  std::string name;
  int default_g;
  SuiteResult (*run)(int g);
};

void fail(SuiteResult& r, const std::string& what) {
  r.pass = false;
  if (r.failures.size() < 32) r.failures.push_back(what);
}

void note(SuiteResult& r, const std::string& what) { r.notes.push_back(what); }

std::string show_word(const std::vector<int>& letters) {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ',';
    os << letters[k];
  }
  os << ']';
  return os.str();
}

SuiteResult make(const char* name, int g) {
  SuiteResult r;
  r.suite = name;
  r.g = g;
  r.pass = true;
  r.checked = 0;
  return r;
}

// ---- adm-count: size and shape of Adm(mu) -------------------------------

SuiteResult run_adm_count(int g) {
  SuiteResult r = make("adm-count", g);
  AdmissiblePoset poset = enumerate_adm(g, std::max(g, kDefaultAdmBound));
  note(r, "count=" + std::to_string(poset.size()));
  if (g == 2 && poset.size() != 13)
    fail(r, "expected |Adm(mu)| = 13 for g=2, got " + std::to_string(poset.size()));
  const int top = g * (g + 1) / 2;
  std::vector<char> has_upper(poset.size(), 0);
  for (const auto& [lo, hi] : poset.covers()) {
    ++r.checked;
    if (poset.lengths()[static_cast<size_t>(hi)] !=
        poset.lengths()[static_cast<size_t>(lo)] + 1)
      fail(r, "cover does not raise length by one");
    has_upper[static_cast<size_t>(lo)] = 1;
  }
  size_t maximal = 0;
  for (size_t k = 0; k < poset.size(); ++k) {
    ++r.checked;
    if (poset.lengths()[k] > top) fail(r, "element longer than g(g+1)/2");
    if (!has_upper[k]) {
      ++maximal;
      if (poset.lengths()[k] != top)
        fail(r, "maximal element of wrong length");
    }
  }
  if (maximal != (1u << g))
    fail(r, "expected 2^g maximal elements, got " + std::to_string(maximal));
  return r;
}

// ---- g2-table: the thirteen strata for g = 2 ----------------------------

SuiteResult run_g2_table(int g) {
  if (g != 2) throw std::invalid_argument("g2-table: only defined for g = 2");
  SuiteResult r = make("g2-table", g);
  AdmissiblePoset poset = enumerate_adm(2);
  if (poset.size() != 13) fail(r, "expected 13 elements");

  std::set<AffineElement> seen;
  std::map<int, int> prank_histogram;
  for (const EsTableRow& row : g2_es_table()) {
    ++r.checked;
    AffineElement x = word_to_element(row.word, 1, 2);
    if (!poset.index_of(x)) {
      fail(r, "table element " + show_word(row.word) + " not admissible");
      continue;
    }
    seen.insert(x);
    std::set<int> expected(row.word.begin(), row.word.end());
    std::vector<int> got = support(x);
    if (std::set<int>(got.begin(), got.end()) != expected)
      fail(r, "support mismatch at " + show_word(row.word));
    if (prank(x) != row.p_rank)
      fail(r, "p-rank mismatch at " + show_word(row.word));
    ++prank_histogram[row.p_rank];
    if (im_length(x) != static_cast<int>(row.word.size()))
      fail(r, "length mismatch at " + show_word(row.word));
  }
  if (seen.size() != 13) fail(r, "table rows are not 13 distinct elements");
  if (prank_histogram != std::map<int, int>{{0, 5}, {1, 4}, {2, 4}})
    fail(r, "p-rank partition is not {0:5, 1:4, 2:4}");

  // The five superspecial strata.
  std::set<AffineElement> expected_ssp;
  for (const std::vector<int>& word :
       {std::vector<int>{}, {1}, {0}, {2}, {0, 2}})
    expected_ssp.insert(word_to_element(word, 1, 2));
  std::set<AffineElement> got_ssp;
  for (const AffineElement& x : poset.elements()) {
    ++r.checked;
    if (is_superspecial(x)) got_ssp.insert(x);
  }
  if (got_ssp != expected_ssp)
    fail(r, "superspecial set is not {tau, s1.tau, s0.tau, s2.tau, s02.tau}");

  // ES fixture agrees with the computed records.
  std::map<AffineElement, std::vector<std::string>> fixture;
  for (const EsTableRow& row : g2_es_table())
    fixture.emplace(word_to_element(row.word, 1, 2), row.es);
  for (const StratumRecord& rec : stratum_records(poset)) {
    ++r.checked;
    auto it = fixture.find(rec.x);
    if (it == fixture.end() || rec.es != it->second)
      fail(r, "ES fixture mismatch");
  }
  return r;
}

// ---- flag-roundtrip: truncation reconstructs the element ----------------

SuiteResult run_flag_roundtrip(int g) {
  SuiteResult r = make("flag-roundtrip", g);
  AdmissiblePoset poset = enumerate_adm(g, std::max(g, kDefaultAdmBound));
  for (const AffineElement& x : poset.elements()) {
    ++r.checked;
    ExtendedAlcove a = element_to_alcove(x);
    if (!(alcove_to_element(a) == x)) {
      fail(r, "alcove round-trip failed at " + to_string(x));
      continue;
    }
    if (!is_permissible(a)) {
      fail(r, "admissible element not permissible: " + to_string(x));
      continue;
    }
    TruncatedAlcove t = truncate(a);
    auto [w, rho] = decompose_right(x);
    AlcoveData data = recover(t);
    if (!(data.lambda == x.translation_part()) || !(data.rho == rho) ||
        !(data.w == w)) {
      fail(r, "recover() mismatch at " + to_string(x));
      continue;
    }
    SignedPerm v = flag_position(t);
    if (!(v == w * w_rho(rho)))
      fail(r, "flag position != w * w_rho(rho) at " + to_string(x));
  }
  return r;
}

// ---- kr-equivalence: Bruhat admissibility == permissibility -------------

SuiteResult run_kr_equivalence(int g) {
  SuiteResult r = make("kr-equivalence", g);
  auto check = [&](const AffineElement& x) {
    ++r.checked;
    bool adm = is_admissible(x);
    bool perm = is_permissible(element_to_alcove(x));
    if (adm != perm)
      fail(r, "admissible=" + std::to_string(adm) + " but permissible=" +
                  std::to_string(perm) + " at " + to_string(x));
  };

  if (g <= 3) {
    // All candidates: lambda in {0,1}^{2g} with lambda(i)+lambda(2g+1-i)=1
    // (admissible elements have exactly these translation parts), times W.
    std::vector<SignedPerm> weyl = enumerate_weyl(g);
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> lambda(static_cast<size_t>(2 * g), 0);
      for (int i = 1; i <= g; ++i) {
        if ((mask >> (i - 1)) & 1u)
          lambda[static_cast<size_t>(2 * g - i)] = 1;
        else
          lambda[static_cast<size_t>(i) - 1] = 1;
      }
      TranslationVector tv(g, lambda);
      for (const SignedPerm& w : weyl) check(AffineElement(tv, w));
    }
  } else {
    // Sampled: translation entries from {-1,...,2}, any Weyl part.
    std::mt19937 rng(20240901u);
    std::vector<SignedPerm> weyl = enumerate_weyl(g);
    std::uniform_int_distribution<int> entry(-1, 2);
    std::uniform_int_distribution<int> c_dist(0, 2);
    std::uniform_int_distribution<size_t> pick(0, weyl.size() - 1);
    for (int trial = 0; trial < 10000; ++trial) {
      int c = c_dist(rng);
      std::vector<int> lambda(static_cast<size_t>(2 * g));
      for (int i = 1; i <= g; ++i) {
        int e = entry(rng);
        lambda[static_cast<size_t>(i) - 1] = e;
        lambda[static_cast<size_t>(2 * g - i)] = c - e;
      }
      check(AffineElement(TranslationVector(g, std::move(lambda)),
                          weyl[pick(rng)]));
    }
  }

  // Targeted negatives on both sides of the coset condition.
  std::vector<int> two_mu(static_cast<size_t>(2 * g), 0);
  for (int i = 0; i < g; ++i) two_mu[static_cast<size_t>(i)] = 2;
  check(AffineElement::translation(TranslationVector(g, two_mu)));
  check(AffineElement::from_finite(simple_reflection(1, g)));
  check(tau_power(g, 2));
  return r;
}

// ---- prank0-bijection: Adm(mu)^(0) <-> W^(0) ----------------------------

SuiteResult run_prank0_bijection(int g) {
  SuiteResult r = make("prank0-bijection", g);
  AdmissiblePoset poset = enumerate_adm(g, std::max(g, kDefaultAdmBound));
  std::set<AffineElement> adm0;
  for (const AffineElement& x : poset.elements())
    if (prank(x) == 0) adm0.insert(x);
  std::vector<SignedPerm> fpf = fixed_point_free_elements(g);
  note(r, "count=" + std::to_string(adm0.size()));
  if (adm0.size() != fpf.size())
    fail(r, "|Adm(mu)^(0)| = " + std::to_string(adm0.size()) +
                " != |W^(0)| = " + std::to_string(fpf.size()));
  for (const AffineElement& x : adm0) {
    ++r.checked;
    if (!(lift_to_adm0(x.finite_part()) == x))
      fail(r, "lift(project(x)) != x at " + to_string(x));
  }
  for (const SignedPerm& w : fpf) {
    ++r.checked;
    AffineElement x = lift_to_adm0(w);
    if (!(x.finite_part() == w) || adm0.find(x) == adm0.end())
      fail(r, "project(lift(w)) != w or lift not admissible at " + to_string(w));
  }
  return r;
}

// ---- sign-monotonicity: flipping signs down moves lifts up --------------

SuiteResult run_sign_monotonicity(int g) {
  SuiteResult r = make("sign-monotonicity", g);
  for (const SgPerm& sigma : enumerate_sg(g)) {
    std::vector<SignVector> vectors = sigma_admissible_vectors(sigma);
    for (const SignVector& v : vectors)
      for (const SignVector& vp : vectors) {
        if (!sign_leq(vp, v)) continue;
        ++r.checked;
        if (!sign_monotone_check(sigma, v, vp))
          fail(r, "monotonicity failed at sigma=" + to_string(sigma));
      }
    // Within the fiber, the all-minimal admissible vector gives the unique
    // Bruhat maximum.
    AffineElement max = maximal_prank0(sigma);
    for (const SignVector& v : vectors) {
      ++r.checked;
      AffineElement x = lift_to_adm0(embed(v, sigma));
      if (!bruhat_leq(x, max))
        fail(r, "fiber element above the claimed maximum, sigma=" + to_string(sigma));
      if (x == max) continue;
      if (im_length(x) >= im_length(max))
        fail(r, "fiber maximum not strict, sigma=" + to_string(sigma));
    }
  }
  return r;
}

// ---- a-margin ------------------------------------------------------------

SuiteResult run_a_margin(int g) {
  SuiteResult r = make("a-margin", g);
  for (const SgPerm& sigma : enumerate_sg(g)) {
    ++r.checked;
    if (a_statistic_margin(sigma) < 0)
      fail(r, "negative margin at sigma=" + to_string(sigma));
  }
  return r;
}

// ---- pattern-counts ------------------------------------------------------

SuiteResult run_pattern_counts(int g) {
  SuiteResult r = make("pattern-counts", g);
  for (const SgPerm& sigma : enumerate_sg(g)) {
    ++r.checked;
    PatternCounts c = excedance_pattern_counts(sigma);
    if (c.c1 != c.c2 || c.c3 != c.c4)
      fail(r, "count identity failed at sigma=" + to_string(sigma));
  }
  return r;
}

// ---- length-formula ------------------------------------------------------

SuiteResult run_length_formula(int g) {
  SuiteResult r = make("length-formula", g);
  for (const SgPerm& sigma : enumerate_sg(g)) {
    ++r.checked;
    AffineElement x = maximal_prank0(sigma);
    if (max_prank0_length(sigma) != im_length(x))
      fail(r, "formula != length at sigma=" + to_string(sigma) + ": " +
                  std::to_string(max_prank0_length(sigma)) + " vs " +
                  std::to_string(im_length(x)));
    if (x.omega_power() != 1)
      fail(r, "maximal lift not in W_a tau at sigma=" + to_string(sigma));
  }
  return r;
}

// ---- prank0-dim ----------------------------------------------------------

SuiteResult run_prank0_dim(int g) {
  SuiteResult r = make("prank0-dim", g);
  const int expected = g * g / 2;
  int closed = dim_prank0(g);  // throws if the closed form disagrees
  ++r.checked;
  note(r, "closed-form max=" + std::to_string(closed));
  if (closed != expected) fail(r, "closed-form maximum != floor(g^2/2)");
  if (g <= 4) {
    AdmissiblePoset poset = enumerate_adm(g);
    int best = -1;
    for (size_t k = 0; k < poset.size(); ++k) {
      if (prank(poset.elements()[k]) != 0) continue;
      ++r.checked;
      best = std::max(best, poset.lengths()[k]);
    }
    note(r, "enumerated max=" + std::to_string(best));
    if (best != expected)
      fail(r, "enumerated maximum over Adm(mu)^(0) != floor(g^2/2)");
  }
  return r;
}

// ---- superspecial-max ----------------------------------------------------

SuiteResult run_superspecial_max(int g) {
  SuiteResult r = make("superspecial-max", g);
  const int expected = g % 2 == 0 ? g * g / 2 : g * (g - 1) / 2;
  std::vector<AffineElement> ssp = superspecial_elements(g);
  note(r, "superspecial count=" + std::to_string(ssp.size()));
  int best = -1;
  size_t maximizers = 0;
  AffineElement arg = tau(g);
  for (const AffineElement& x : ssp) {
    ++r.checked;
    int len = im_length(x);
    if (len > best) {
      best = len;
      maximizers = 1;
      arg = x;
    } else if (len == best) {
      ++maximizers;
    }
  }
  if (best != expected)
    fail(r, "max superspecial dimension " + std::to_string(best) + " != " +
                std::to_string(expected));
  if (maximizers != 1)
    fail(r, "maximizer not unique: " + std::to_string(maximizers));
  MaxSuperspecial ms = max_superspecial(g);
  if (!(ms.element == arg) || ms.dim != expected)
    fail(r, "max_superspecial() disagrees with the enumeration");
  auto [lo, hi] = supersingular_dim_bounds(g);
  if (lo != expected) fail(r, "lower supersingular bound != max ssp dimension");
  if (hi != g * g / 2) fail(r, "upper supersingular bound != floor(g^2/2)");

  for (const AffineElement& x : ssp) {
    ++r.checked;
    if (prank(x) != 0) fail(r, "superspecial stratum of positive p-rank");
  }

  if (g <= 4) {
    // Both descriptions of the superspecial set agree.
    AdmissiblePoset poset = enumerate_adm(g);
    std::set<AffineElement> via_support;
    for (const AffineElement& x : poset.elements()) {
      ++r.checked;
      if (is_superspecial(x)) via_support.insert(x);
    }
    if (via_support != std::set<AffineElement>(ssp.begin(), ssp.end()))
      fail(r, "support criterion and parabolic union disagree");
    for (const AffineElement& x : poset.elements()) {
      ++r.checked;
      if (non_superspecial_criterion(x) == is_superspecial(x))
        fail(r, "criterion complement violated at " + to_string(x));
    }
  }
  return r;
}

// ---- wtau-slice ----------------------------------------------------------

SuiteResult run_wtau_slice(int g) {
  SuiteResult r = make("wtau-slice", g);
  AdmissiblePoset poset = enumerate_adm(g, std::max(g, kDefaultAdmBound));
  std::set<AffineElement> slice;
  for (const AffineElement& x : w_tau_slice(g, std::max(g, kDefaultAdmBound)))
    slice.insert(x);
  AffineElement t_mu = AffineElement::translation(TranslationVector::mu(g));
  std::set<AffineElement> below;
  for (const AffineElement& x : poset.elements()) {
    ++r.checked;
    if (bruhat_leq(x, t_mu)) below.insert(x);
  }
  note(r, "slice size=" + std::to_string(slice.size()));
  if (slice != below) fail(r, "W tau slice != {x <= t^mu}");
  for (const AffineElement& x : poset.elements()) {
    ++r.checked;
    auto [w, rho] = decompose_right(x);
    if (!bruhat_leq(x, AffineElement::translation(rho)))
      fail(r, "x <= t^rho(x) fails at " + to_string(x));
  }
  return r;
}

// ---- eo ------------------------------------------------------------------

SuiteResult run_eo(int g) {
  SuiteResult r = make("eo", g);
  std::vector<SignedPerm> finals = enumerate_final(g);
  if (finals.size() != (1u << g))
    fail(r, "expected 2^g final elements, got " + std::to_string(finals.size()));
  int len0 = 0, len1 = 0;
  for (const SignedPerm& w : finals) {
    ++r.checked;
    int dim = eo_dimension(w);
    if (dim != final_to_nu(w).sum())
      fail(r, "dim != sum(nu) at " + to_string(w));
    if (!(final_to_nu(w) == mw_to_phi(w.inverse())))
      fail(r, "nu_w != phi_{w^-1} at " + to_string(w));
    if (dim == 0) {
      ++len0;
      if (!w.is_identity()) fail(r, "length-0 final element is not the identity");
    }
    if (dim == 1) {
      ++len1;
      if (!(w == simple_reflection(g, g)))
        fail(r, "length-1 final element is not s_g");
    }
  }
  if (len0 != 1 || len1 != 1)
    fail(r, "length 0 and 1 final elements are not unique");
  if (eo_prank(longest_final(g)) != g) fail(r, "p-rank of w_empty != g");
  if (eo_prank(SignedPerm(g)) != 0) fail(r, "p-rank of identity != 0");
  if (g == 2) {
    std::set<SignedPerm> ss;
    for (const SignedPerm& w : finals)
      if (eo_supersingular(w)) ss.insert(w);
    std::set<SignedPerm> expected{SignedPerm(2), simple_reflection(2, 2)};
    ++r.checked;
    if (ss != expected) fail(r, "supersingular finals for g=2 != {id, s_2}");
  }
  return r;
}

const Suite kSuites[] = {
    {"adm-count", 2, run_adm_count},
    {"g2-table", 2, run_g2_table},
    {"flag-roundtrip", 3, run_flag_roundtrip},
    {"kr-equivalence", 3, run_kr_equivalence},
    {"prank0-bijection", 3, run_prank0_bijection},
    {"sign-monotonicity", 4, run_sign_monotonicity},
    {"a-margin", 7, run_a_margin},
    {"pattern-counts", 7, run_pattern_counts},
    {"length-formula", 5, run_length_formula},
    {"prank0-dim", 4, run_prank0_dim},
    {"superspecial-max", 6, run_superspecial_max},
    {"wtau-slice", 3, run_wtau_slice},
    {"eo", 7, run_eo},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : kSuites) out.push_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const Suite& s : kSuites)
    if (s.name == name) return true;
  return false;
}

int suite_default_g(const std::string& name) {
  for (const Suite& s : kSuites)
    if (s.name == name) return s.default_g;
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteResult run_suite(const std::string& name, int g) {
  for (const Suite& s : kSuites)
    if (s.name == name) return s.run(g);
  throw std::invalid_argument("unknown suite: " + name);
}

std::string suite_report_json(const SuiteResult& result) {
  nlohmann::json j;
  j["suite"] = result.suite;
  j["g"] = result.g;
  j["pass"] = result.pass;
  j["checked"] = result.checked;
  j["notes"] = result.notes;
  j["failures"] = result.failures;
  return j.dump(2);
}

}  // namespace skr
