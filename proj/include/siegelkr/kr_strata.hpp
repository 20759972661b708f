#pragma once

#include <string>
#include <utility>
#include <vector>

#include "siegelkr/admissible_set.hpp"
#include "siegelkr/affine_weyl.hpp"

namespace skr {

// Invariants of the Kottwitz-Rapoport stratum A_x, x in Adm(mu).  The
// stratum has dimension l(x); all operations below require an admissible
// argument and throw otherwise.

// Number of fixed points of the finite part of x in {1, ..., g}.
int prank(const AffineElement& x);

// Support S(x): the simple reflections occurring in any (equivalently,
// every) reduced word of x tau^{-1}.  Sorted.
std::vector<int> support(const AffineElement& x);

// x lies in some W_{{i, g-i}} tau, 0 <= i <= g/2; equivalently S(x) misses
// one of the pairs {i, g-i}.
bool is_superspecial(const AffineElement& x);

// S(x) meets every pair {i, g-i}; always the negation of is_superspecial.
bool non_superspecial_criterion(const AffineElement& x);

struct MaxSuperspecial {
  AffineElement element;
  int dim;
};

// The unique superspecial stratum of maximal dimension: w tau with w the
// longest element of W_{{g/2}} (g even; dim g^2/2) or of W_{{0,g}} (g odd;
// dim g(g-1)/2).
MaxSuperspecial max_superspecial(int g);

// Bounds for the dimension of the supersingular locus S_I:
// (g^2/2, g^2/2) for even g, (g(g-1)/2, (g^2-1)/2) for odd g.
std::pair<int, int> supersingular_dim_bounds(int g);

// All elements of the union of the parabolic cosets W_{{i, g-i}} tau,
// canonically ordered.  Each is checked admissible.
std::vector<AffineElement> superspecial_elements(int g);

// {y in Adm(mu) : y <= x}, via the Hasse diagram.
std::vector<AffineElement> closure(const AffineElement& x,
                                   int max_g = kDefaultAdmBound);

// Image of the stratum of w tau in the Ekedahl-Oort labeling: the single
// final element w.  Requires is_final(w).
std::vector<SignedPerm> es_image(const SignedPerm& w);

// The g = 2 table of Ekedahl-Oort images of all 13 strata.  This is the
// known classification for g = 2, shipped as fixture data (the general
// computation needs geometry and is out of scope); labels are
// ssp = superspecial locus, ssi = rest of the supersingular locus,
// p1/p2 = the p-rank 1 and 2 loci.
struct EsTableRow {
  std::vector<int> word;  // letters of the reduced word, times tau
  std::vector<std::string> es;
  int p_rank;
};
const std::vector<EsTableRow>& g2_es_table();

struct StratumRecord {
  AffineElement x;
  int dim;
  int p_rank;
  std::vector<int> support;
  bool superspecial;
  std::vector<std::string> es;  // empty = unknown
};

// One record per element of the poset, in canonical order.
std::vector<StratumRecord> stratum_records(const AdmissiblePoset& poset);

}  // namespace skr
