#pragma once

#include <compare>
#include <string>
#include <vector>

#include "siegelkr/affine_weyl.hpp"
#include "siegelkr/weyl_finite.hpp"

namespace skr {

// The p-rank 0 locus: W decomposes as (Z/2)^g x| S_g, and the fixed-point
// free elements W^(0) are in bijection with the p-rank 0 part of Adm(mu).

// A permutation of {1, ..., g} (the S_g factor of W).
class SgPerm {
 public:
  explicit SgPerm(int g);
  SgPerm(int g, std::vector<int> one_line);

  int rank() const { return g_; }
  int operator()(int i) const { return map_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return map_; }
  SgPerm inverse() const;

  friend bool operator==(const SgPerm&, const SgPerm&) = default;
  friend std::strong_ordering operator<=>(const SgPerm&,
                                          const SgPerm&) = default;

 private:
  int g_;
  std::vector<int> map_;
};

std::vector<SgPerm> enumerate_sg(int g);

// Length of sigma in S_g = number of inversions.  Distinct from the length
// in W; the two scales must not be mixed.
int inversions(const SgPerm& sigma);
int fixed_point_count(const SgPerm& sigma);

// A vector in (Z/2)^g.
class SignVector {
 public:
  SignVector(int g, std::vector<int> bits);  // entries in {0,1}

  int rank() const { return g_; }
  int operator()(int i) const { return bits_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& bits() const { return bits_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend std::strong_ordering operator<=>(const SignVector&,
                                          const SignVector&) = default;

 private:
  int g_;
  std::vector<int> bits_;
};

// v' <= v componentwise (0 < 1).
bool sign_leq(const SignVector& v_prime, const SignVector& v);

// The element v.sigma of W: sigma doubles to w(i) = sigma(i),
// w(2g+1-i) = 2g+1-sigma(i); v then flips w(i) = i to w(i) = 2g+1-i at the
// positions with v(i) = 1.
SignedPerm embed(const SignVector& v, const SgPerm& sigma);

// W^(0): all w in W with w(i) != i for every i.
std::vector<SignedPerm> fixed_point_free_elements(int g, int max_g = 7);

// Inverse of the projection Adm(mu)^(0) -> W^(0): w -> t^(lambda(w)) w with
// lambda(w)(i) = 0 if w^{-1}(i) > i, 1 if w^{-1}(i) < i.  Requires w fixed
// point free.
AffineElement lift_to_adm0(const SignedPerm& w);

// v is sigma-admissible iff v(i) = 1 at every fixed point of sigma; there
// are 2^(g - #fix) such vectors.
std::vector<SignVector> sigma_admissible_vectors(const SgPerm& sigma);

// Lifting reverses the componentwise order on sign vectors: for
// sigma-admissible v' <= v this returns
// bruhat_leq(lift(v.sigma), lift(v'.sigma)), which is always true.
bool sign_monotone_check(const SgPerm& sigma, const SignVector& v,
                         const SignVector& v_prime);

// The Bruhat-maximal element of the p-rank 0 fiber over sigma:
// t^(lambda_sigma) (v_sigma sigma) with v_sigma(i) = 1 iff sigma(i) = i.
AffineElement maximal_prank0(const SgPerm& sigma);

// A_sigma = #{(i,j) : i < j < sigma(j) < sigma(i)}.
int a_statistic(const SgPerm& sigma);

// Doubled integer margin of the inequality
//   l(sigma) - 2(A_sigma + A_{sigma^{-1}}) >= (g - #fix(sigma)) / 2,
// i.e. 2(l - 2(A + A')) - (g - #fix); always >= 0.
int a_statistic_margin(const SgPerm& sigma);

// Pattern counts (a_i = sigma(i)):
//   c1 = #{(i,j) : i <= j < a_i, a_j >  j}
//   c2 = #{(i,j) : a_i < a_j <= i, a_j >  j}
//   c3 = #{(i,j) : i <= j < a_i, a_j <= j}
//   c4 = #{(i,j) : a_i < a_j <= i, a_j <= j}
// with c1 = c2 and c3 = c4 for every sigma.
struct PatternCounts {
  long c1, c2, c3, c4;
};
PatternCounts excedance_pattern_counts(const SgPerm& sigma);

// Closed form for im_length(maximal_prank0(sigma)):
//   g(g+1)/2 + 2 A_sigma + 2 A_{sigma^{-1}} - l(sigma) - #fix(sigma).
int max_prank0_length(const SgPerm& sigma);

// max over sigma of max_prank0_length = floor(g^2 / 2), the dimension of
// the p-rank 0 locus; throws if the computed maximum ever disagreed.
int dim_prank0(int g);

std::string to_string(const SgPerm& sigma);

}  // namespace skr
