#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "siegelkr/root_system.hpp"
#include "siegelkr/weyl_finite.hpp"

namespace skr {

// Cocharacter of the diagonal torus of GSp_2g: an integer vector
// (lambda(1), ..., lambda(2g)) with lambda(i) + lambda(2g+1-i) constant.
// The constant is the similitude component c.
class TranslationVector {
 public:
  TranslationVector(int g, std::vector<int> entries);  // validates

  static TranslationVector zero(int g);
  static TranslationVector mu(int g);  // (1^g, 0^g)

  int rank() const { return g_; }
  int operator()(int i) const { return entries_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& entries() const { return entries_; }
  int similitude() const;

  // w.lambda, i.e. (w.lambda)(j) = lambda(w^{-1}(j)).
  TranslationVector permuted_by(const SignedPerm& w) const;

  friend TranslationVector operator+(const TranslationVector&,
                                     const TranslationVector&);
  friend TranslationVector operator-(const TranslationVector&);
  friend bool operator==(const TranslationVector&,
                         const TranslationVector&) = default;
  friend std::strong_ordering operator<=>(const TranslationVector&,
                                          const TranslationVector&) = default;

 private:
  int g_;
  std::vector<int> entries_;
};

// Element x = t^lambda w of the extended affine Weyl group of GSp_2g,
// with group law (t^lambda w)(t^lambda' w') = t^(lambda + w.lambda') (w w').
// The Omega-power of x (the k with x in W_a tau^k) equals the similitude
// component of lambda and is therefore derived, not stored.
class AffineElement {
 public:
  AffineElement(TranslationVector lambda, SignedPerm w);

  static AffineElement identity(int g);
  static AffineElement translation(const TranslationVector& lambda);
  static AffineElement from_finite(const SignedPerm& w);

  int rank() const { return w_.rank(); }
  const TranslationVector& translation_part() const { return lambda_; }
  const SignedPerm& finite_part() const { return w_; }
  int omega_power() const { return lambda_.similitude(); }

  AffineElement inverse() const;

  friend AffineElement operator*(const AffineElement&, const AffineElement&);

  // Comparison uses the canonical key (lambda entries, one-line w).
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend std::strong_ordering operator<=>(const AffineElement&,
                                          const AffineElement&) = default;

 private:
  TranslationVector lambda_;
  SignedPerm w_;
};

// Simple affine reflections: s_i for 1 <= i <= g are the finite generators;
// s_0 = t^(-1, 0, ..., 0, 1) (1 <-> 2g).  All have length 1 and square to
// the identity.
AffineElement simple_affine(int i, int g);

// The unique length-zero element with Adm(mu) contained in W_a tau:
// tau = t^(w_empty(mu)) w_empty = w_empty t^mu.
AffineElement tau(int g);
AffineElement tau_power(int g, int k);

// Right decomposition x = w t^rho, so rho = w^{-1}.lambda(x).
std::pair<SignedPerm, TranslationVector> decompose_right(
    const AffineElement& x);

long pairing(const Root& beta, const TranslationVector& lambda);

// Iwahori-Matsumoto length
//   l(t^lambda w) = sum_{beta>0, w^{-1}beta>0} |<beta,lambda>|
//                 + sum_{beta>0, w^{-1}beta<0} |<beta,lambda> + 1|,
// the number of affine root walls separating x.A0 from the base alcove A0
// (which sits in the antidominant chamber).
int im_length(const AffineElement& x);

// l(s_i x) < l(x)?
bool left_descent(int i, const AffineElement& x);

struct ReducedWord {
  std::vector<int> letters;
  int omega_power;
};

// x = s_{i_1} ... s_{i_n} tau^k with n = im_length(x); greedy left-descent,
// smallest index first, so the result is deterministic.
ReducedWord reduced_word(const AffineElement& x);

AffineElement word_to_element(const std::vector<int>& letters, int omega_power,
                              int g);

// Bruhat order transported to the Omega-cosets: u tau^k <= v tau^k iff
// u <= v in W_a; elements with different Omega-powers are incomparable
// (returns false).
bool bruhat_leq(const AffineElement& x, const AffineElement& y);

// Longest element of the standard parabolic subgroup of W_a generated by
// {s_i : i in generators}; throws if the parabolic is infinite.
AffineElement longest_parabolic_affine(const std::vector<int>& generators,
                                       int g);

// All elements of that parabolic subgroup (throws past `bound`).
std::vector<AffineElement> parabolic_subgroup(const std::vector<int>& generators,
                                              int g, std::size_t bound = 1u << 20);

std::string to_string(const AffineElement& x);

}  // namespace skr
