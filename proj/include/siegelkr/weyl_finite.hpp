#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skr {

// Element of the finite Weyl group W of GSp_2g, realized inside S_2g.
// Stored in one-line notation (w(1), ..., w(2g)) subject to the centralizing
// condition w(2g+1-i) = 2g+1-w(i).  W is generated by s_1, ..., s_g where
// s_i (i < g) swaps i <-> i+1 and 2g-i <-> 2g-i+1, and s_g swaps g <-> g+1.
class SignedPerm {
 public:
  explicit SignedPerm(int g);                    // identity
  SignedPerm(int g, std::vector<int> one_line);  // validates the invariants

  int rank() const { return g_; }
  int degree() const { return 2 * g_; }

  // w(i), 1-based.
  int operator()(int i) const { return map_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& one_line() const { return map_; }

  SignedPerm inverse() const;
  bool is_identity() const;

  // (a*b)(i) = a(b(i)): the right factor acts first.
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPerm&,
                                          const SignedPerm&) = default;

 private:
  int g_;
  std::vector<int> map_;
};

SignedPerm simple_reflection(int i, int g);

// Longest element w_0 of W: i -> 2g+1-i.
SignedPerm longest_element(int g);

// Longest final element w_empty: i -> g+i for i <= g.  This is the finite
// part of the length-zero element tau of the extended affine Weyl group.
SignedPerm longest_final(int g);

// Coxeter length with respect to s_1, ..., s_g, computed as the number of
// positive roots beta with w^{-1}.beta < 0.
int finite_length(const SignedPerm& w);

// A reduced word for w (greedy smallest-descent-first; deterministic).
std::vector<int> finite_reduced_word(const SignedPerm& w);

// Longest element of the parabolic W_J generated by {s_i : i in
// {0,...,g} \ excluded}.  Only finite parabolics are accepted here, i.e. the
// complement of `excluded` must avoid 0; otherwise throws ("affine
// parabolic" — handled on the affine side).
SignedPerm longest_element_parabolic(const std::vector<int>& excluded, int g);

// w(1) < w(2) < ... < w(g): minimal length representative of w S_g.
bool is_final(const SignedPerm& w);

// All 2^g final elements, sorted by (length, one-line form).
std::vector<SignedPerm> enumerate_final(int g);

// All 2^g g! elements of W, sorted by one-line form.
std::vector<SignedPerm> enumerate_weyl(int g);

std::string to_string(const SignedPerm& w);

// Elementary sequence: values phi(1), ..., phi(g) with phi(1) in {0,1} and
// phi(i) <= phi(i+1) <= phi(i)+1 (phi(0) = 0 implicitly).
class ElementarySequence {
 public:
  ElementarySequence(int g, std::vector<int> values);  // validates

  int rank() const { return g_; }
  int operator()(int i) const { return values_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& values() const { return values_; }
  int sum() const;

  friend bool operator==(const ElementarySequence&,
                         const ElementarySequence&) = default;

 private:
  int g_;
  std::vector<int> values_;
};

// nu_w(i) = i - #{a in {1..g} : w(a) <= i}; requires is_final(w).
ElementarySequence final_to_nu(const SignedPerm& w);

// phi_w(i) = #{a in {1..i} : w(a) > g}; the quotient-side labeling, related
// to nu by nu_w = phi_{w^{-1}}.
ElementarySequence mw_to_phi(const SignedPerm& w);

// Invariants of the Ekedahl-Oort stratum attached to a final element:
// dimension = length, p-rank = #{i <= g : w(i) = g+i}, and containment in
// the supersingular locus <=> w(i) = i for i = 1, ..., g - floor(g/2).
int eo_dimension(const SignedPerm& w);
int eo_prank(const SignedPerm& w);
bool eo_supersingular(const SignedPerm& w);

}  // namespace skr
