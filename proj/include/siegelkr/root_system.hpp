#pragma once

#include <utility>
#include <vector>

namespace skr {

class SignedPerm;

// Positive roots of Sp_2g, written as vectors in Z^{2g} with respect to the
// coordinates dual to the diagonal torus of GL_2g.  There are three families:
//
//   Diff(i,j) = e_i - e_j + e_{2g+1-j} - e_{2g+1-i},   1 <= i < j <= g
//   Sum(i,j)  = e_i + e_j - e_{2g+1-j} - e_{2g+1-i},   1 <= i < j <= g
//   Long(i)   = e_i - e_{2g+1-i},                      1 <= i <= g
//
// g^2 positive roots in total.  A vector that is plus or minus a root is
// positive exactly when its first nonzero entry is +1.
struct Root {
  enum class Kind { Diff, Sum, Long };
  Kind kind;
  int i;
  int j;  // unused for Kind::Long

  friend bool operator==(const Root&, const Root&) = default;
};

std::vector<Root> positive_roots(int g);

// Cached per-thread copy of positive_roots(g) for hot loops.
const std::vector<Root>& positive_roots_cached(int g);

// beta(k) for 1 <= k <= 2g, in {-1, 0, 1}.
int root_entry(const Root& beta, int g, int k);

std::vector<int> root_vector(const Root& beta, int g);

// Pairing <beta, lambda> against a cocharacter lambda of the GSp torus with
// similitude component c, normalized so that
//   <Diff(i,j), lambda> = lambda(i) - lambda(j)
//   <Sum(i,j),  lambda> = lambda(i) + lambda(j) - c
//   <Long(i),   lambda> = 2 lambda(i) - c.
// The naive dot product with the Z^{2g} vector would be twice these values.
long pairing(const Root& beta, const std::vector<int>& lambda, int c);

// Sign of w^{-1}.beta, where (w^{-1}.beta)(k) = beta(w(k)).
int pullback_sign(const SignedPerm& w, const Root& beta);

// Decompose v = sign * (positive root vector).  Throws if v is not of this
// shape.
std::pair<Root, int> identify_root(const std::vector<int>& v);

// w.beta as (root, sign), where (w.beta)(k) = beta(w^{-1}(k)).
std::pair<Root, int> apply(const SignedPerm& w, const Root& beta);

}  // namespace skr
