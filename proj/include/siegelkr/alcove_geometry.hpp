#pragma once

#include <string>
#include <vector>

#include "siegelkr/affine_weyl.hpp"

namespace skr {

// Extended alcove: a tuple (x_0, ..., x_2g) of vectors in Z^{2g} such that
// x_i - x_{i-1} = -e_{w(i)} for a bijective assignment i -> w(i) (hence
// x_2g = x_0 - (1,...,1)).  The extended affine Weyl group acts simply
// transitively on these; the base alcove is omega_i = ((-1)^(i), 0^(2g-i)).
struct ExtendedAlcove {
  int g;
  std::vector<std::vector<int>> rows;  // rows[i], i = 0..2g, each of size 2g
};

ExtendedAlcove base_alcove(int g);

// x.(y_i)_i = (lambda + w(y_i))_i for x = t^lambda w.
ExtendedAlcove act(const AffineElement& x, const ExtendedAlcove& a);

ExtendedAlcove element_to_alcove(const AffineElement& x);

// Inverse of element_to_alcove; validates the alcove invariants and the
// symplectic conditions on the recovered (lambda, w).
AffineElement alcove_to_element(const ExtendedAlcove& a);

// Kottwitz-Rapoport permissibility for mu = (1^g, 0^g): every entry of
// x_i - omega_i lies in {0,1}, and the alcove's element lies in W_a tau
// (Omega-power 1).  Equivalent to Bruhat admissibility.
bool is_permissible(const ExtendedAlcove& a);

// Entrywise truncation x~_i(j) = min(x_i(j), 0).
struct TruncatedAlcove {
  int g;
  std::vector<std::vector<int>> rows;
};

TruncatedAlcove truncate(const ExtendedAlcove& a);

struct AlcoveData {
  TranslationVector lambda;
  TranslationVector rho;
  SignedPerm w;
};

// Reconstruction of (lambda(x), rho(x), w) from the truncated data of a
// permissible alcove:
//   lambda(x) = x~_2g + (1,...,1),
//   rho(x)(i) = 1 if x~_{i-1} = x~_i, else 0,
//   w(i) = position of the -1 in x~_i - x~_{i-1} on the moving steps,
// completed through w(2g+1-i) = 2g+1-w(i) on the steps hidden by the
// truncation.  Rows violating the "equal or single -1 drop" dichotomy are
// rejected as malformed.
AlcoveData recover(const TruncatedAlcove& t);

// The flag position v in W: extract the rows x'_0, ..., x'_g with
// sum_j x'_i(j) = -i and solve v(omega_i) = x'_i.  For a permissible source
// this satisfies v = w . w_rho(rho(x)).
SignedPerm flag_position(const TruncatedAlcove& t);

// The unique final element with w_rho(mu) = w_0(rho), for rho in the
// W-orbit of mu; throws otherwise.
SignedPerm w_rho(const TranslationVector& rho);

// Alcoves serialize as (2g+1) x 2g integer matrices, row-major.
std::string alcove_to_json(const ExtendedAlcove& a);
ExtendedAlcove alcove_from_json(const std::string& text);

}  // namespace skr
