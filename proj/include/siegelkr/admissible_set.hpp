#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siegelkr/affine_weyl.hpp"

namespace skr {

// Enumeration is combinatorially explosive in g; callers can raise the
// bound explicitly where they know what they are doing.
inline constexpr int kDefaultAdmBound = 5;

// The 2^g Bruhat-maximal elements of Adm(mu): the translations t^(w(mu)),
// w in W, in canonical order.
std::vector<AffineElement> maximal_elements(int g);

// Adm(mu) with its Hasse diagram.  Elements are in canonical order
// (length, then lambda, then w); covers are (lower, upper) index pairs.
class AdmissiblePoset {
 public:
  AdmissiblePoset(int g, std::vector<AffineElement> elements,
                  std::vector<int> lengths,
                  std::vector<std::pair<int, int>> covers);

  int rank() const { return g_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<AffineElement>& elements() const { return elements_; }
  const std::vector<int>& lengths() const { return lengths_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::optional<int> index_of(const AffineElement& x) const;

  friend bool operator==(const AdmissiblePoset&, const AdmissiblePoset&);

 private:
  int g_;
  std::vector<AffineElement> elements_;
  std::vector<int> lengths_;
  std::vector<std::pair<int, int>> covers_;
};

// Downward closure of the maximal elements under Bruhat covers.  Coatoms
// are produced by single-letter deletions from a reduced word, keeping the
// products of length n-1; the permissibility scan stays available as an
// independent oracle.
AdmissiblePoset enumerate_adm(int g, int max_g = kDefaultAdmBound);

// x <= t^(w(mu)) for some w, via the Bruhat engine.  Agrees with
// is_permissible(element_to_alcove(x)).
bool is_admissible(const AffineElement& x);

// W tau intersected with Adm(mu); equal to {x in Adm(mu) : x <= t^mu}.
std::vector<AffineElement> w_tau_slice(int g, int max_g = kDefaultAdmBound);

// JSON serialization.  Elements serialize as
//   {g, lambda: [int], w: [int], length, word: [int], omega_power}
// and the poset as {g, elements, covers}.  Deterministic output.
std::string element_to_json(const AffineElement& x);
AffineElement element_from_json(const std::string& text);
std::string poset_to_json(const AdmissiblePoset& poset);
AdmissiblePoset poset_from_json(const std::string& text);

}  // namespace skr
