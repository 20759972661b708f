#include "siegelkr/kr_strata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace skr {

namespace {

void require_admissible(const AffineElement& x, const char* who) {
  if (!is_admissible(x))
    throw std::invalid_argument(std::string(who) + ": element is not admissible");
}

std::vector<int> support_letters(const AffineElement& x) {
  AffineElement u = x * tau_power(x.rank(), -x.omega_power());
  ReducedWord rw = reduced_word(u);
  std::set<int> letters(rw.letters.begin(), rw.letters.end());
#ifndef NDEBUG
  {
    // The support does not depend on the chosen reduced word; double-check
    // with a largest-descent-first word.
    AffineElement cur = u;
    std::set<int> other;
    int len = im_length(cur);
    while (len > 0) {
      for (int i = x.rank(); i >= 0; --i) {
        AffineElement next = simple_affine(i, x.rank()) * cur;
        int ln = im_length(next);
        if (ln < len) {
          other.insert(i);
          cur = std::move(next);
          len = ln;
          break;
        }
      }
    }
    if (other != letters)
      throw std::logic_error("support: reduced-word strategies disagree");
  }
#endif
  return std::vector<int>(letters.begin(), letters.end());
}

}  // namespace

int prank(const AffineElement& x) {
  require_admissible(x, "prank");
  const SignedPerm& w = x.finite_part();
  int count = 0;
  for (int i = 1; i <= x.rank(); ++i)
    if (w(i) == i) ++count;
  return count;
}

std::vector<int> support(const AffineElement& x) {
  require_admissible(x, "support");
  return support_letters(x);
}

bool is_superspecial(const AffineElement& x) {
  require_admissible(x, "is_superspecial");
  std::vector<int> s = support_letters(x);
  auto in_support = [&](int i) {
    return std::binary_search(s.begin(), s.end(), i);
  };
  const int g = x.rank();
  for (int i = 0; i <= g / 2; ++i)
    if (!in_support(i) && !in_support(g - i)) return true;
  return false;
}

bool non_superspecial_criterion(const AffineElement& x) {
  require_admissible(x, "non_superspecial_criterion");
  std::vector<int> s = support_letters(x);
  auto in_support = [&](int i) {
    return std::binary_search(s.begin(), s.end(), i);
  };
  const int g = x.rank();
  for (int i = 0; i <= g / 2; ++i)
    if (!in_support(i) && !in_support(g - i)) return false;
  return true;
}

MaxSuperspecial max_superspecial(int g) {
  if (g < 1) throw std::invalid_argument("max_superspecial: g must be >= 1");
  std::vector<int> gens;
  if (g % 2 == 0) {
    for (int i = 0; i <= g; ++i)
      if (i != g / 2) gens.push_back(i);
  } else {
    for (int i = 1; i < g; ++i) gens.push_back(i);
  }
  AffineElement w = longest_parabolic_affine(gens, g);
  AffineElement x = w * tau(g);
  return MaxSuperspecial{x, im_length(x)};
}

std::pair<int, int> supersingular_dim_bounds(int g) {
  if (g < 1)
    throw std::invalid_argument("supersingular_dim_bounds: g must be >= 1");
  if (g % 2 == 0) return {g * g / 2, g * g / 2};
  return {g * (g - 1) / 2, (g * g - 1) / 2};
}

std::vector<AffineElement> superspecial_elements(int g) {
  if (g < 1)
    throw std::invalid_argument("superspecial_elements: g must be >= 1");
  std::set<AffineElement> out;
  const AffineElement t = tau(g);
  for (int i = 0; i <= g / 2; ++i) {
    std::vector<int> gens;
    for (int k = 0; k <= g; ++k)
      if (k != i && k != g - i) gens.push_back(k);
    for (const AffineElement& u : parabolic_subgroup(gens, g)) {
      AffineElement x = u * t;
      if (!is_admissible(x))
        throw std::logic_error(
            "superspecial_elements: parabolic element is not admissible");
      out.insert(std::move(x));
    }
  }
  return std::vector<AffineElement>(out.begin(), out.end());
}

std::vector<AffineElement> closure(const AffineElement& x, int max_g) {
  const int g = x.rank();
  AdmissiblePoset poset = enumerate_adm(g, max_g);
  std::optional<int> start = poset.index_of(x);
  if (!start)
    throw std::invalid_argument("closure: element is not admissible");
  // Walk down the Hasse diagram.
  std::vector<std::vector<int>> down(poset.size());
  for (const auto& [lo, hi] : poset.covers())
    down[static_cast<size_t>(hi)].push_back(lo);
  std::set<int> seen{*start};
  std::vector<int> queue{*start};
  while (!queue.empty()) {
    int id = queue.back();
    queue.pop_back();
    for (int lo : down[static_cast<size_t>(id)])
      if (seen.insert(lo).second) queue.push_back(lo);
  }
  std::vector<AffineElement> out;
  out.reserve(seen.size());
  for (int id : seen) out.push_back(poset.elements()[static_cast<size_t>(id)]);
  return out;
}

std::vector<SignedPerm> es_image(const SignedPerm& w) {
  if (!is_final(w)) throw std::invalid_argument("es_image: input not final");
  return {w};
}

const std::vector<EsTableRow>& g2_es_table() {
  // Known classification for g = 2: the Ekedahl-Oort images of all 13
  // strata, with the p-rank of each stratum.  Fixed input data, displayed
  // rather than recomputed.
  static const std::vector<EsTableRow> table = {
      {{}, {"ssp"}, 0},
      {{1}, {"ssp"}, 0},
      {{0}, {"ssi"}, 0},
      {{2}, {"ssi"}, 0},
      {{0, 2}, {"ssp", "ssi"}, 0},
      {{0, 1}, {"p1"}, 1},
      {{2, 1}, {"p1"}, 1},
      {{1, 0}, {"p1"}, 1},
      {{1, 2}, {"p1"}, 1},
      {{1, 2, 0}, {"p2"}, 2},
      {{0, 1, 0}, {"p2"}, 2},
      {{2, 1, 2}, {"p2"}, 2},
      {{0, 2, 1}, {"p2"}, 2},
  };
  return table;
}

std::vector<StratumRecord> stratum_records(const AdmissiblePoset& poset) {
  const int g = poset.rank();
  std::map<AffineElement, std::vector<std::string>> es_lookup;
  if (g == 2) {
    for (const EsTableRow& row : g2_es_table())
      es_lookup.emplace(word_to_element(row.word, 1, 2), row.es);
  }
  const AffineElement tau_inv = tau(g).inverse();
  std::vector<StratumRecord> out;
  out.reserve(poset.size());
  for (size_t k = 0; k < poset.size(); ++k) {
    const AffineElement& x = poset.elements()[k];
    StratumRecord rec{x,
                      poset.lengths()[k],
                      0,
                      support_letters(x),
                      false,
                      {}};
    const SignedPerm& w = x.finite_part();
    for (int i = 1; i <= g; ++i)
      if (w(i) == i) ++rec.p_rank;
    auto in_support = [&](int i) {
      return std::binary_search(rec.support.begin(), rec.support.end(), i);
    };
    for (int i = 0; i <= g / 2; ++i)
      if (!in_support(i) && !in_support(g - i)) rec.superspecial = true;
    if (auto it = es_lookup.find(x); it != es_lookup.end()) {
      rec.es = it->second;
    } else {
      AffineElement u = x * tau_inv;
      if (u.translation_part() == TranslationVector::zero(g) &&
          is_final(u.finite_part()))
        rec.es = {to_string(u.finite_part())};
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace skr
