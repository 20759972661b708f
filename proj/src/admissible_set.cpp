#include "siegelkr/admissible_set.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "siegelkr/alcove_geometry.hpp"

namespace skr {

namespace {

void check_rank(int g) {
  if (g < 1) throw std::invalid_argument("rank g must be >= 1");
}

// Canonical poset order: length, then translation part, then finite part.
bool canonical_less(int la, const AffineElement& a, int lb,
                    const AffineElement& b) {
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

std::vector<AffineElement> maximal_elements(int g) {
  check_rank(g);
  // The W-orbit of mu consists of the 0/1 vectors picking one of lambda(i),
  // lambda(2g+1-i) = 1 from each pair.
  std::vector<AffineElement> out;
  out.reserve(1u << g);
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> lambda(static_cast<size_t>(2 * g), 0);
    for (int i = 1; i <= g; ++i) {
      if ((mask >> (i - 1)) & 1u)
        lambda[static_cast<size_t>(2 * g - i)] = 1;
      else
        lambda[static_cast<size_t>(i) - 1] = 1;
    }
    out.push_back(AffineElement::translation(TranslationVector(g, std::move(lambda))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdmissiblePoset::AdmissiblePoset(int g, std::vector<AffineElement> elements,
                                 std::vector<int> lengths,
                                 std::vector<std::pair<int, int>> covers)
    : g_(g),
      elements_(std::move(elements)),
      lengths_(std::move(lengths)),
      covers_(std::move(covers)) {
  if (elements_.size() != lengths_.size())
    throw std::invalid_argument("AdmissiblePoset: size mismatch");
}

std::optional<int> AdmissiblePoset::index_of(const AffineElement& x) const {
  for (size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k] == x) return static_cast<int>(k);
  return std::nullopt;
}

bool operator==(const AdmissiblePoset& a, const AdmissiblePoset& b) {
  return a.g_ == b.g_ && a.elements_ == b.elements_ &&
         a.lengths_ == b.lengths_ && a.covers_ == b.covers_;
}

AdmissiblePoset enumerate_adm(int g, int max_g) {
  check_rank(g);
  if (g > max_g)
    throw std::invalid_argument(
        "enumerate_adm: rank exceeds the configured bound (override to raise)");

  // Downward closure from the 2^g maxima.  The coatoms of x are the products
  // of the single-letter deletions from a reduced word of x that come out one
  // shorter; collecting them yields the Hasse diagram as a byproduct.
  std::map<AffineElement, int> index;
  std::vector<AffineElement> elems;
  std::vector<int> lens;
  std::deque<int> queue;
  auto intern = [&](const AffineElement& x, int len) {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(elems.size());
    index.emplace(x, id);
    elems.push_back(x);
    lens.push_back(len);
    queue.push_back(id);
    return id;
  };

  for (const AffineElement& m : maximal_elements(g)) intern(m, im_length(m));

  std::set<std::pair<int, int>> covers;
  while (!queue.empty()) {
    int xid = queue.front();
    queue.pop_front();
    const AffineElement x = elems[static_cast<size_t>(xid)];
    const int n = lens[static_cast<size_t>(xid)];
    ReducedWord rw = reduced_word(x);
    for (size_t d = 0; d < rw.letters.size(); ++d) {
      std::vector<int> shorter;
      shorter.reserve(rw.letters.size() - 1);
      for (size_t k = 0; k < rw.letters.size(); ++k)
        if (k != d) shorter.push_back(rw.letters[k]);
      AffineElement y = word_to_element(shorter, rw.omega_power, g);
      if (im_length(y) != n - 1) continue;
      int yid = intern(y, n - 1);
      covers.emplace(yid, xid);
    }
  }

  // Re-index canonically.
  std::vector<int> order(elems.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_less(lens[static_cast<size_t>(a)], elems[static_cast<size_t>(a)],
                          lens[static_cast<size_t>(b)], elems[static_cast<size_t>(b)]);
  });
  std::vector<int> place(elems.size());
  for (size_t k = 0; k < order.size(); ++k)
    place[static_cast<size_t>(order[k])] = static_cast<int>(k);

  std::vector<AffineElement> sorted_elems;
  std::vector<int> sorted_lens;
  sorted_elems.reserve(elems.size());
  sorted_lens.reserve(elems.size());
  for (int id : order) {
    sorted_elems.push_back(elems[static_cast<size_t>(id)]);
    sorted_lens.push_back(lens[static_cast<size_t>(id)]);
  }
  std::vector<std::pair<int, int>> sorted_covers;
  sorted_covers.reserve(covers.size());
  for (const auto& [lo, hi] : covers)
    sorted_covers.emplace_back(place[static_cast<size_t>(lo)],
                               place[static_cast<size_t>(hi)]);
  std::sort(sorted_covers.begin(), sorted_covers.end());
  return AdmissiblePoset(g, std::move(sorted_elems), std::move(sorted_lens),
                         std::move(sorted_covers));
}

bool is_admissible(const AffineElement& x) {
  if (x.omega_power() != 1) return false;
  for (const AffineElement& m : maximal_elements(x.rank()))
    if (bruhat_leq(x, m)) return true;
  return false;
}

std::vector<AffineElement> w_tau_slice(int g, int max_g) {
  AdmissiblePoset poset = enumerate_adm(g, max_g);
  const AffineElement tau_inv = tau(g).inverse();
  std::vector<AffineElement> out;
  for (const AffineElement& x : poset.elements()) {
    AffineElement u = x * tau_inv;
    if (u.translation_part() == TranslationVector::zero(g)) out.push_back(x);
  }
  return out;
}

namespace {

nlohmann::json element_json(const AffineElement& x) {
  ReducedWord rw = reduced_word(x);
  nlohmann::json j;
  j["g"] = x.rank();
  j["lambda"] = x.translation_part().entries();
  j["w"] = x.finite_part().one_line();
  j["length"] = im_length(x);
  j["word"] = rw.letters;
  j["omega_power"] = rw.omega_power;
  return j;
}

AffineElement element_from(const nlohmann::json& j) {
  int g = j.at("g").get<int>();
  AffineElement x(TranslationVector(g, j.at("lambda").get<std::vector<int>>()),
                  SignedPerm(g, j.at("w").get<std::vector<int>>()));
  // The derived fields are redundant; cross-check them when present.
  if (j.contains("word")) {
    AffineElement y = word_to_element(j.at("word").get<std::vector<int>>(),
                                      j.at("omega_power").get<int>(), g);
    if (!(y == x))
      throw std::invalid_argument("element_from_json: word does not match element");
  }
  if (j.contains("length") && j.at("length").get<int>() != im_length(x))
    throw std::invalid_argument("element_from_json: length does not match element");
  return x;
}

}  // namespace

std::string element_to_json(const AffineElement& x) {
  return element_json(x).dump();
}

AffineElement element_from_json(const std::string& text) {
  return element_from(nlohmann::json::parse(text));
}

std::string poset_to_json(const AdmissiblePoset& poset) {
  nlohmann::json j;
  j["g"] = poset.rank();
  j["elements"] = nlohmann::json::array();
  for (const AffineElement& x : poset.elements())
    j["elements"].push_back(element_json(x));
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : poset.covers())
    j["covers"].push_back(nlohmann::json::array({lo, hi}));
  return j.dump(2);
}

AdmissiblePoset poset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int g = j.at("g").get<int>();
  std::vector<AffineElement> elems;
  std::vector<int> lens;
  for (const auto& je : j.at("elements")) {
    elems.push_back(element_from(je));
    lens.push_back(im_length(elems.back()));
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& jc : j.at("covers"))
    covers.emplace_back(jc.at(0).get<int>(), jc.at(1).get<int>());
  return AdmissiblePoset(g, std::move(elems), std::move(lens), std::move(covers));
}

}  // namespace skr
