#include "siegelkr/alcove_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace skr {

namespace {

void check_rank(int g) {
  if (g < 1) throw std::invalid_argument("rank g must be >= 1");
}

void check_shape(int g, const std::vector<std::vector<int>>& rows,
                 const char* who) {
  if (static_cast<int>(rows.size()) != 2 * g + 1)
    throw std::invalid_argument(std::string(who) + ": needs 2g+1 rows");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != 2 * g)
      throw std::invalid_argument(std::string(who) + ": rows need 2g entries");
}

}  // namespace

ExtendedAlcove base_alcove(int g) {
  check_rank(g);
  ExtendedAlcove a{g, {}};
  a.rows.assign(static_cast<size_t>(2 * g + 1),
                std::vector<int>(static_cast<size_t>(2 * g), 0));
  for (int i = 1; i <= 2 * g; ++i)
    for (int j = 1; j <= i; ++j) a.rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] = -1;
  return a;
}

ExtendedAlcove act(const AffineElement& x, const ExtendedAlcove& a) {
  if (x.rank() != a.g) throw std::invalid_argument("act: rank mismatch");
  check_shape(a.g, a.rows, "act");
  const SignedPerm& w = x.finite_part();
  const TranslationVector& lambda = x.translation_part();
  ExtendedAlcove out{a.g, a.rows};
  for (size_t r = 0; r < a.rows.size(); ++r) {
    for (int k = 1; k <= 2 * a.g; ++k)
      out.rows[r][static_cast<size_t>(w(k)) - 1] =
          a.rows[r][static_cast<size_t>(k) - 1] + lambda(w(k));
  }
  return out;
}

ExtendedAlcove element_to_alcove(const AffineElement& x) {
  return act(x, base_alcove(x.rank()));
}

AffineElement alcove_to_element(const ExtendedAlcove& a) {
  check_rank(a.g);
  check_shape(a.g, a.rows, "alcove_to_element");
  const int n = 2 * a.g;
  std::vector<int> w_map(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int drop = 0;
    for (int j = 1; j <= n; ++j) {
      int d = a.rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] -
              a.rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
      if (d == 0) continue;
      if (d != -1 || drop != 0)
        throw std::invalid_argument(
            "alcove_to_element: consecutive rows must differ by a single -1");
      drop = j;
    }
    if (drop == 0 || used[static_cast<size_t>(drop) - 1])
      throw std::invalid_argument("alcove_to_element: drops are not a bijection");
    used[static_cast<size_t>(drop) - 1] = 1;
    w_map[static_cast<size_t>(i) - 1] = drop;
  }
  // SignedPerm and TranslationVector constructors enforce the symplectic
  // conditions on w and lambda = row 0.
  return AffineElement(TranslationVector(a.g, a.rows.front()),
                       SignedPerm(a.g, std::move(w_map)));
}

bool is_permissible(const ExtendedAlcove& a) {
  check_rank(a.g);
  check_shape(a.g, a.rows, "is_permissible");
  ExtendedAlcove omega = base_alcove(a.g);
  for (size_t r = 0; r < a.rows.size(); ++r)
    for (size_t k = 0; k < a.rows[r].size(); ++k) {
      int d = a.rows[r][k] - omega.rows[r][k];
      if (d != 0 && d != 1) return false;
    }
  // Correct Omega-coset: the element must lie in W_a tau, i.e. row 0 must
  // have similitude 1.
  const auto& lambda = a.rows.front();
  for (int i = 1; i <= a.g; ++i)
    if (lambda[static_cast<size_t>(i) - 1] +
            lambda[static_cast<size_t>(2 * a.g - i)] != 1)
      return false;
  return true;
}

TruncatedAlcove truncate(const ExtendedAlcove& a) {
  check_rank(a.g);
  check_shape(a.g, a.rows, "truncate");
  TruncatedAlcove t{a.g, a.rows};
  for (auto& row : t.rows)
    for (auto& e : row) e = std::min(e, 0);
  return t;
}

AlcoveData recover(const TruncatedAlcove& t) {
  check_rank(t.g);
  check_shape(t.g, t.rows, "recover");
  const int n = 2 * t.g;
  std::vector<int> rho(static_cast<size_t>(n), 0);
  std::vector<int> w_map(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const auto& prev = t.rows[static_cast<size_t>(i) - 1];
    const auto& cur = t.rows[static_cast<size_t>(i)];
    int drop = 0;
    bool equal = true;
    for (int j = 1; j <= n; ++j) {
      int d = cur[static_cast<size_t>(j) - 1] - prev[static_cast<size_t>(j) - 1];
      if (d == 0) continue;
      if (d != -1 || drop != 0)
        throw std::invalid_argument(
            "recover: rows must be equal or differ by a single -1");
      drop = j;
      equal = false;
    }
    if (equal) {
      rho[static_cast<size_t>(i) - 1] = 1;  // step hidden by the truncation
    } else {
      rho[static_cast<size_t>(i) - 1] = 0;
      w_map[static_cast<size_t>(i) - 1] = drop;
    }
  }
  // Complete w: a hidden step at i has a visible mirror step at 2g+1-i.
  for (int i = 1; i <= n; ++i) {
    if (w_map[static_cast<size_t>(i) - 1] != 0) continue;
    int mirror = w_map[static_cast<size_t>(n - i)];
    if (mirror == 0)
      throw std::invalid_argument(
          "recover: both of the steps i, 2g+1-i are hidden; not a permissible source");
    w_map[static_cast<size_t>(i) - 1] = n + 1 - mirror;
  }
  std::vector<int> lambda = t.rows.back();
  for (auto& e : lambda) e += 1;
  SignedPerm w(t.g, std::move(w_map));
  TranslationVector lambda_vec(t.g, std::move(lambda));
  TranslationVector rho_vec(t.g, std::move(rho));
  if (!(lambda_vec == rho_vec.permuted_by(w)))
    throw std::invalid_argument("recover: inconsistent data (lambda != w.rho)");
  return AlcoveData{std::move(lambda_vec), std::move(rho_vec), std::move(w)};
}

SignedPerm flag_position(const TruncatedAlcove& t) {
  check_rank(t.g);
  check_shape(t.g, t.rows, "flag_position");
  const int n = 2 * t.g;
  // x'_i = the row with coordinate sum -i, for i = 0..g.
  std::vector<const std::vector<int>*> xprime(static_cast<size_t>(t.g) + 1,
                                              nullptr);
  for (const auto& row : t.rows) {
    int sum = std::accumulate(row.begin(), row.end(), 0);
    if (sum > 0 || sum < -t.g) continue;
    const std::vector<int>*& slot = xprime[static_cast<size_t>(-sum)];
    if (slot != nullptr && *slot != row)
      throw std::invalid_argument(
          "flag_position: two distinct rows share a coordinate sum");
    slot = &row;
  }
  for (const auto* p : xprime)
    if (p == nullptr)
      throw std::invalid_argument("flag_position: missing a coordinate sum in 0..-g");
  std::vector<int> v_map(static_cast<size_t>(n), 0);
  for (int i = 1; i <= t.g; ++i) {
    int pos = 0;
    for (int j = 1; j <= n; ++j) {
      int d = (*xprime[static_cast<size_t>(i)])[static_cast<size_t>(j) - 1] -
              (*xprime[static_cast<size_t>(i) - 1])[static_cast<size_t>(j) - 1];
      if (d == 0) continue;
      if (d != -1 || pos != 0)
        throw std::invalid_argument(
            "flag_position: flag rows must grow by a single -1");
      pos = j;
    }
    if (pos == 0)
      throw std::invalid_argument("flag_position: flag rows must be strictly nested");
    v_map[static_cast<size_t>(i) - 1] = pos;
    v_map[static_cast<size_t>(n - i)] = n + 1 - pos;
  }
  return SignedPerm(t.g, std::move(v_map));  // validates bijectivity
}

SignedPerm w_rho(const TranslationVector& rho) {
  const int g = rho.rank();
  const int n = 2 * g;
  for (int i = 1; i <= n; ++i)
    if (rho(i) != 0 && rho(i) != 1)
      throw std::invalid_argument("w_rho: rho must be a 0/1 vector");
  if (rho.similitude() != 1)
    throw std::invalid_argument("w_rho: rho is not in the W-orbit of mu");
  // w_0(rho) is the reversal of rho; a final element w satisfies
  // w(mu) = target iff w({1..g}) = positions of the 1s in target.
  std::vector<int> image;
  image.reserve(static_cast<size_t>(g));
  for (int j = 1; j <= n; ++j)
    if (rho(n + 1 - j) == 1) image.push_back(j);
  if (static_cast<int>(image.size()) != g)
    throw std::invalid_argument("w_rho: rho is not in the W-orbit of mu");
  std::vector<int> m(static_cast<size_t>(n));
  for (int k = 1; k <= g; ++k) {
    m[static_cast<size_t>(k) - 1] = image[static_cast<size_t>(k) - 1];
    m[static_cast<size_t>(n - k)] = n + 1 - image[static_cast<size_t>(k) - 1];
  }
  return SignedPerm(g, std::move(m));
}

std::string alcove_to_json(const ExtendedAlcove& a) {
  check_rank(a.g);
  check_shape(a.g, a.rows, "alcove_to_json");
  return nlohmann::json(a.rows).dump();
}

ExtendedAlcove alcove_from_json(const std::string& text) {
  auto rows = nlohmann::json::parse(text).get<std::vector<std::vector<int>>>();
  if (rows.empty() || rows.size() % 2 == 0)
    throw std::invalid_argument("alcove_from_json: needs 2g+1 rows");
  ExtendedAlcove a{static_cast<int>(rows.size()) / 2, std::move(rows)};
  check_shape(a.g, a.rows, "alcove_from_json");
  return a;
}

}  // namespace skr
