#include "siegelkr/root_system.hpp"

#include <map>
#include <stdexcept>

#include "siegelkr/weyl_finite.hpp"

namespace skr {

std::vector<Root> positive_roots(int g) {
  if (g < 1) throw std::invalid_argument("positive_roots: g must be >= 1");
  std::vector<Root> roots;
  roots.reserve(static_cast<size_t>(g) * static_cast<size_t>(g));
  for (int i = 1; i < g; ++i)
    for (int j = i + 1; j <= g; ++j) roots.push_back({Root::Kind::Diff, i, j});
  for (int i = 1; i < g; ++i)
    for (int j = i + 1; j <= g; ++j) roots.push_back({Root::Kind::Sum, i, j});
  for (int i = 1; i <= g; ++i) roots.push_back({Root::Kind::Long, i, 0});
  return roots;
}

const std::vector<Root>& positive_roots_cached(int g) {
  thread_local std::map<int, std::vector<Root>> cache;
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, positive_roots(g)).first;
  return it->second;
}

int root_entry(const Root& beta, int g, int k) {
  const int n = 2 * g;
  switch (beta.kind) {
    case Root::Kind::Diff:
      if (k == beta.i || k == n + 1 - beta.j) return 1;
      if (k == beta.j || k == n + 1 - beta.i) return -1;
      return 0;
    case Root::Kind::Sum:
      if (k == beta.i || k == beta.j) return 1;
      if (k == n + 1 - beta.i || k == n + 1 - beta.j) return -1;
      return 0;
    case Root::Kind::Long:
      if (k == beta.i) return 1;
      if (k == n + 1 - beta.i) return -1;
      return 0;
  }
  return 0;
}

std::vector<int> root_vector(const Root& beta, int g) {
  std::vector<int> v(static_cast<size_t>(2 * g), 0);
  for (int k = 1; k <= 2 * g; ++k) v[static_cast<size_t>(k) - 1] = root_entry(beta, g, k);
  return v;
}

long pairing(const Root& beta, const std::vector<int>& lambda, int c) {
  auto at = [&](int k) { return lambda[static_cast<size_t>(k) - 1]; };
  switch (beta.kind) {
    case Root::Kind::Diff:
      return at(beta.i) - at(beta.j);
    case Root::Kind::Sum:
      return at(beta.i) + at(beta.j) - c;
    case Root::Kind::Long:
      return 2L * at(beta.i) - c;
  }
  return 0;
}

int pullback_sign(const SignedPerm& w, const Root& beta) {
  const int g = w.rank();
  for (int k = 1; k <= 2 * g; ++k) {
    int e = root_entry(beta, g, w(k));
    if (e != 0) return e;
  }
  throw std::logic_error("pullback_sign: zero root image");
}

std::pair<Root, int> identify_root(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("identify_root: bad size");
  const int g = n / 2;
  int first = 0;
  for (int k = 1; k <= n; ++k) {
    if (v[static_cast<size_t>(k) - 1] != 0) {
      first = k;
      break;
    }
  }
  if (first == 0) throw std::invalid_argument("identify_root: zero vector");
  const int sign = v[static_cast<size_t>(first) - 1] > 0 ? 1 : -1;
  // u = sign * v is a candidate positive root vector with u(first) = +1.
  auto u = [&](int k) { return sign * v[static_cast<size_t>(k) - 1]; };
  const int i = first;
  Root beta{Root::Kind::Long, i, 0};
  if (i <= g) {
    int second = 0;
    for (int k = i + 1; k <= n; ++k) {
      if (u(k) != 0) {
        second = k;
        break;
      }
    }
    if (second == 0) throw std::invalid_argument("identify_root: not a root");
    if (second == n + 1 - i) {
      beta = Root{Root::Kind::Long, i, 0};
    } else if (second <= g) {
      beta = Root{u(second) > 0 ? Root::Kind::Sum : Root::Kind::Diff, i, second};
    } else {
      throw std::invalid_argument("identify_root: not a root");
    }
  } else {
    throw std::invalid_argument("identify_root: not a root");
  }
  std::vector<int> scaled(v);
  for (auto& e : scaled) e *= sign;
  if (root_vector(beta, g) != scaled)
    throw std::invalid_argument("identify_root: not a root");
  return {beta, sign};
}

std::pair<Root, int> apply(const SignedPerm& w, const Root& beta) {
  const int g = w.rank();
  std::vector<int> out(static_cast<size_t>(2 * g), 0);
  // (w.beta)(w(k)) = beta(k)
  for (int k = 1; k <= 2 * g; ++k)
    out[static_cast<size_t>(w(k)) - 1] = root_entry(beta, g, k);
  return identify_root(out);
}

}  // namespace skr
