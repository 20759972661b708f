#include "siegelkr/weyl_finite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "siegelkr/root_system.hpp"

namespace skr {

namespace {

void check_rank(int g) {
  if (g < 1) throw std::invalid_argument("rank g must be >= 1");
}

}  // namespace

SignedPerm::SignedPerm(int g) : g_(g), map_(static_cast<size_t>(2 * g)) {
  check_rank(g);
  std::iota(map_.begin(), map_.end(), 1);
}

SignedPerm::SignedPerm(int g, std::vector<int> one_line)
    : g_(g), map_(std::move(one_line)) {
  check_rank(g);
  const int n = 2 * g;
  if (static_cast<int>(map_.size()) != n)
    throw std::invalid_argument("SignedPerm: one-line form must have 2g entries");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : map_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("SignedPerm: not a permutation of {1,...,2g}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
  for (int i = 1; i <= n; ++i) {
    if ((*this)(n + 1 - i) != n + 1 - (*this)(i))
      throw std::invalid_argument(
          "SignedPerm: centralizing condition w(2g+1-i) = 2g+1-w(i) violated");
  }
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 1; i <= 2 * g_; ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return SignedPerm(g_, std::move(inv));
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= 2 * g_; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("SignedPerm: rank mismatch in composition");
  std::vector<int> out(a.map_.size());
  for (int i = 1; i <= a.degree(); ++i) out[static_cast<size_t>(i) - 1] = a(b(i));
  return SignedPerm(a.rank(), std::move(out));
}

SignedPerm simple_reflection(int i, int g) {
  check_rank(g);
  if (i < 1 || i > g)
    throw std::invalid_argument("simple_reflection: index must be in 1..g");
  SignedPerm id(g);
  std::vector<int> m = id.one_line();
  auto swap1 = [&](int a, int b) {
    std::swap(m[static_cast<size_t>(a) - 1], m[static_cast<size_t>(b) - 1]);
  };
  if (i < g) {
    swap1(i, i + 1);
    swap1(2 * g - i, 2 * g - i + 1);
  } else {
    swap1(g, g + 1);
  }
  return SignedPerm(g, std::move(m));
}

SignedPerm longest_element(int g) {
  check_rank(g);
  std::vector<int> m(static_cast<size_t>(2 * g));
  for (int i = 1; i <= 2 * g; ++i) m[static_cast<size_t>(i) - 1] = 2 * g + 1 - i;
  return SignedPerm(g, std::move(m));
}

SignedPerm longest_final(int g) {
  check_rank(g);
  std::vector<int> m(static_cast<size_t>(2 * g));
  for (int i = 1; i <= g; ++i) {
    m[static_cast<size_t>(i) - 1] = g + i;
    m[static_cast<size_t>(g + i) - 1] = i;
  }
  return SignedPerm(g, std::move(m));
}

int finite_length(const SignedPerm& w) {
  int len = 0;
  for (const Root& beta : positive_roots_cached(w.rank()))
    if (pullback_sign(w, beta) < 0) ++len;
  return len;
}

std::vector<int> finite_reduced_word(const SignedPerm& w) {
  std::vector<int> word;
  SignedPerm x = w;
  int len = finite_length(x);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= x.rank(); ++i) {
      SignedPerm y = simple_reflection(i, x.rank()) * x;
      int ly = finite_length(y);
      if (ly < len) {
        word.push_back(i);
        x = std::move(y);
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("finite_reduced_word: no descent");
  }
  return word;
}

SignedPerm longest_element_parabolic(const std::vector<int>& excluded, int g) {
  check_rank(g);
  std::vector<char> out(static_cast<size_t>(g) + 1, 0);
  for (int j : excluded) {
    if (j < 0 || j > g)
      throw std::invalid_argument("longest_element_parabolic: J must be within 0..g");
    out[static_cast<size_t>(j)] = 1;
  }
  if (!out[0])
    throw std::invalid_argument(
        "longest_element_parabolic: affine parabolic (generator s_0 retained)");
  std::vector<int> gens;
  for (int i = 1; i <= g; ++i)
    if (!out[static_cast<size_t>(i)]) gens.push_back(i);

  // Greedy ascent inside the (finite) parabolic; terminates at the unique
  // element all of whose parabolic generators are descents.
  SignedPerm x(g);
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : gens) {
      SignedPerm y = simple_reflection(i, g) * x;
      int ly = finite_length(y);
      if (ly > len) {
        x = std::move(y);
        len = ly;
        grew = true;
        break;
      }
    }
  }
  return x;
}

bool is_final(const SignedPerm& w) {
  for (int i = 1; i < w.rank(); ++i)
    if (w(i) >= w(i + 1)) return false;
  return true;
}

std::vector<SignedPerm> enumerate_final(int g) {
  check_rank(g);
  // A final element is determined by its image set w({1,...,g}), which picks
  // exactly one member of each pair {i, 2g+1-i}.
  std::vector<SignedPerm> out;
  out.reserve(1u << g);
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> image;
    image.reserve(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i)
      image.push_back((mask >> (i - 1)) & 1u ? 2 * g + 1 - i : i);
    std::sort(image.begin(), image.end());
    std::vector<int> m(static_cast<size_t>(2 * g));
    for (int k = 1; k <= g; ++k) {
      m[static_cast<size_t>(k) - 1] = image[static_cast<size_t>(k) - 1];
      m[static_cast<size_t>(2 * g + 1 - k) - 1] =
          2 * g + 1 - image[static_cast<size_t>(k) - 1];
    }
    out.emplace_back(g, std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const SignedPerm& a, const SignedPerm& b) {
    int la = finite_length(a), lb = finite_length(b);
    if (la != lb) return la < lb;
    return a.one_line() < b.one_line();
  });
  return out;
}

std::vector<SignedPerm> enumerate_weyl(int g) {
  check_rank(g);
  std::vector<int> sigma(static_cast<size_t>(g));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> m(static_cast<size_t>(2 * g));
      for (int i = 1; i <= g; ++i) {
        int target = sigma[static_cast<size_t>(i) - 1];
        if ((mask >> (i - 1)) & 1u) target = 2 * g + 1 - target;
        m[static_cast<size_t>(i) - 1] = target;
        m[static_cast<size_t>(2 * g - i)] = 2 * g + 1 - target;
      }
      out.emplace_back(g, std::move(m));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const SignedPerm& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) os << ',';
    os << w(i);
  }
  os << ')';
  return os.str();
}

int ElementarySequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0);
}

ElementarySequence::ElementarySequence(int g, std::vector<int> values)
    : g_(g), values_(std::move(values)) {
  check_rank(g);
  if (static_cast<int>(values_.size()) != g)
    throw std::invalid_argument("ElementarySequence: needs g values");
  int prev = 0;  // phi(0) = 0
  for (int v : values_) {
    if (v < prev || v > prev + 1)
      throw std::invalid_argument(
          "ElementarySequence: requires phi(i) <= phi(i+1) <= phi(i)+1");
    prev = v;
  }
}

ElementarySequence final_to_nu(const SignedPerm& w) {
  if (!is_final(w)) throw std::invalid_argument("final_to_nu: input not final");
  const int g = w.rank();
  std::vector<int> nu(static_cast<size_t>(g));
  for (int i = 1; i <= g; ++i) {
    int count = 0;
    for (int a = 1; a <= g; ++a)
      if (w(a) <= i) ++count;
    nu[static_cast<size_t>(i) - 1] = i - count;
  }
  return ElementarySequence(g, std::move(nu));
}

ElementarySequence mw_to_phi(const SignedPerm& w) {
  const int g = w.rank();
  std::vector<int> phi(static_cast<size_t>(g));
  int count = 0;
  for (int i = 1; i <= g; ++i) {
    if (w(i) > g) ++count;
    phi[static_cast<size_t>(i) - 1] = count;
  }
  return ElementarySequence(g, std::move(phi));
}

int eo_dimension(const SignedPerm& w) {
  if (!is_final(w)) throw std::invalid_argument("eo_dimension: input not final");
  return finite_length(w);
}

int eo_prank(const SignedPerm& w) {
  if (!is_final(w)) throw std::invalid_argument("eo_prank: input not final");
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i)
    if (w(i) == w.rank() + i) ++count;
  return count;
}

bool eo_supersingular(const SignedPerm& w) {
  if (!is_final(w))
    throw std::invalid_argument("eo_supersingular: input not final");
  const int g = w.rank();
  for (int i = 1; i <= g - g / 2; ++i)
    if (w(i) != i) return false;
  return true;
}

}  // namespace skr
