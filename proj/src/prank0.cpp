#include "siegelkr/prank0.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skr {

namespace {

void check_rank(int g) {
  if (g < 1) throw std::invalid_argument("rank g must be >= 1");
}

}  // namespace

SgPerm::SgPerm(int g) : g_(g), map_(static_cast<size_t>(g)) {
  check_rank(g);
  std::iota(map_.begin(), map_.end(), 1);
}

SgPerm::SgPerm(int g, std::vector<int> one_line)
    : g_(g), map_(std::move(one_line)) {
  check_rank(g);
  if (static_cast<int>(map_.size()) != g)
    throw std::invalid_argument("SgPerm: one-line form must have g entries");
  std::vector<char> seen(static_cast<size_t>(g), 0);
  for (int v : map_) {
    if (v < 1 || v > g || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("SgPerm: not a permutation of {1,...,g}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

SgPerm SgPerm::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 1; i <= g_; ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return SgPerm(g_, std::move(inv));
}

std::vector<SgPerm> enumerate_sg(int g) {
  check_rank(g);
  std::vector<int> line(static_cast<size_t>(g));
  std::iota(line.begin(), line.end(), 1);
  std::vector<SgPerm> out;
  do {
    out.emplace_back(g, line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

int inversions(const SgPerm& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.rank(); ++i)
    for (int j = i + 1; j <= sigma.rank(); ++j)
      if (sigma(i) > sigma(j)) ++count;
  return count;
}

int fixed_point_count(const SgPerm& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.rank(); ++i)
    if (sigma(i) == i) ++count;
  return count;
}

SignVector::SignVector(int g, std::vector<int> bits)
    : g_(g), bits_(std::move(bits)) {
  check_rank(g);
  if (static_cast<int>(bits_.size()) != g)
    throw std::invalid_argument("SignVector: needs g bits");
  for (int b : bits_)
    if (b != 0 && b != 1)
      throw std::invalid_argument("SignVector: entries must be 0 or 1");
}

bool sign_leq(const SignVector& v_prime, const SignVector& v) {
  if (v_prime.rank() != v.rank())
    throw std::invalid_argument("sign_leq: rank mismatch");
  for (int i = 1; i <= v.rank(); ++i)
    if (v_prime(i) > v(i)) return false;
  return true;
}

SignedPerm embed(const SignVector& v, const SgPerm& sigma) {
  if (v.rank() != sigma.rank())
    throw std::invalid_argument("embed: rank mismatch");
  const int g = sigma.rank();
  const int n = 2 * g;
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 1; i <= g; ++i) {
    int target = sigma(i);
    if (v(target) == 1) target = n + 1 - target;
    m[static_cast<size_t>(i) - 1] = target;
    m[static_cast<size_t>(n - i)] = n + 1 - target;
  }
  return SignedPerm(g, std::move(m));
}

std::vector<SignedPerm> fixed_point_free_elements(int g, int max_g) {
  check_rank(g);
  if (g > max_g)
    throw std::invalid_argument(
        "fixed_point_free_elements: rank exceeds the configured bound");
  std::vector<SignedPerm> out;
  for (const SignedPerm& w : enumerate_weyl(g)) {
    bool fpf = true;
    for (int i = 1; i <= g && fpf; ++i)
      if (w(i) == i) fpf = false;
    if (fpf) out.push_back(w);
  }
  return out;
}

AffineElement lift_to_adm0(const SignedPerm& w) {
  const int g = w.rank();
  const int n = 2 * g;
  SignedPerm winv = w.inverse();
  std::vector<int> lambda(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (winv(i) == i)
      throw std::invalid_argument("lift_to_adm0: element has a fixed point");
    lambda[static_cast<size_t>(i) - 1] = winv(i) < i ? 1 : 0;
  }
  return AffineElement(TranslationVector(g, std::move(lambda)), w);
}

std::vector<SignVector> sigma_admissible_vectors(const SgPerm& sigma) {
  const int g = sigma.rank();
  std::vector<int> free_positions;
  for (int i = 1; i <= g; ++i)
    if (sigma(i) != i) free_positions.push_back(i);
  std::vector<SignVector> out;
  out.reserve(1u << free_positions.size());
  for (unsigned mask = 0; mask < (1u << free_positions.size()); ++mask) {
    std::vector<int> bits(static_cast<size_t>(g), 1);
    for (size_t k = 0; k < free_positions.size(); ++k)
      bits[static_cast<size_t>(free_positions[k]) - 1] =
          static_cast<int>((mask >> k) & 1u);
    out.emplace_back(g, std::move(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool sign_monotone_check(const SgPerm& sigma, const SignVector& v,
                         const SignVector& v_prime) {
  auto admissible = [&](const SignVector& s) {
    for (int i = 1; i <= sigma.rank(); ++i)
      if (sigma(i) == i && s(i) != 1) return false;
    return true;
  };
  if (!admissible(v) || !admissible(v_prime))
    throw std::invalid_argument("sign_monotone_check: vector not sigma-admissible");
  if (!sign_leq(v_prime, v))
    throw std::invalid_argument("sign_monotone_check: requires v' <= v");
  return bruhat_leq(lift_to_adm0(embed(v, sigma)),
                    lift_to_adm0(embed(v_prime, sigma)));
}

AffineElement maximal_prank0(const SgPerm& sigma) {
  const int g = sigma.rank();
  std::vector<int> bits(static_cast<size_t>(g), 0);
  for (int i = 1; i <= g; ++i)
    if (sigma(i) == i) bits[static_cast<size_t>(i) - 1] = 1;
  return lift_to_adm0(embed(SignVector(g, std::move(bits)), sigma));
}

int a_statistic(const SgPerm& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.rank(); ++i)
    for (int j = i + 1; j <= sigma.rank(); ++j)
      if (j < sigma(j) && sigma(j) < sigma(i)) ++count;
  return count;
}

int a_statistic_margin(const SgPerm& sigma) {
  int a = a_statistic(sigma);
  int a_inv = a_statistic(sigma.inverse());
  return 2 * (inversions(sigma) - 2 * (a + a_inv)) -
         (sigma.rank() - fixed_point_count(sigma));
}

PatternCounts excedance_pattern_counts(const SgPerm& sigma) {
  PatternCounts counts{0, 0, 0, 0};
  const int g = sigma.rank();
  auto a = [&](int i) { return sigma(i); };
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (i <= j && j < a(i)) {
        if (a(j) > j)
          ++counts.c1;
        else
          ++counts.c3;
      }
      if (a(i) < a(j) && a(j) <= i) {
        if (a(j) > j)
          ++counts.c2;
        else
          ++counts.c4;
      }
    }
  return counts;
}

int max_prank0_length(const SgPerm& sigma) {
  const int g = sigma.rank();
  return g * (g + 1) / 2 + 2 * a_statistic(sigma) +
         2 * a_statistic(sigma.inverse()) - inversions(sigma) -
         fixed_point_count(sigma);
}

int dim_prank0(int g) {
  check_rank(g);
  std::vector<int> line(static_cast<size_t>(g));
  std::iota(line.begin(), line.end(), 1);
  int best = 0;
  do {
    best = std::max(best, max_prank0_length(SgPerm(g, line)));
  } while (std::next_permutation(line.begin(), line.end()));
  if (best != g * g / 2)
    throw std::logic_error("dim_prank0: maximum disagrees with floor(g^2/2)");
  return best;
}

std::string to_string(const SgPerm& sigma) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= sigma.rank(); ++i) {
    if (i > 1) os << ',';
    os << sigma(i);
  }
  os << ')';
  return os.str();
}

}  // namespace skr
