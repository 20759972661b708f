#include "siegelkr/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skr {

namespace {

void check_rank(int g) {
  if (g < 1) throw std::invalid_argument("rank g must be >= 1");
}

}  // namespace

TranslationVector::TranslationVector(int g, std::vector<int> entries)
    : g_(g), entries_(std::move(entries)) {
  check_rank(g);
  if (static_cast<int>(entries_.size()) != 2 * g)
    throw std::invalid_argument("TranslationVector: needs 2g entries");
  const int c = entries_.front() + entries_.back();
  for (int i = 1; i <= g; ++i)
    if ((*this)(i) + (*this)(2 * g + 1 - i) != c)
      throw std::invalid_argument(
          "TranslationVector: lambda(i) + lambda(2g+1-i) must be constant");
}

TranslationVector TranslationVector::zero(int g) {
  check_rank(g);
  return TranslationVector(g, std::vector<int>(static_cast<size_t>(2 * g), 0));
}

TranslationVector TranslationVector::mu(int g) {
  check_rank(g);
  std::vector<int> e(static_cast<size_t>(2 * g), 0);
  for (int i = 0; i < g; ++i) e[static_cast<size_t>(i)] = 1;
  return TranslationVector(g, std::move(e));
}

int TranslationVector::similitude() const {
  return entries_.front() + entries_.back();
}

TranslationVector TranslationVector::permuted_by(const SignedPerm& w) const {
  if (w.rank() != g_)
    throw std::invalid_argument("TranslationVector: rank mismatch");
  std::vector<int> out(entries_.size());
  for (int i = 1; i <= 2 * g_; ++i)
    out[static_cast<size_t>(w(i)) - 1] = (*this)(i);
  return TranslationVector(g_, std::move(out));
}

TranslationVector operator+(const TranslationVector& a,
                            const TranslationVector& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("TranslationVector: rank mismatch");
  std::vector<int> out(a.entries_.size());
  for (size_t k = 0; k < out.size(); ++k) out[k] = a.entries_[k] + b.entries_[k];
  return TranslationVector(a.rank(), std::move(out));
}

TranslationVector operator-(const TranslationVector& a) {
  std::vector<int> out(a.entries_.size());
  for (size_t k = 0; k < out.size(); ++k) out[k] = -a.entries_[k];
  return TranslationVector(a.rank(), std::move(out));
}

AffineElement::AffineElement(TranslationVector lambda, SignedPerm w)
    : lambda_(std::move(lambda)), w_(std::move(w)) {
  if (lambda_.rank() != w_.rank())
    throw std::invalid_argument("AffineElement: rank mismatch");
}

AffineElement AffineElement::identity(int g) {
  return AffineElement(TranslationVector::zero(g), SignedPerm(g));
}

AffineElement AffineElement::translation(const TranslationVector& lambda) {
  return AffineElement(lambda, SignedPerm(lambda.rank()));
}

AffineElement AffineElement::from_finite(const SignedPerm& w) {
  return AffineElement(TranslationVector::zero(w.rank()), w);
}

AffineElement AffineElement::inverse() const {
  // (t^lambda w)^{-1} = t^(-w^{-1}.lambda) w^{-1}
  SignedPerm winv = w_.inverse();
  TranslationVector lambda = -(lambda_.permuted_by(winv));
  return AffineElement(std::move(lambda), std::move(winv));
}

AffineElement operator*(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("AffineElement: rank mismatch in product");
  return AffineElement(x.lambda_ + y.lambda_.permuted_by(x.w_), x.w_ * y.w_);
}

namespace {

AffineElement build_simple_affine(int i, int g) {
  if (i >= 1) return AffineElement::from_finite(simple_reflection(i, g));
  std::vector<int> lambda(static_cast<size_t>(2 * g), 0);
  lambda.front() = -1;
  lambda.back() = 1;
  std::vector<int> m(static_cast<size_t>(2 * g));
  for (int k = 1; k <= 2 * g; ++k) m[static_cast<size_t>(k) - 1] = k;
  std::swap(m.front(), m.back());
  return AffineElement(TranslationVector(g, std::move(lambda)),
                       SignedPerm(g, std::move(m)));
}

const AffineElement& simple_affine_cached(int i, int g) {
  thread_local std::map<int, std::vector<AffineElement>> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    std::vector<AffineElement> gens;
    gens.reserve(static_cast<size_t>(g) + 1);
    for (int k = 0; k <= g; ++k) gens.push_back(build_simple_affine(k, g));
    it = cache.emplace(g, std::move(gens)).first;
  }
  return it->second[static_cast<size_t>(i)];
}

}  // namespace

AffineElement simple_affine(int i, int g) {
  check_rank(g);
  if (i < 0 || i > g)
    throw std::invalid_argument("simple_affine: index must be in 0..g");
  return simple_affine_cached(i, g);
}

AffineElement tau(int g) {
  check_rank(g);
  SignedPerm we = longest_final(g);
  TranslationVector lambda = TranslationVector::mu(g).permuted_by(we);
  return AffineElement(std::move(lambda), std::move(we));
}

AffineElement tau_power(int g, int k) {
  AffineElement t = k >= 0 ? tau(g) : tau(g).inverse();
  AffineElement acc = AffineElement::identity(g);
  for (int n = std::abs(k); n > 0; --n) acc = acc * t;
  return acc;
}

std::pair<SignedPerm, TranslationVector> decompose_right(
    const AffineElement& x) {
  SignedPerm winv = x.finite_part().inverse();
  return {x.finite_part(), x.translation_part().permuted_by(winv)};
}

long pairing(const Root& beta, const TranslationVector& lambda) {
  return pairing(beta, lambda.entries(), lambda.similitude());
}

int im_length(const AffineElement& x) {
  const TranslationVector& lambda = x.translation_part();
  const SignedPerm& w = x.finite_part();
  long len = 0;
  for (const Root& beta : positive_roots_cached(x.rank())) {
    long p = pairing(beta, lambda);
    if (pullback_sign(w, beta) > 0)
      len += std::labs(p);
    else
      len += std::labs(p + 1);
  }
  return static_cast<int>(len);
}

bool left_descent(int i, const AffineElement& x) {
  return im_length(simple_affine(i, x.rank()) * x) < im_length(x);
}

ReducedWord reduced_word(const AffineElement& x) {
  const int g = x.rank();
  ReducedWord out;
  AffineElement cur = x;
  int len = im_length(cur);
  out.letters.reserve(static_cast<size_t>(len));
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= g; ++i) {
      AffineElement next = simple_affine(i, g) * cur;
      int ln = im_length(next);
      if (ln < len) {
        out.letters.push_back(i);
        cur = std::move(next);
        len = ln;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("reduced_word: positive-length element has no descent");
  }
  out.omega_power = cur.omega_power();
  if (!(cur == tau_power(g, out.omega_power)))
    throw std::logic_error("reduced_word: length-zero residue is not a tau power");
  return out;
}

AffineElement word_to_element(const std::vector<int>& letters, int omega_power,
                              int g) {
  AffineElement acc = AffineElement::identity(g);
  for (int i : letters) acc = acc * simple_affine(i, g);
  return acc * tau_power(g, omega_power);
}

bool bruhat_leq(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (x.omega_power() != y.omega_power()) return false;
  const int g = x.rank();
  AffineElement u = x, v = y;
  int lu = im_length(u), lv = im_length(v);
  // Standard lifting recursion; each step strips one left descent from the
  // upper element, so this is a plain loop.
  while (true) {
    if (lu > lv) return false;
    if (u == v) return true;
    if (lv == 0) return false;
    int s = -1;
    AffineElement sv = v;
    for (int i = 0; i <= g; ++i) {
      AffineElement cand = simple_affine(i, g) * v;
      if (im_length(cand) < lv) {
        s = i;
        sv = std::move(cand);
        break;
      }
    }
    if (s < 0) throw std::logic_error("bruhat_leq: no descent found");
    AffineElement su = simple_affine(s, g) * u;
    if (im_length(su) < lu) {
      u = std::move(su);
      --lu;
    }
    v = std::move(sv);
    --lv;
  }
}

AffineElement longest_parabolic_affine(const std::vector<int>& generators,
                                       int g) {
  check_rank(g);
  for (int i : generators)
    if (i < 0 || i > g)
      throw std::invalid_argument("longest_parabolic_affine: bad generator index");
  // Greedy ascent; a finite parabolic of W_a(C~_g) has its longest element of
  // length at most g^2, so anything exceeding that signals non-finiteness.
  const int bound = g * g + 1;
  AffineElement x = AffineElement::identity(g);
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : generators) {
      AffineElement y = simple_affine(i, g) * x;
      int ly = im_length(y);
      if (ly > len) {
        x = std::move(y);
        len = ly;
        grew = true;
        break;
      }
    }
    if (len > bound)
      throw std::invalid_argument("longest_parabolic_affine: parabolic is not finite");
  }
  return x;
}

std::vector<AffineElement> parabolic_subgroup(const std::vector<int>& generators,
                                              int g, std::size_t bound) {
  check_rank(g);
  for (int i : generators)
    if (i < 0 || i > g)
      throw std::invalid_argument("parabolic_subgroup: bad generator index");
  std::set<AffineElement> seen;
  std::vector<AffineElement> queue;
  seen.insert(AffineElement::identity(g));
  queue.push_back(AffineElement::identity(g));
  while (!queue.empty()) {
    AffineElement x = std::move(queue.back());
    queue.pop_back();
    for (int i : generators) {
      AffineElement next = x * simple_affine(i, g);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw std::invalid_argument("parabolic_subgroup: bound exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return std::vector<AffineElement>(seen.begin(), seen.end());
}

std::string to_string(const AffineElement& x) {
  std::ostringstream os;
  os << "t^(";
  for (int i = 1; i <= 2 * x.rank(); ++i) {
    if (i > 1) os << ',';
    os << x.translation_part()(i);
  }
  os << ")*" << to_string(x.finite_part());
  return os.str();
}

}  // namespace skr
