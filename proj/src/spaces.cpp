#include "remoteness/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rem {

namespace {
constexpr std::size_t kMaxSpaceSize = 3628800;  // 10!
}

std::string FiniteMetricSpace::point_name(std::size_t v) const { return std::to_string(v); }

long long FiniteMetricSpace::min_ball_volume(int t) const {
  const std::size_t n = size();
  long long best = -1;
  for (std::size_t v = 0; v < n; ++v) {
    long long vol = 0;
    for (std::size_t u = 0; u < n; ++u)
      if (distance(u, v) <= t) ++vol;
    if (best < 0 || vol < best) best = vol;
  }
  return best;
}

long long FiniteMetricSpace::max_ball_volume(int t) const {
  const std::size_t n = size();
  long long best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    long long vol = 0;
    for (std::size_t u = 0; u < n; ++u)
      if (distance(u, v) <= t) ++vol;
    best = std::max(best, vol);
  }
  return best;
}

int space_radius(const FiniteMetricSpace& space) {
  if (auto r = space.known_radius()) return *r;
  const std::size_t n = space.size();
  int best = -1;
  for (std::size_t v = 0; v < n; ++v) {
    int ecc = 0;
    for (std::size_t u = 0; u < n; ++u) ecc = std::max(ecc, space.distance(u, v));
    if (best < 0 || ecc < best) best = ecc;
  }
  return best;
}

int space_diameter(const FiniteMetricSpace& space) {
  if (auto d = space.known_diameter()) return *d;
  const std::size_t n = space.size();
  int best = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = v + 1; u < n; ++u) best = std::max(best, space.distance(u, v));
  return best;
}

SymmetricGroupSpace::SymmetricGroupSpace(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  factorial_.assign(static_cast<std::size_t>(degree) + 1, 1);
  for (int i = 1; i <= degree; ++i)
    factorial_[static_cast<std::size_t>(i)] = factorial_[static_cast<std::size_t>(i - 1)] * i;
  const long long total = factorial_[static_cast<std::size_t>(degree)];
  if (static_cast<std::size_t>(total) > kMaxSpaceSize)
    throw std::invalid_argument("symmetric group of degree " + std::to_string(degree) +
                                " exceeds the search budget");
  count_ = static_cast<std::size_t>(total);

  table_.resize(count_ * static_cast<std::size_t>(degree_));
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(degree_));
  std::iota(cur.begin(), cur.end(), static_cast<std::uint8_t>(0));
  std::size_t row = 0;
  do {
    std::copy(cur.begin(), cur.end(), table_.begin() + static_cast<std::ptrdiff_t>(row * cur.size()));
    ++row;
  } while (std::next_permutation(cur.begin(), cur.end()));
}

int SymmetricGroupSpace::distance(std::size_t u, std::size_t v) const {
  const std::uint8_t* a = word(u);
  const std::uint8_t* b = word(v);
  int d = 0;
  for (int i = 0; i < degree_; ++i)
    d += (a[i] != b[i]);
  return d;
}

std::string SymmetricGroupSpace::point_name(std::size_t v) const { return perm_at(v).str(); }

long long SymmetricGroupSpace::min_ball_volume(int t) const {
  long long vol = 0;
  for (int i = 0; i <= std::min(t, degree_); ++i) vol += binomial(degree_, i) * derangement_count(i);
  return vol;
}

long long SymmetricGroupSpace::max_ball_volume(int t) const { return min_ball_volume(t); }

std::optional<int> SymmetricGroupSpace::known_radius() const {
  return degree_ >= 2 ? degree_ : 0;
}

std::optional<int> SymmetricGroupSpace::known_diameter() const {
  return degree_ >= 2 ? degree_ : 0;
}

Perm SymmetricGroupSpace::perm_at(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("point index out of range");
  const std::uint8_t* w = word(index);
  std::vector<int> img(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) img[static_cast<std::size_t>(i)] = w[i];
  return Perm(std::move(img));
}

std::size_t SymmetricGroupSpace::index_of(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in index_of");
  // Lehmer code: rank in lexicographic order.
  long long rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(degree_), false);
  for (int i = 0; i < degree_; ++i) {
    int smaller = 0;
    for (int v = 0; v < p[i]; ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    rank += smaller * factorial_[static_cast<std::size_t>(degree_ - 1 - i)];
    used[static_cast<std::size_t>(p[i])] = true;
  }
  return static_cast<std::size_t>(rank);
}

HammingGraphSpace::HammingGraphSpace(int length, int alphabet)
    : length_(length), alphabet_(alphabet) {
  if (length < 1 || alphabet < 2)
    throw std::invalid_argument("Hamming graph needs length >= 1 and alphabet >= 2");
  std::size_t total = 1;
  for (int i = 0; i < length; ++i) {
    total *= static_cast<std::size_t>(alphabet);
    if (total > kMaxSpaceSize)
      throw std::invalid_argument("Hamming graph exceeds the search budget");
  }
  count_ = total;
}

int HammingGraphSpace::distance(std::size_t u, std::size_t v) const {
  int d = 0;
  for (int i = 0; i < length_; ++i) {
    if (u % static_cast<std::size_t>(alphabet_) != v % static_cast<std::size_t>(alphabet_)) ++d;
    u /= static_cast<std::size_t>(alphabet_);
    v /= static_cast<std::size_t>(alphabet_);
  }
  return d;
}

std::string HammingGraphSpace::point_name(std::size_t v) const {
  const auto w = word_at(v);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

long long HammingGraphSpace::min_ball_volume(int t) const {
  long long vol = 0;
  long long pw = 1;
  for (int i = 0; i <= std::min(t, length_); ++i) {
    vol += binomial(length_, i) * pw;
    pw *= (alphabet_ - 1);
  }
  return vol;
}

long long HammingGraphSpace::max_ball_volume(int t) const { return min_ball_volume(t); }

std::vector<int> HammingGraphSpace::word_at(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("point index out of range");
  std::vector<int> w(static_cast<std::size_t>(length_));
  for (int i = length_ - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(alphabet_));
    index /= static_cast<std::size_t>(alphabet_);
  }
  return w;
}

std::size_t HammingGraphSpace::index_of(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != length_)
    throw std::invalid_argument("word length mismatch in index_of");
  std::size_t idx = 0;
  for (int v : word) {
    if (v < 0 || v >= alphabet_) throw std::invalid_argument("word symbol out of range");
    idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(v);
  }
  return idx;
}

long long derangement_count(int i) {
  if (i < 0) throw std::invalid_argument("negative set size");
  long long prev2 = 1, prev1 = 0;  // D_0, D_1
  if (i == 0) return 1;
  if (i == 1) return 0;
  long long cur = 0;
  for (int k = 2; k <= i; ++k) {
    cur = (k - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace rem
