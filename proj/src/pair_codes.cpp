#include "remoteness/pair_codes.hpp"

#include <numeric>
#include <stdexcept>

#include "remoteness/metric.hpp"
#include "remoteness/spaces.hpp"

namespace rem {

Perm split_permutation(int n, int e) {
  if (e < 2 || e > n - 1)
    throw std::invalid_argument("split_permutation needs 2 <= e <= n-1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n - e; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = n - e; i < n - 1; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  img[static_cast<std::size_t>(n - 1)] = n - e;
  return Perm(std::move(img));
}

namespace {

// First subset of `values` summing to `target`, as a bitmask; -1 if none.
int subset_with_sum(const std::vector<int>& values, int target) {
  const int k = static_cast<int>(values.size());
  std::vector<int> from(static_cast<std::size_t>(target) + 1, -2);  // -2 unreachable
  from[0] = -1;                                                     // -1 = empty subset
  std::vector<int> mask(static_cast<std::size_t>(target) + 1, 0);
  for (int c = 0; c < k; ++c) {
    for (int s = target; s >= values[static_cast<std::size_t>(c)]; --s) {
      const int prev = s - values[static_cast<std::size_t>(c)];
      if (from[static_cast<std::size_t>(s)] == -2 && from[static_cast<std::size_t>(prev)] != -2) {
        from[static_cast<std::size_t>(s)] = c;
        mask[static_cast<std::size_t>(s)] =
            mask[static_cast<std::size_t>(prev)] | (1 << c);
      }
    }
  }
  if (from[static_cast<std::size_t>(target)] == -2) return -1;
  return mask[static_cast<std::size_t>(target)];
}

// Writes sigma restricted to `cycle` into img (img starts as the identity).
void apply_cycle(std::vector<int>& img, const std::vector<int>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
}

// Writes the split permutation of the cycle's length, transported along the
// cycle, into img.
void apply_split_on_cycle(std::vector<int>& img, const std::vector<int>& cycle, int e) {
  const int len = static_cast<int>(cycle.size());
  const Perm tau = split_permutation(len, e);
  for (int j = 0; j < len; ++j)
    img[static_cast<std::size_t>(cycle[static_cast<std::size_t>(j)])] =
        cycle[static_cast<std::size_t>(tau[j])];
}

}  // namespace

PairAnalysis pair_remoteness(const Perm& sigma) {
  if (sigma.is_identity()) throw std::invalid_argument("sigma must differ from the identity");
  const int n = sigma.degree();
  const auto cs = cycle_structure(sigma);
  const auto lengths = cs.lengths();
  const int d = cs.support_size();

  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);

  PairAnalysis out{d, false, 0, Perm::identity(n)};

  int half_mask = -1;
  if (d % 2 == 0) half_mask = subset_with_sum(lengths, d / 2);

  if (half_mask >= 0) {
    out.partitionable = true;
    out.remoteness = d / 2;
    // Identity on the chosen half, sigma on the rest: distance d/2 from both.
    for (std::size_t c = 0; c < cs.cycles.size(); ++c)
      if (!(half_mask & (1 << c))) apply_cycle(img, cs.cycles[c]);
    out.minimal_permutation = Perm(std::move(img));
    return out;
  }

  out.remoteness = d / 2 + 1;
  const int ceil_half = (d + 1) / 2;
  const int floor_half = d / 2;

  // Straddling cycle: least s with prefix(s-1) < d/2 < prefix(s), cycles in
  // their structural order.
  int prefix = 0;
  std::size_t s = 0;
  while (2 * (prefix + lengths[s]) <= d) {
    prefix += lengths[s];
    ++s;
  }
  const int ls = lengths[s];

  for (std::size_t c = s + 1; c < cs.cycles.size(); ++c) apply_cycle(img, cs.cycles[c]);

  if (prefix == ceil_half - 1) {
    apply_cycle(img, cs.cycles[s]);
  } else if (prefix + ls == floor_half + 1) {
    // identity on the straddling cycle
  } else {
    const int e = prefix + ls - ceil_half + 1;
    apply_split_on_cycle(img, cs.cycles[s], e);
  }
  out.minimal_permutation = Perm(std::move(img));
  return out;
}

bool strict_triangle_check(const std::vector<Perm>& code, unsigned jobs) {
  if (code.empty()) throw std::invalid_argument("code must be nonempty");
  const int n = code.front().degree();
  SymmetricGroupSpace space(n);
  const Code idx = perm_code_indices(space, code);
  const int r = remoteness(space, idx, jobs).value;
  const int cr = covering_radius(space, idx, jobs);
  return r + cr >= n + 1;
}

}  // namespace rem
