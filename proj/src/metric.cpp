#include "remoteness/metric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "remoteness/parallel.hpp"

namespace rem {

namespace {

constexpr std::size_t kDenseGuard = 20000;

void require_code(const FiniteMetricSpace& space, const Code& code) {
  if (code.empty()) throw std::invalid_argument("code must be nonempty");
  for (std::size_t c : code)
    if (c >= space.size()) throw std::invalid_argument("codeword index out of range");
}

int max_distance_to_code(const FiniteMetricSpace& space, const Code& code, std::size_t v,
                         int abandon_above) {
  // Returns the max distance from v to the code, or abandon_above + 1 as soon
  // as the running max exceeds abandon_above.
  int m = 0;
  for (std::size_t c : code) {
    m = std::max(m, space.distance(v, c));
    if (m > abandon_above) return m;
  }
  return m;
}

}  // namespace

RemotenessResult remoteness(const FiniteMetricSpace& space, const Code& code, unsigned jobs) {
  require_code(space, code);
  const std::size_t n = space.size();
  const unsigned workers = resolve_jobs(jobs);
  std::atomic<int> shared_best{std::numeric_limits<int>::max()};

  std::vector<RemotenessResult> local(workers, {std::numeric_limits<int>::max(), 0});
  run_workers(workers, [&](unsigned w) {
    int best = std::numeric_limits<int>::max();
    std::size_t best_v = 0;
    for (std::size_t v = w; v < n; v += workers) {
      const int bound = std::min(best, shared_best.load(std::memory_order_relaxed));
      const int m = max_distance_to_code(space, code, v, bound);
      if (m < best) {
        best = m;
        best_v = v;
        int cur = shared_best.load(std::memory_order_relaxed);
        while (m < cur && !shared_best.compare_exchange_weak(cur, m, std::memory_order_relaxed)) {
        }
      }
    }
    local[w] = {best, best_v};
  });

  RemotenessResult out{std::numeric_limits<int>::max(), 0};
  for (const auto& r : local) {
    if (r.value < out.value || (r.value == out.value && r.witness < out.witness)) out = r;
  }
  return out;
}

int covering_radius(const FiniteMetricSpace& space, const Code& code, unsigned jobs) {
  require_code(space, code);
  const std::size_t n = space.size();
  const unsigned workers = resolve_jobs(jobs);
  std::atomic<int> shared_best{-1};

  std::vector<int> local(workers, -1);
  run_workers(workers, [&](unsigned w) {
    int best = -1;
    for (std::size_t v = w; v < n; v += workers) {
      const int bound = std::max(best, shared_best.load(std::memory_order_relaxed));
      int m = std::numeric_limits<int>::max();
      for (std::size_t c : code) {
        m = std::min(m, space.distance(v, c));
        if (m <= bound) break;  // cannot raise the max
      }
      if (m > best) {
        best = m;
        int cur = shared_best.load(std::memory_order_relaxed);
        while (m > cur && !shared_best.compare_exchange_weak(cur, m, std::memory_order_relaxed)) {
        }
      }
    }
    local[w] = best;
  });

  return *std::max_element(local.begin(), local.end());
}

int code_radius(const FiniteMetricSpace& space, const Code& code) {
  require_code(space, code);
  int best = std::numeric_limits<int>::max();
  for (std::size_t c : code) {
    int ecc = 0;
    for (std::size_t d : code) ecc = std::max(ecc, space.distance(c, d));
    best = std::min(best, ecc);
  }
  return best;
}

int code_diameter(const FiniteMetricSpace& space, const Code& code) {
  require_code(space, code);
  int best = 0;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::max(best, space.distance(code[i], code[j]));
  return best;
}

long long mu_count(const FiniteMetricSpace& space, const Code& code, int t) {
  require_code(space, code);
  long long count = 0;
  for (std::size_t v = 0; v < space.size(); ++v) {
    bool ok = true;
    for (std::size_t c : code) {
      if (space.distance(v, c) > t) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

CodeSummary summarize(const FiniteMetricSpace& space, const Code& code, unsigned jobs) {
  const auto r = remoteness(space, code, jobs);
  CodeSummary s;
  s.remoteness = r.value;
  s.witness = r.witness;
  s.witness_name = space.point_name(r.witness);
  s.radius = code_radius(space, code);
  s.diameter = code_diameter(space, code);
  s.covering_radius = covering_radius(space, code, jobs);
  s.mu_count = mu_count(space, code, r.value);
  return s;
}

namespace {

// r(C) >= t : every point has a codeword at distance >= t.
bool remoteness_at_least(const FiniteMetricSpace& space, const Code& code, int t) {
  if (t <= 0) return true;
  const std::size_t n = space.size();
  for (std::size_t v = 0; v < n; ++v) {
    bool dominated = false;
    for (std::size_t c : code) {
      if (space.distance(v, c) >= t) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

// r(C) <= t : some point is within t of every codeword.
bool remoteness_at_most(const FiniteMetricSpace& space, const Code& code, int t) {
  const std::size_t n = space.size();
  for (std::size_t v = 0; v < n; ++v) {
    bool center = true;
    for (std::size_t c : code) {
      if (space.distance(v, c) > t) {
        center = false;
        break;
      }
    }
    if (center) return true;
  }
  return false;
}

bool remoteness_exactly(const FiniteMetricSpace& space, const Code& code, int t, int space_diam) {
  if (!remoteness_at_least(space, code, t)) return false;
  if (t >= space_diam) return true;  // max distance cannot exceed the diameter
  return remoteness_at_most(space, code, t);
}

// Returns false only when t is certainly not a pairwise distance (then no
// code has remoteness exactly t). Homogeneous spaces show their full
// spectrum from any point; other large spaces skip the precheck.
bool distance_value_may_occur(const FiniteMetricSpace& space, int t) {
  const std::size_t n = space.size();
  if (space.homogeneous()) {
    for (std::size_t u = 1; u < n; ++u)
      if (space.distance(u, 0) == t) return true;
    return false;
  }
  if (n <= 2500) {
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = v + 1; u < n; ++u)
        if (space.distance(u, v) == t) return true;
    return false;
  }
  return true;
}

// Enumerates k-subsets of {from,...,n-1} as suffixes after `prefix`, calling
// visit(code) for each; visit returns true to stop.
template <class Visit>
bool for_each_combination(std::size_t from, std::size_t n, int k, Code& prefix, Visit&& visit) {
  if (k == 0) return visit(prefix);
  for (std::size_t v = from; v + static_cast<std::size_t>(k) <= n; ++v) {
    prefix.push_back(v);
    if (for_each_combination(v + 1, n, k - 1, prefix, visit)) {
      prefix.pop_back();
      return true;
    }
    prefix.pop_back();
  }
  return false;
}

long long combination_count(std::size_t n, int k) {
  if (k < 0) return 0;
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - static_cast<std::size_t>(k) + static_cast<std::size_t>(i)) /
        static_cast<long double>(i);
    if (r > 4e18L) return std::numeric_limits<long long>::max();
  }
  return static_cast<long long>(r + 0.5L);
}

}  // namespace

MinCodeResult min_code_size(const FiniteMetricSpace& space, int t, unsigned long long budget,
                            unsigned jobs) {
  const std::size_t n = space.size();
  const int rho = space_radius(space);
  if (t < 0 || t > rho)
    throw std::invalid_argument("t must lie in [0, radius of the space]");

  MinCodeResult result;
  if (t == 0) {
    result.outcome = MinCodeOutcome::found;
    result.size = 1;
    result.witness = {0};
    result.candidates_considered = 1;
    return result;
  }
  if (!distance_value_may_occur(space, t)) {
    // No pair at distance t, so no code attains max distance exactly t.
    result.outcome = MinCodeOutcome::unattainable;
    return result;
  }

  const int diam = space_diameter(space);
  const bool fix_first = space.homogeneous();
  const unsigned workers = resolve_jobs(jobs);

  for (int k = 1; k <= static_cast<int>(n); ++k) {
    const long long planned = fix_first
                                  ? (k == 1 ? 1 : combination_count(n - 1, k - 1))
                                  : combination_count(n, k);
    if (planned < 0 ||
        result.candidates_considered + static_cast<unsigned long long>(planned) > budget) {
      result.outcome = MinCodeOutcome::budget_exceeded;
      return result;
    }
    result.candidates_considered += static_cast<unsigned long long>(planned);

    // Parallel over the first free element; each worker scans its stream in
    // lexicographic order and keeps its first hit, so the merged winner is
    // the overall lexicographically least witness.
    std::atomic<long long> best_lead{std::numeric_limits<long long>::max()};
    std::vector<Code> worker_hit(workers);
    const std::size_t lead_begin = fix_first ? 1 : 0;
    const int suffix_len = fix_first ? k - 2 : k - 1;

    if (fix_first && k == 1) {
      Code single{0};
      if (remoteness_exactly(space, single, t, diam)) worker_hit[0] = single;
    } else {
      run_workers(workers, [&](unsigned w) {
        for (std::size_t lead = lead_begin + w; lead < n; lead += workers) {
          if (static_cast<long long>(lead) > best_lead.load(std::memory_order_relaxed)) break;
          if (n - lead < static_cast<std::size_t>(suffix_len) + 1) break;
          Code prefix;
          if (fix_first) prefix.push_back(0);
          prefix.push_back(lead);
          Code found;
          const bool hit = for_each_combination(lead + 1, n, suffix_len, prefix, [&](const Code& c) {
            if (remoteness_exactly(space, c, t, diam)) {
              found = c;
              return true;
            }
            return false;
          });
          if (hit) {
            worker_hit[w] = found;
            long long cur = best_lead.load(std::memory_order_relaxed);
            long long mine = static_cast<long long>(lead);
            while (mine < cur &&
                   !best_lead.compare_exchange_weak(cur, mine, std::memory_order_relaxed)) {
            }
            break;
          }
        }
      });
    }

    Code best;
    for (const auto& hit : worker_hit) {
      if (hit.empty()) continue;
      if (best.empty() || hit < best) best = hit;
    }
    if (!best.empty()) {
      result.outcome = MinCodeOutcome::found;
      result.size = k;
      result.witness = best;
      return result;
    }
  }
  result.outcome = MinCodeOutcome::unattainable;
  return result;
}

Code greedy_remote_code(const FiniteMetricSpace& space, int t) {
  const std::size_t n = space.size();
  if (n > kDenseGuard) throw std::invalid_argument("space too large for greedy construction");
  if (t > space_radius(space)) throw std::invalid_argument("t exceeds the radius of the space");

  if (t <= 0) return {0};

  std::vector<bool> covered(n, false);
  std::size_t remaining = n;
  Code code;
  while (remaining > 0) {
    std::size_t best_c = 0;
    long long best_gain = -1;
    for (std::size_t c = 0; c < n; ++c) {
      long long gain = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (!covered[v] && space.distance(v, c) >= t) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_c = c;
      }
    }
    if (best_gain <= 0)
      throw std::logic_error("greedy cover stalled; t exceeds what the space supports");
    code.push_back(best_c);
    for (std::size_t v = 0; v < n; ++v)
      if (!covered[v] && space.distance(v, best_c) >= t) {
        covered[v] = true;
        --remaining;
      }
  }
  std::sort(code.begin(), code.end());
  return code;
}

bool DominationGraph::strongly_dominates(const Code& code) const {
  if (code.empty()) return false;
  if (universally_dominated) return true;
  std::vector<bool> in_code(vertex_count, false);
  for (std::size_t c : code) in_code[c] = true;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    bool dominated = false;
    for (std::size_t u : adjacency[v]) {
      if (in_code[u]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> DominationGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < vertex_count; ++v)
    for (std::size_t u : adjacency[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

DominationGraph domination_graph(const FiniteMetricSpace& space, int t) {
  const std::size_t n = space.size();
  if (n > 5000) throw std::invalid_argument("space too large for an explicit domination graph");
  DominationGraph g;
  g.vertex_count = n;
  g.threshold = t;
  if (t <= 0) {
    g.universally_dominated = true;
    g.adjacency.assign(n, {});
    return g;
  }
  g.adjacency.assign(n, {});
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = v + 1; u < n; ++u)
      if (space.distance(u, v) >= t) {
        g.adjacency[v].push_back(u);
        g.adjacency[u].push_back(v);
      }
  return g;
}

CodeSizeBounds bound_min_code_size(const FiniteMetricSpace& space, int t) {
  if (t < 1) throw std::invalid_argument("bounds need t >= 1");
  const double n = static_cast<double>(space.size());
  const double vmin = static_cast<double>(space.min_ball_volume(t - 1));
  const double vmax = static_cast<double>(space.max_ball_volume(t - 1));
  CodeSizeBounds b;
  b.lower = n / (n - vmin + 1.0);
  b.upper = b.lower + n / (n - vmax + 1.0) * std::log(n - vmin + 1.0);
  return b;
}

BalancedResult is_balanced(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n > 5000) throw std::invalid_argument("space too large for the balance check");
  BalancedResult res;
  const int rho = space_radius(space);
  const int diam = space_diameter(space);
  if (rho != diam) return res;

  res.antipode.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (std::size_t u = 0; u < n && !found; ++u) {
      if (space.distance(u, v) != rho) continue;
      bool ok = true;
      for (std::size_t w = 0; w < n; ++w) {
        if (space.distance(w, v) + space.distance(w, u) != rho) {
          ok = false;
          break;
        }
      }
      if (ok) {
        res.antipode[v] = u;
        found = true;
      }
    }
    if (!found) {
      res.antipode.clear();
      return res;
    }
  }
  res.balanced = true;
  return res;
}

Code perm_code_indices(const SymmetricGroupSpace& space, const std::vector<Perm>& code) {
  Code out;
  out.reserve(code.size());
  for (const auto& p : code) out.push_back(space.index_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rem
