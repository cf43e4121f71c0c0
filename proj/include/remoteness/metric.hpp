#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "remoteness/spaces.hpp"

namespace rem {

/// A code is a nonempty set of point indices into a space.
using Code = std::vector<std::size_t>;

struct RemotenessResult {
  int value;
  std::size_t witness;  // lexicographically least minimizing point
};

/// Exact remoteness: min over all points v of max distance from v to the
/// code, with the least minimizing v. Scans abandon a candidate once its
/// running max exceeds the best value seen so far.
RemotenessResult remoteness(const FiniteMetricSpace& space, const Code& code, unsigned jobs = 0);

/// Exact covering radius: max over all points of the distance to the
/// nearest codeword.
int covering_radius(const FiniteMetricSpace& space, const Code& code, unsigned jobs = 0);

/// min over codewords of the max distance to another codeword.
int code_radius(const FiniteMetricSpace& space, const Code& code);
/// max pairwise distance within the code.
int code_diameter(const FiniteMetricSpace& space, const Code& code);

/// Number of points within distance t of every codeword.
long long mu_count(const FiniteMetricSpace& space, const Code& code, int t);

struct CodeSummary {
  int remoteness;
  std::size_t witness;
  std::string witness_name;
  int radius;
  int diameter;
  int covering_radius;
  long long mu_count;  // valid centers at radius = remoteness
};

CodeSummary summarize(const FiniteMetricSpace& space, const Code& code, unsigned jobs = 0);

enum class MinCodeOutcome { found, unattainable, budget_exceeded };

struct MinCodeResult {
  MinCodeOutcome outcome;
  int size = 0;                             // meaningful when outcome == found
  Code witness;                             // lexicographically least witness
  unsigned long long candidates_considered = 0;
};

/// Smallest cardinality of a code whose remoteness is exactly t, by
/// increasing-cardinality exhaustive search. On homogeneous spaces the first
/// codeword is fixed at point 0 (remoteness is translation-invariant).
/// Returns `unattainable` when no code of any size has remoteness t (for
/// instance t = 1 in a symmetric group, where no two points are at distance
/// 1), and `budget_exceeded` when the candidate count would pass `budget`.
MinCodeResult min_code_size(const FiniteMetricSpace& space, int t,
                            unsigned long long budget = 1000000000ULL, unsigned jobs = 0);

/// Greedy set cover over the strong-domination formulation: returns a code
/// with remoteness >= t. Requires t <= radius of the space.
Code greedy_remote_code(const FiniteMetricSpace& space, int t);

/// The graph on the whole space with edges between points at distance >= t.
/// A code has remoteness >= t exactly when it strongly dominates this graph.
/// At t = 0 every nonempty code dominates; that case is carried by the
/// `universally_dominated` flag instead of self-loops.
struct DominationGraph {
  std::size_t vertex_count = 0;
  int threshold = 0;
  bool universally_dominated = false;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists

  bool strongly_dominates(const Code& code) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

DominationGraph domination_graph(const FiniteMetricSpace& space, int t);

struct CodeSizeBounds {
  double lower;
  double upper;
};

/// Set-cover bounds on the minimum cardinality of a code with remoteness t,
/// evaluated from the ball volumes at radius t-1. Requires t >= 1.
CodeSizeBounds bound_min_code_size(const FiniteMetricSpace& space, int t);

struct BalancedResult {
  bool balanced = false;
  /// When balanced: antipode[v] is a point u with d(w,v) + d(w,u) equal to
  /// the space radius for every w.
  std::vector<std::size_t> antipode;
};

BalancedResult is_balanced(const FiniteMetricSpace& space);

/// Indices of the given permutations inside an S_n space.
Code perm_code_indices(const SymmetricGroupSpace& space, const std::vector<Perm>& code);

}  // namespace rem
