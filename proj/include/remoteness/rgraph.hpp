#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remoteness/group.hpp"

namespace rem {

/// Graph on ordered pairs of points: (a,b) and (c,d) are adjacent when a = c,
/// b = d, or (a,c) and (b,d) lie in the same orbital. Size-n independent sets
/// decode exactly to permutations at distance n-1 from every group element.
/// Vertex v encodes the pair (v / n, v % n); vertex order is lexicographic.
struct RemotenessGraph {
  int n = 0;
  std::vector<int> orbital_label;          // n*n coordinatewise orbit labels
  std::vector<long long> nondiag_sizes;    // non-diagonal orbital sizes

  int vertex_count() const { return n * n; }
  int label_of(int x, int y) const { return orbital_label[static_cast<std::size_t>(x * n + y)]; }

  bool adjacent(int v, int w) const {
    if (v == w) return false;
    const int a = v / n, b = v % n, c = w / n, d = w % n;
    return a == c || b == d || label_of(a, c) == label_of(b, d);
  }

  /// Neighbour count of one vertex (the graph is vertex-transitive).
  long long valency() const;
  /// 2(n-1) + (1/n^2) * sum of squared non-diagonal orbital sizes.
  long long valency_formula() const;

  /// One "a,b c,d" line per edge, v < w.
  std::string edge_list() const;
};

RemotenessGraph build_remoteness_graph(const PermutationGroup& G);

struct StabilityResult {
  int alpha = 0;
  std::vector<std::pair<int, int>> witness_set;  // lexicographically least maximum set
  std::optional<Perm> witness_perm;              // decoded when alpha == n
};

/// Exact maximum independent set by row-by-row backtracking over first
/// coordinates (each row contributes at most one pair, so alpha <= n).
StabilityResult stability_number(const RemotenessGraph& R);

struct RemotenessGraphStats {
  long long valency = 0;
  long long valency_formula = 0;
  bool regular = false;           // all vertex degrees equal
  int clique_lower = 0;           // a fixed-first-coordinate row is a clique
  std::optional<int> clique_exact;  // computed when n <= 7
};

RemotenessGraphStats graph_stats(const RemotenessGraph& R);

struct StrongRegularity {
  bool strongly_regular = false;
  long long vertices = 0, valency = 0, lambda = -1, mu = -1;
};

/// Checks constancy of common-neighbour counts over adjacent and
/// non-adjacent pairs. For a regular group the graph is the Latin square
/// graph of its multiplication table, with parameters (n^2, 3(n-1), n, 6).
StrongRegularity strong_regularity_check(const RemotenessGraph& R);

/// Confirms that the group acting coordinatewise on both sides maps edges to
/// edges (checked generator by generator) and moves vertex (0,0) onto every
/// vertex.
bool vertex_transitivity_check(const RemotenessGraph& R, const PermutationGroup& G);

}  // namespace rem
