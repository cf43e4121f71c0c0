#include "remoteness/rgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rem {

long long RemotenessGraph::valency() const {
  long long d = 0;
  for (int w = 0; w < vertex_count(); ++w)
    if (adjacent(0, w)) ++d;
  return d;
}

long long RemotenessGraph::valency_formula() const {
  long long sum_sq = 0;
  for (long long s : nondiag_sizes) sum_sq += s * s;
  return 2LL * (n - 1) + sum_sq / (static_cast<long long>(n) * n);
}

std::string RemotenessGraph::edge_list() const {
  std::string out;
  for (int v = 0; v < vertex_count(); ++v)
    for (int w = v + 1; w < vertex_count(); ++w)
      if (adjacent(v, w)) {
        out += std::to_string(v / n) + ',' + std::to_string(v % n) + ' ' +
               std::to_string(w / n) + ',' + std::to_string(w % n) + '\n';
      }
  return out;
}

RemotenessGraph build_remoteness_graph(const PermutationGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("remoteness graph is defined for transitive groups");
  RemotenessGraph R;
  R.n = G.degree();
  R.orbital_label = G.orbitals().label;
  R.nondiag_sizes = G.orbitals().nondiagonal_sizes();
  return R;
}

namespace {

struct StabilitySearch {
  const RemotenessGraph& R;
  int n;
  int best = 0;
  std::vector<std::pair<int, int>> best_set;
  std::vector<std::pair<int, int>> chosen;
  std::vector<bool> col_used;

  explicit StabilitySearch(const RemotenessGraph& graph)
      : R(graph), n(graph.n), col_used(static_cast<std::size_t>(graph.n), false) {}

  bool compatible(int a, int b) const {
    for (const auto& [pa, pb] : chosen)
      if (R.label_of(pa, a) == R.label_of(pb, b)) return false;
    return true;
  }

  // Rows ascending, in each row the columns ascending and then the skip
  // branch, so the first maximum found is the lexicographically least one.
  bool rec(int row) {
    if (static_cast<int>(chosen.size()) + (n - row) <= best) return false;
    if (row == n) {
      best = static_cast<int>(chosen.size());
      best_set = chosen;
      return best == n;  // cannot be beaten
    }
    for (int b = 0; b < n; ++b) {
      if (col_used[static_cast<std::size_t>(b)]) continue;
      if (!compatible(row, b)) continue;
      chosen.emplace_back(row, b);
      col_used[static_cast<std::size_t>(b)] = true;
      if (rec(row + 1)) return true;
      col_used[static_cast<std::size_t>(b)] = false;
      chosen.pop_back();
    }
    return rec(row + 1);
  }
};

}  // namespace

StabilityResult stability_number(const RemotenessGraph& R) {
  StabilitySearch search(R);
  search.rec(0);
  StabilityResult out;
  out.alpha = search.best;
  out.witness_set = search.best_set;
  if (out.alpha == R.n) {
    std::vector<int> img(static_cast<std::size_t>(R.n));
    for (const auto& [a, b] : out.witness_set) img[static_cast<std::size_t>(a)] = b;
    out.witness_perm = Perm(std::move(img));
  }
  return out;
}

namespace {

int max_clique(const RemotenessGraph& R) {
  const int N = R.vertex_count();
  int best = 0;
  std::vector<int> clique;
  auto rec = [&](auto&& self, const std::vector<int>& candidates) -> void {
    if (static_cast<int>(clique.size()) > best) best = static_cast<int>(clique.size());
    if (static_cast<int>(clique.size() + candidates.size()) <= best) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (static_cast<int>(clique.size() + candidates.size() - i) <= best) return;
      const int v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (R.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) all[static_cast<std::size_t>(v)] = v;
  rec(rec, all);
  return best;
}

}  // namespace

RemotenessGraphStats graph_stats(const RemotenessGraph& R) {
  RemotenessGraphStats s;
  s.valency = R.valency();
  s.valency_formula = R.valency_formula();
  s.regular = true;
  for (int v = 0; v < R.vertex_count(); ++v) {
    long long d = 0;
    for (int w = 0; w < R.vertex_count(); ++w)
      if (R.adjacent(v, w)) ++d;
    if (d != s.valency) {
      s.regular = false;
      break;
    }
  }
  s.clique_lower = R.n;  // all pairs sharing a first coordinate
  if (R.n <= 7) s.clique_exact = max_clique(R);
  return s;
}

StrongRegularity strong_regularity_check(const RemotenessGraph& R) {
  StrongRegularity out;
  const int N = R.vertex_count();
  out.vertices = N;
  out.valency = R.valency();
  for (int v = 0; v < N; ++v) {
    long long deg = 0;
    for (int w = 0; w < N; ++w)
      if (R.adjacent(v, w)) ++deg;
    if (deg != out.valency) return out;
  }
  for (int v = 0; v < N; ++v) {
    for (int w = v + 1; w < N; ++w) {
      long long common = 0;
      for (int u = 0; u < N; ++u)
        if (R.adjacent(v, u) && R.adjacent(w, u)) ++common;
      if (R.adjacent(v, w)) {
        if (out.lambda < 0)
          out.lambda = common;
        else if (out.lambda != common)
          return out;
      } else {
        if (out.mu < 0)
          out.mu = common;
        else if (out.mu != common)
          return out;
      }
    }
  }
  out.strongly_regular = out.lambda >= 0 && out.mu >= 0;
  return out;
}

bool vertex_transitivity_check(const RemotenessGraph& R, const PermutationGroup& G) {
  const int n = R.n;
  if (n != G.degree()) throw std::invalid_argument("degree mismatch");

  // Orbit of (0,0) under the coordinatewise action must be everything.
  std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, int>> queue{{0, 0}};
  seen[0] = true;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [a, b] = queue[head];
    for (const auto& g : G.generators()) {
      const std::pair<int, int> imgs[2] = {{g[a], b}, {a, g[b]}};
      for (const auto& [x, y] : imgs) {
        const std::size_t idx = static_cast<std::size_t>(x * n + y);
        if (!seen[idx]) {
          seen[idx] = true;
          ++reached;
          queue.emplace_back(x, y);
        }
      }
    }
  }
  if (reached != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return false;

  // Edge preservation, generator by generator on either coordinate.
  for (const auto& g : G.generators()) {
    for (int v = 0; v < R.vertex_count(); ++v) {
      for (int w = v + 1; w < R.vertex_count(); ++w) {
        const int va = v / n, vb = v % n, wa = w / n, wb = w % n;
        const bool e = R.adjacent(v, w);
        if (e != R.adjacent(g[va] * n + vb, g[wa] * n + wb)) return false;
        if (e != R.adjacent(va * n + g[vb], wa * n + g[wb])) return false;
      }
    }
  }
  return true;
}

}  // namespace rem
