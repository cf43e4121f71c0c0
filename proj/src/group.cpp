#include "remoteness/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "remoteness/rgraph.hpp"

namespace rem {

bool OrbitalPartition::diagonal_is_single_orbital() const {
  const int d0 = label_of(0, 0);
  for (int x = 1; x < degree; ++x)
    if (label_of(x, x) != d0) return false;
  return sizes[static_cast<std::size_t>(d0)] == degree;
}

std::vector<long long> OrbitalPartition::nondiagonal_sizes() const {
  std::vector<bool> diagonal(static_cast<std::size_t>(rank), false);
  for (int x = 0; x < degree; ++x) diagonal[static_cast<std::size_t>(label_of(x, x))] = true;
  std::vector<long long> out;
  for (int o = 0; o < rank; ++o)
    if (!diagonal[static_cast<std::size_t>(o)]) out.push_back(sizes[static_cast<std::size_t>(o)]);
  return out;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators, std::size_t order_cap)
    : degree_(degree), generators_(std::move(generators)), order_cap_(order_cap) {
  if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree does not match the group degree");
}

const std::vector<Perm>& PermutationGroup::elements() const {
  if (elements_) return *elements_;

  std::unordered_set<Perm, PermHash> seen;
  std::queue<Perm> todo;
  Perm id = Perm::identity(degree_);
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop();
    for (const auto& g : generators_) {
      Perm next = cur.compose(g);
      if (seen.insert(next).second) {
        if (seen.size() > order_cap_)
          throw std::runtime_error("group closure exceeds the configured order cap of " +
                                   std::to_string(order_cap_));
        todo.push(std::move(next));
      }
    }
  }
  std::vector<Perm> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  elements_ = std::move(sorted);
  return *elements_;
}

bool PermutationGroup::contains(const Perm& p) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

std::vector<std::vector<int>> PermutationGroup::point_orbits() const {
  std::vector<int> orbit_of(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < degree_; ++start) {
    if (orbit_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{start};
    orbit_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : generators_) {
        const int img = g[orbit[head]];
        if (orbit_of[static_cast<std::size_t>(img)] < 0) {
          orbit_of[static_cast<std::size_t>(img)] = id;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool PermutationGroup::is_transitive() const { return point_orbits().size() == 1; }

const OrbitalPartition& PermutationGroup::orbitals() const {
  if (orbitals_) return *orbitals_;

  OrbitalPartition part;
  part.degree = degree_;
  const std::size_t pairs = static_cast<std::size_t>(degree_) * static_cast<std::size_t>(degree_);
  part.label.assign(pairs, -1);

  auto pair_index = [this](int x, int y) {
    return static_cast<std::size_t>(x * degree_ + y);
  };

  int next = 0;
  for (int x0 = 0; x0 < degree_; ++x0) {
    for (int y0 = 0; y0 < degree_; ++y0) {
      if (part.label[pair_index(x0, y0)] >= 0) continue;
      const int id = next++;
      std::vector<std::pair<int, int>> queue{{x0, y0}};
      part.label[pair_index(x0, y0)] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [x, y] = queue[head];
        for (const auto& g : generators_) {
          const int xi = g[x], yi = g[y];
          if (part.label[pair_index(xi, yi)] < 0) {
            part.label[pair_index(xi, yi)] = id;
            queue.emplace_back(xi, yi);
          }
        }
      }
    }
  }
  part.rank = next;
  part.sizes.assign(static_cast<std::size_t>(next), 0);
  for (int lab : part.label) ++part.sizes[static_cast<std::size_t>(lab)];
  orbitals_ = std::move(part);
  return *orbitals_;
}

bool PermutationGroup::is_2transitive() const {
  return degree_ >= 2 && is_transitive() && orbitals().rank == 2;
}

bool PermutationGroup::is_regular() const {
  return is_transitive() && order() == static_cast<std::size_t>(degree_);
}

PermutationGroup PermutationGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("stabilized point out of range");
  std::vector<Perm> fixing;
  for (const auto& g : elements())
    if (g[point] == point) fixing.push_back(g);
  return PermutationGroup(degree_, std::move(fixing), order_cap_);
}

PermutationGroup cyclic_group(int n) {
  return PermutationGroup(n, {Perm::standard_cycle(n)});
}

PermutationGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<int> reflect(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) reflect[static_cast<std::size_t>(j)] = (n - j) % n;
  return PermutationGroup(n, {Perm::standard_cycle(n), Perm(std::move(reflect))});
}

std::pair<Perm, Perm> alternating_distance_pair(int m) {
  if (m < 1) throw std::invalid_argument("alternating_distance_pair needs m >= 1");
  const int n = 2 * m;
  std::vector<int> img0(static_cast<std::size_t>(n)), img1(static_cast<std::size_t>(n));
  if (m % 2 == 1) {
    for (int i = 0; i < n; ++i) {
      img0[static_cast<std::size_t>(i)] = (i + 2 * (i / 2)) % n;
      img1[static_cast<std::size_t>(i)] = (img0[static_cast<std::size_t>(i)] + 1) % n;
    }
  } else {
    // Odd multiplier c with c-1 = 2u, u invertible mod m, c invertible mod
    // 2m; then i -> c*i takes each even difference twice and no odd one.
    int c = 0;
    for (int u = 1; u < 2 * m; ++u) {
      if (std::gcd(u, m) == 1 && std::gcd(2 * u + 1, 2 * m) == 1) {
        c = 2 * u + 1;
        break;
      }
    }
    if (c == 0) throw std::logic_error("no valid multiplier found");
    for (int i = 0; i < n; ++i) {
      img0[static_cast<std::size_t>(i)] = (c * i) % n;
      img1[static_cast<std::size_t>(i)] = (c * i + 1) % n;
    }
  }
  return {Perm(std::move(img0)), Perm(std::move(img1))};
}

namespace {

long long element_order(const Perm& p) {
  long long ord = 1;
  for (const auto& cyc : cycle_structure(p).cycles)
    ord = std::lcm<long long>(ord, static_cast<long long>(cyc.size()));
  return ord;
}

// pi(cycle[j]) = cycle[pattern[j]]
void apply_pattern_on_cycle(std::vector<int>& img, const std::vector<int>& cycle,
                            const Perm& pattern) {
  for (std::size_t j = 0; j < cycle.size(); ++j)
    img[static_cast<std::size_t>(cycle[j])] = cycle[static_cast<std::size_t>(pattern[static_cast<int>(j)])];
}

void apply_doubling_on_cycle(std::vector<int>& img, const std::vector<int>& cycle) {
  const int l = static_cast<int>(cycle.size());
  for (int j = 0; j < l; ++j)
    img[static_cast<std::size_t>(cycle[static_cast<std::size_t>(j)])] =
        cycle[static_cast<std::size_t>((2 * j) % l)];
}

}  // namespace

CyclicRemoteness cyclic_group_remoteness(const Perm& g) {
  const int n = g.degree();
  const auto cs = cycle_structure(g);

  if (cs.cycles.empty()) return {0, Perm::identity(n)};

  const int support = cs.support_size();
  const int k = cs.cycle_count();
  const bool odd = parity(g) == Parity::odd;
  const int value = support - k + (odd ? 1 : 0);

  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);

  std::vector<const std::vector<int>*> evens, odds;
  for (const auto& cyc : cs.cycles) {
    if (cyc.size() % 2 == 0)
      evens.push_back(&cyc);
    else
      odds.push_back(&cyc);
  }

  std::size_t first_even = 0;
  if (odd) first_even = 1;  // leave one even cycle at the identity

  const std::size_t paired = evens.size() - first_even;
  for (std::size_t idx = first_even; idx < evens.size(); ++idx) {
    const auto& cyc = *evens[idx];
    const int m = static_cast<int>(cyc.size()) / 2;
    const auto [pi0, pi1] = alternating_distance_pair(m);
    const bool first_half = (idx - first_even) < paired / 2;
    apply_pattern_on_cycle(img, cyc, first_half ? pi0 : pi1);
  }
  for (const auto* cyc : odds) apply_doubling_on_cycle(img, *cyc);

  CyclicRemoteness out{value, Perm(std::move(img))};

  // The construction is tight; confirm against every power of g.
  const long long ord = element_order(g);
  int max_d = 0;
  Perm power = Perm::identity(n);
  for (long long a = 0; a < ord; ++a) {
    max_d = std::max(max_d, hamming_distance(out.witness, power));
    power = power.compose(g);
  }
  if (max_d != value)
    throw std::logic_error("cyclic witness construction does not attain the predicted value");
  return out;
}

DihedralRemoteness dihedral_remoteness(int n) {
  if (n < 3) throw std::invalid_argument("dihedral remoteness needs n >= 3");
  if (n % 6 == 1 || n % 6 == 5) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = (2 * j) % n;
    return {n - 1, Perm(std::move(img))};
  }
  return {n, std::nullopt};
}

bool orbital_witness_valid(const PermutationGroup& G, const Perm& pi) {
  if (!G.is_transitive()) throw std::invalid_argument("orbital criterion needs a transitive group");
  if (pi.degree() != G.degree()) throw std::invalid_argument("degree mismatch");
  const auto& orb = G.orbitals();
  const int n = G.degree();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (orb.label_of(x, y) == orb.label_of(pi[x], pi[y])) return false;
    }
  return true;
}

std::optional<Perm> equidistant_witness_backtracking(const PermutationGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("equidistant witness search needs a transitive group");
  const int n = G.degree();
  const auto& els = G.elements();
  const std::size_t m = els.size();

  // bucket[i][b]: elements mapping i to b.
  std::vector<std::vector<std::vector<std::uint32_t>>> bucket(
      static_cast<std::size_t>(n),
      std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(n)));
  for (std::size_t e = 0; e < m; ++e)
    for (int i = 0; i < n; ++i)
      bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(els[e][i])].push_back(
          static_cast<std::uint32_t>(e));

  std::vector<std::uint8_t> agreements(m, 0);
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  // Depth-first over images in value order; a permutation agreeing with every
  // element at most once is automatically at distance n-1 from all of them.
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      const auto& hits = bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
      bool conflict = false;
      for (std::uint32_t e : hits)
        if (agreements[e] == 1) {
          conflict = true;
          break;
        }
      if (conflict) continue;
      for (std::uint32_t e : hits) agreements[e] = 1;
      used[static_cast<std::size_t>(b)] = true;
      image[static_cast<std::size_t>(i)] = b;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(b)] = false;
      for (std::uint32_t e : hits) agreements[e] = 0;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return Perm(image);
}

TransitiveRemoteness transitive_remoteness(const PermutationGroup& G) {
  if (!G.is_transitive()) throw std::invalid_argument("group is not transitive");
  const int n = G.degree();

  if (n == 1) return {0, Perm::identity(1), "trivial"};

  auto witness_via_graph = [&](const char* method) -> TransitiveRemoteness {
    const auto graph = build_remoteness_graph(G);
    const auto stab = stability_number(graph);
    if (stab.alpha == n) return {n - 1, stab.witness_perm, method};
    return {n, std::nullopt, method};
  };

  if (G.is_2transitive()) return {n, std::nullopt, "2-transitive"};

  const auto& orb = G.orbitals();
  for (long long sz : orb.nondiagonal_sizes()) {
    if (2 * sz > static_cast<long long>(n) * (n - 1))
      return {n, std::nullopt, "large-suborbit"};
  }

  if (G.order() % 2 == 1) {
    auto res = witness_via_graph("odd-order");
    if (res.value != n - 1)
      throw std::logic_error("odd-order group failed to produce a witness");
    return res;
  }

  if (G.is_regular()) {
    long long two_part = 1;
    long long ord = static_cast<long long>(G.order());
    while (ord % 2 == 0) {
      two_part *= 2;
      ord /= 2;
    }
    bool cyclic_sylow = false;
    for (const auto& g : G.elements())
      if (element_order(g) == two_part) {
        cyclic_sylow = true;
        break;
      }
    if (cyclic_sylow) return {n, std::nullopt, "regular-sylow-cyclic"};
    auto res = witness_via_graph("regular-sylow-noncyclic");
    if (res.value != n - 1)
      throw std::logic_error("regular group with noncyclic Sylow 2-subgroup failed to produce a witness");
    return res;
  }

  return witness_via_graph("witness-search");
}

Perm cartesian_product_perm(const Perm& a, const Perm& b) {
  const int na = a.degree(), nb = b.degree();
  std::vector<int> img(static_cast<std::size_t>(na + nb));
  for (int i = 0; i < na; ++i) img[static_cast<std::size_t>(i)] = a[i];
  for (int i = 0; i < nb; ++i) img[static_cast<std::size_t>(na + i)] = b[i] + na;
  return Perm(std::move(img));
}

std::vector<Perm> cartesian_product_code(const std::vector<Perm>& code1,
                                         const std::vector<Perm>& code2) {
  std::vector<Perm> out;
  out.reserve(code1.size() * code2.size());
  for (const auto& a : code1)
    for (const auto& b : code2) out.push_back(cartesian_product_perm(a, b));
  return out;
}

RestrictedCode restrict_agreeing_points(const std::vector<Perm>& code,
                                        const std::optional<std::vector<int>>& points) {
  if (code.empty()) throw std::invalid_argument("code must be nonempty");
  const int n = code.front().degree();
  for (const auto& c : code)
    if (c.degree() != n) throw std::invalid_argument("mixed degrees in code");

  std::vector<int> agree;
  if (points) {
    for (int i : *points) {
      if (i < 0 || i >= n) throw std::invalid_argument("restricted point out of range");
      for (const auto& c : code)
        if (c[i] != code.front()[i])
          throw std::invalid_argument("codewords disagree on claimed-fixed point " +
                                      std::to_string(i));
      agree.push_back(i);
    }
    std::sort(agree.begin(), agree.end());
    agree.erase(std::unique(agree.begin(), agree.end()), agree.end());
  } else {
    for (int i = 0; i < n; ++i) {
      bool same = true;
      for (const auto& c : code)
        if (c[i] != code.front()[i]) {
          same = false;
          break;
        }
      if (same) agree.push_back(i);
    }
  }

  RestrictedCode out{n, {}, agree, Perm::identity(n)};
  if (agree.empty()) {
    out.code = code;
    return out;
  }

  // Right translation sending the common image of each agreeing point back
  // to the point itself; remaining values are matched up in sorted order.
  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  std::vector<bool> target_taken(static_cast<std::size_t>(n), false);
  for (int i : agree) {
    tau[static_cast<std::size_t>(code.front()[i])] = i;
    target_taken[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> free_targets;
  for (int i = 0; i < n; ++i)
    if (!target_taken[static_cast<std::size_t>(i)]) free_targets.push_back(i);
  std::size_t next_free = 0;
  for (int j = 0; j < n; ++j)
    if (tau[static_cast<std::size_t>(j)] < 0) tau[static_cast<std::size_t>(j)] = free_targets[next_free++];
  out.translation = Perm(std::move(tau));

  if (static_cast<int>(agree.size()) == n) {
    out.degree = 0;
    return out;
  }

  std::vector<int> keep;
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(agree.begin(), agree.end(), i)) {
      new_index[static_cast<std::size_t>(i)] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  out.degree = static_cast<int>(keep.size());
  for (const auto& c : code) {
    const Perm translated = c.compose(out.translation);
    std::vector<int> img(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j)
      img[j] = new_index[static_cast<std::size_t>(translated[keep[j]])];
    out.code.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace rem
