// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact integer equality.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "remoteness/catalog.hpp"
#include "remoteness/group.hpp"
#include "remoteness/latin.hpp"
#include "remoteness/metric.hpp"
#include "remoteness/pair_codes.hpp"
#include "remoteness/rgraph.hpp"
#include "remoteness/spaces.hpp"

using namespace rem;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& why, const std::string& message) {
  if (!cond && why.empty()) why = message;
  return cond;
}

// Decides cr(G) = n-1 for transitive G directly from the definition: some
// point is at distance >= n-1 from every codeword (the covering radius of a
// transitive group never exceeds n-1).
bool covering_radius_reaches(const SymmetricGroupSpace& space, const Code& code, int target) {
  for (std::size_t v = 0; v < space.size(); ++v) {
    bool far_from_all = true;
    for (std::size_t c : code) {
      if (space.distance(v, c) < target) {
        far_from_all = false;
        break;
      }
    }
    if (far_from_all) return true;
  }
  return false;
}

// --- criterion 1: reproduction of the transitive-group table ---
bool criterion_table(std::string& why) {
  const auto entries = load_catalog();
  const auto report = verify_table(entries, 0);
  bool ok = check(report.all_ok, why, "some catalog row disagrees with its expectation");
  ok &= check(report.degree6_groups == 16, why, "degree-6 catalog is incomplete");
  ok &= check(report.degree6_none_at_n_minus_1, why, "a degree-6 group reached remoteness 5");

  // the rows the table promises, as (degree, order, how many)
  struct Want {
    int degree;
    long long order;
    int count;
  };
  const std::vector<Want> wanted = {{3, 3, 1},  {4, 4, 1},  {5, 5, 1},  {5, 10, 1}, {7, 7, 1},
                                    {7, 14, 1}, {7, 21, 1}, {8, 8, 4},  {8, 16, 3}, {9, 9, 2},
                                    {9, 18, 2}, {9, 27, 2}, {9, 36, 2}, {9, 72, 1}, {9, 81, 1}};
  for (const auto& w : wanted) {
    int found = 0;
    for (const auto& row : report.rows)
      if (row.entry.degree == w.degree && row.entry.order == w.order && row.entry.in_table() &&
          row.ok && row.computed == w.degree - 1)
        ++found;
    ok &= check(found == w.count, why,
                "table rows of degree " + std::to_string(w.degree) + " order " +
                    std::to_string(w.order) + ": found " + std::to_string(found) + ", wanted " +
                    std::to_string(w.count));
  }

  // controls at full remoteness
  struct Control {
    int degree;
    long long order;
  };
  for (const auto& c : std::vector<Control>{{4, 24},   {5, 120},  {6, 720},  {7, 5040}, {8, 40320},
                                            {4, 12},   {5, 60},   {6, 360},  {7, 2520}, {8, 20160},
                                            {4, 4},    {6, 6},    {8, 8},    {9, 18}}) {
    bool found = false;
    for (const auto& row : report.rows)
      if (row.entry.degree == c.degree && row.entry.order == c.order && !row.entry.in_table() &&
          row.ok && row.computed == c.degree)
        found = true;
    ok &= check(found, why,
                "control of degree " + std::to_string(c.degree) + " order " +
                    std::to_string(c.order) + " missing or off");
  }
  return ok;
}

// --- criterion 2: one-generator groups, exhaustive through degree 6 ---
bool criterion_one_generator(std::string& why) {
  for (int n = 2; n <= 6; ++n) {
    SymmetricGroupSpace space(n);
    for (std::size_t i = 1; i < space.size(); ++i) {
      const Perm g = space.perm_at(i);
      if (!cycle_structure(g).fixed_points.empty()) continue;
      const auto predicted = cyclic_group_remoteness(g);
      PermutationGroup G(n, {g});
      const int actual = remoteness(space, perm_code_indices(space, G.elements())).value;
      if (!check(predicted.value == actual, why,
                 "degree " + std::to_string(n) + " generator " + g.cycle_str() + ": formula " +
                     std::to_string(predicted.value) + " vs oracle " + std::to_string(actual)))
        return false;
      int attained = 0;
      for (const auto& el : G.elements())
        attained = std::max(attained, hamming_distance(predicted.witness, el));
      if (!check(attained == predicted.value, why,
                 "witness for " + g.cycle_str() + " does not attain the value"))
        return false;
    }
  }
  return true;
}

// --- criterion 3: pair remoteness, exhaustive over S_6 ---
bool criterion_pairs(std::string& why) {
  SymmetricGroupSpace s6(6);
  const Perm id = Perm::identity(6);
  for (std::size_t i = 1; i < s6.size(); ++i) {
    const Perm sigma = s6.perm_at(i);
    const auto pa = pair_remoteness(sigma);
    const int oracle = remoteness(s6, Code{0, i}).value;
    if (!check(pa.remoteness == oracle, why,
               "sigma " + sigma.cycle_str() + ": formula " + std::to_string(pa.remoteness) +
                   " vs oracle " + std::to_string(oracle)))
      return false;
    const int reached = std::max(hamming_distance(pa.minimal_permutation, id),
                                 hamming_distance(pa.minimal_permutation, sigma));
    if (!check(reached == pa.remoteness, why,
               "minimal permutation for " + sigma.cycle_str() + " reaches " +
                   std::to_string(reached)))
      return false;
  }
  return true;
}

// --- criterion 4: the cyclic-pair distance split at n = 5 ---
bool criterion_cyclic_pair(std::string& why) {
  SymmetricGroupSpace s5(5);
  const Perm id = Perm::identity(5);
  const Perm kappa = Perm::standard_cycle(5);
  for (std::size_t i = 0; i < s5.size(); ++i) {
    const Perm p = s5.perm_at(i);
    if (p == id || p == kappa) continue;
    const int total = hamming_distance(p, id) + hamming_distance(p, kappa);
    if (!check(total >= 6, why, "permutation " + p.str() + " has distance sum " +
                                    std::to_string(total)))
      return false;
  }
  for (int e = 2; e <= 4; ++e) {
    const Perm tau = split_permutation(5, e);
    bool ok = check(hamming_distance(tau, id) == e, why,
                    "split at e=" + std::to_string(e) + " misses the identity target");
    ok &= check(hamming_distance(tau, kappa) == 6 - e, why,
                "split at e=" + std::to_string(e) + " misses the cycle target");
    if (!ok) return false;
  }
  return true;
}

// --- criterion 5: Latin-square rows ---
bool criterion_latin(std::string& why) {
  bool ok = check(!find_transversal(cyclic_latin(4)).has_value(), why,
                  "order-4 cyclic square has a transversal");
  SymmetricGroupSpace s4(4), s5(5);
  ok &= check(remoteness(s4, perm_code_indices(s4, cyclic_latin(4).rows())).value == 4, why,
              "order-4 rows miss remoteness 4");
  ok &= check(find_transversal(cyclic_latin(5)).has_value(), why,
              "order-5 cyclic square lost its transversal");
  ok &= check(remoteness(s5, perm_code_indices(s5, cyclic_latin(5).rows())).value == 4, why,
              "order-5 rows miss remoteness 4");

  const auto improved = first_rows_remoteness(cyclic_latin(4), 2);
  ok &= check(improved.improved && improved.lower_bound == 3, why,
              "improved bound at n=4, k=2 is not 3");
  ok &= check(improved.exact.has_value() && *improved.exact >= 3, why,
              "exact value at n=4, k=2 fell below the bound");

  // brute-force agreement at n <= 5
  for (int n = 2; n <= 5; ++n) {
    const auto L = cyclic_latin(n);
    for (int k = 1; k <= n; ++k) {
      const auto b = first_rows_remoteness(L, k);
      if (!b.exact) continue;
      if (!check(*b.exact >= b.lower_bound, why,
                 "bound fails at n=" + std::to_string(n) + " k=" + std::to_string(k)))
        return false;
    }
  }
  // averaging bound at n = 6, 7
  for (int n : {6, 7}) {
    const auto L = cyclic_latin(n);
    for (int k : {2, 3, n}) {
      const auto b = first_rows_remoteness(L, k);
      if (!check(b.exact.has_value() && *b.exact >= b.lower_bound, why,
                 "averaging bound fails at n=" + std::to_string(n) + " k=" + std::to_string(k)))
        return false;
    }
  }
  return ok;
}

// --- criterion 6: confirmed bachelor and the extension to full remoteness ---
bool criterion_bachelor(std::string& why) {
  const auto found = find_bachelor_square(5);
  bool ok = check(found.outcome == BachelorSearchResult::Outcome::found, why,
                  "no confirmed bachelor found at order 5");
  if (!ok) return false;
  ok &= check(!has_transversal_through(found.found->square, found.found->row, found.found->col),
              why, "the reported cell lies on a transversal");

  const auto ext = extended_latin_code(5);
  ok &= check(ext.code.size() == 7, why, "extended code size is not (3n-1)/2");
  SymmetricGroupSpace s5(5);
  const auto idx = perm_code_indices(s5, ext.code);
  ok &= check(idx.size() == 7, why, "extended code has duplicate words");
  ok &= check(remoteness(s5, idx).value == 5, why, "extended code misses remoteness 5");
  return ok;
}

// --- criterion 7: the minimum-size ladder at degree 4 ---
bool criterion_m_table(std::string& why) {
  SymmetricGroupSpace s4(4);
  bool ok = check(min_code_size(s4, 0).size == 1, why, "m(S_4,0) != 1");
  ok &= check(min_code_size(s4, 1).outcome == MinCodeOutcome::unattainable, why,
              "t=1 should be unattainable");
  ok &= check(min_code_size(s4, 2).size == 2, why, "m(S_4,2) != 2");
  ok &= check(min_code_size(s4, 3).size == 2, why, "m(S_4,3) != 2");
  const auto m4 = min_code_size(s4, 4);
  ok &= check(m4.outcome == MinCodeOutcome::found && m4.size >= 3 && m4.size <= 4, why,
              "m(S_4,4) outside [3,4]");
  if (m4.outcome == MinCodeOutcome::found)
    ok &= check(remoteness(s4, m4.witness).value == 4, why, "m(S_4,4) witness has wrong remoteness");
  return ok;
}

// --- criterion 8: three independent routes agree on every catalog group ---
bool criterion_triple_equivalence(std::string& why) {
  for (const auto& e : load_catalog()) {
    PermutationGroup G(e.degree, e.generators);
    const int n = e.degree;
    const auto stab = stability_number(build_remoteness_graph(G));
    const auto direct = equidistant_witness_backtracking(G);
    SymmetricGroupSpace space(n);
    const bool cr_route =
        covering_radius_reaches(space, perm_code_indices(space, G.elements()), n - 1);

    if (!check(stab.alpha <= n, why, e.label() + ": independence number exceeds the degree"))
      return false;
    const bool a = stab.alpha == n;
    if (!check(a == direct.has_value(), why,
               e.label() + ": independent-set and backtracking routes disagree"))
      return false;
    if (!check(a == cr_route, why, e.label() + ": independent-set and covering-radius routes disagree"))
      return false;
    if (direct) {
      if (!check(orbital_witness_valid(G, *direct), why,
                 e.label() + ": witness fails the orbital criterion"))
        return false;
    }
    if (n <= 6) {
      const int cr = covering_radius(space, perm_code_indices(space, G.elements()));
      if (!check((cr == n - 1) == a, why, e.label() + ": exact covering radius disagrees"))
        return false;
    }
  }
  return true;
}

// --- criterion 9: randomized property suites, fixed seeds ---
bool criterion_properties(std::string& why) {
  std::mt19937 rng(20240808);

  {  // bi-invariance, 200 cases in S_6
    SymmetricGroupSpace s6(6);
    std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Perm p = s6.perm_at(pick(rng)), s = s6.perm_at(pick(rng)), t = s6.perm_at(pick(rng));
      const int d = hamming_distance(p, s);
      if (!check(hamming_distance(t.compose(p), t.compose(s)) == d &&
                     hamming_distance(p.compose(t), s.compose(t)) == d,
                 why, "translation invariance failed"))
        return false;
    }
  }

  {  // r + cr bracket, 100 cases each in S_4 and H(4,2)
    SymmetricGroupSpace s4(4);
    HammingGraphSpace h42(4, 2);
    std::uniform_int_distribution<std::size_t> pick_s(0, s4.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_h(0, h42.size() - 1);
    std::uniform_int_distribution<int> len(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
      Code c;
      for (int j = len(rng); j > 0; --j) c.push_back(pick_s(rng));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      const int sum = remoteness(s4, c).value + covering_radius(s4, c);
      if (!check(sum >= 4 && sum <= 8, why, "bracket failed in S_4")) return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
      Code c;
      for (int j = len(rng); j > 0; --j) c.push_back(pick_h(rng));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      const int sum = remoteness(h42, c).value + covering_radius(h42, c);
      if (!check(sum >= 4 && sum <= 8, why, "bracket failed in H(4,2)")) return false;
    }
  }

  {  // balanced equality on H(3,2) and H(4,2), 100 cases each
    for (int length : {3, 4}) {
      HammingGraphSpace h(length, 2);
      if (!check(is_balanced(h).balanced, why, "hypercube not recognized as balanced"))
        return false;
      std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
      std::uniform_int_distribution<int> len(1, 5);
      for (int trial = 0; trial < 100; ++trial) {
        Code c;
        for (int j = len(rng); j > 0; --j) c.push_back(pick(rng));
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (!check(remoteness(h, c).value + covering_radius(h, c) == length, why,
                   "balanced equality failed"))
          return false;
      }
    }
  }

  {  // strict triangle on proper non-singleton codes in S_5, 100 cases
    SymmetricGroupSpace s5(5);
    std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
    std::uniform_int_distribution<int> len(2, 5);
    int done = 0;
    while (done < 100) {
      Code c;
      for (int j = len(rng); j > 0; --j) c.push_back(pick(rng));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (c.size() < 2) continue;
      ++done;
      const int sum = remoteness(s5, c).value + covering_radius(s5, c);
      if (!check(sum >= 6, why, "strict triangle bound failed")) return false;
    }
  }

  {  // cartesian additivity, 100 cases of S_3 x S_3 codes
    SymmetricGroupSpace s3(3), s6(6);
    std::uniform_int_distribution<std::size_t> pick(0, s3.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Perm> c1, c2;
      for (int j = len(rng); j > 0; --j) c1.push_back(s3.perm_at(pick(rng)));
      for (int j = len(rng); j > 0; --j) c2.push_back(s3.perm_at(pick(rng)));
      const int r1 = remoteness(s3, perm_code_indices(s3, c1)).value;
      const int r2 = remoteness(s3, perm_code_indices(s3, c2)).value;
      const auto prod = cartesian_product_code(c1, c2);
      if (!check(remoteness(s6, perm_code_indices(s6, prod)).value == r1 + r2, why,
                 "cartesian additivity failed"))
        return false;
    }
  }

  {  // average distance identity: exhaustive through degree 6, 100 random
     // permutations per group at degree 7
    for (const auto& e : load_catalog()) {
      if (e.degree > 7) continue;
      PermutationGroup G(e.degree, e.generators);
      SymmetricGroupSpace space(e.degree);
      const long long expected = static_cast<long long>(G.order()) * (e.degree - 1);
      std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
      const bool exhaustive = e.degree <= 6;
      const std::size_t cases = exhaustive ? space.size() : 100;
      for (std::size_t trial = 0; trial < cases; ++trial) {
        const Perm p = space.perm_at(exhaustive ? trial : pick(rng));
        long long total = 0;
        for (const auto& g : G.elements()) total += hamming_distance(p, g);
        if (!check(total == expected, why, e.label() + ": average-distance identity failed"))
          return false;
      }
    }
  }
  return true;
}

// --- criterion 10: valency formula and Latin-square-graph parameters ---
bool criterion_valency(std::string& why) {
  for (const auto& e : load_catalog()) {
    PermutationGroup G(e.degree, e.generators);
    const auto R = build_remoteness_graph(G);
    // degree of every vertex equals the orbital formula
    const long long expected = R.valency_formula();
    for (int v = 0; v < R.vertex_count(); ++v) {
      long long d = 0;
      for (int w = 0; w < R.vertex_count(); ++w)
        if (R.adjacent(v, w)) ++d;
      if (!check(d == expected, why,
                 e.label() + ": vertex degree " + std::to_string(d) + " vs formula " +
                     std::to_string(expected)))
        return false;
    }
  }

  // regular groups of orders 4 and 5
  const PermutationGroup klein(4, {Perm::from_cycles(4, "(0 1)(2 3)"),
                                   Perm::from_cycles(4, "(0 2)(1 3)")});
  for (const auto& G : {klein, cyclic_group(4), cyclic_group(5)}) {
    const int n = G.degree();
    const auto srg = strong_regularity_check(build_remoteness_graph(G));
    bool ok = srg.strongly_regular && srg.vertices == n * n && srg.valency == 3 * (n - 1) &&
              srg.lambda == n && srg.mu == 6;
    if (!check(ok, why, "Latin-square-graph parameters failed at degree " + std::to_string(n)))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"table-reproduction", criterion_table},
      {"one-generator-oracle-equivalence", criterion_one_generator},
      {"pair-remoteness-oracle-equivalence", criterion_pairs},
      {"cyclic-pair-split", criterion_cyclic_pair},
      {"latin-square-suite", criterion_latin},
      {"bachelor-extension", criterion_bachelor},
      {"m-table-degree-4", criterion_m_table},
      {"triple-equivalence", criterion_triple_equivalence},
      {"property-suites", criterion_properties},
      {"valency-formula", criterion_valency},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    std::printf("[%2zu/10] %s  %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].name.c_str(),
                why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
