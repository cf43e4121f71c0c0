// Command-line front end: every computation in the library as a subcommand,
// with text or JSON output. Diagnostics go to stderr; data stays on stdout.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "remoteness/catalog.hpp"
#include "remoteness/group.hpp"
#include "remoteness/json_report.hpp"
#include "remoteness/latin.hpp"
#include "remoteness/metric.hpp"
#include "remoteness/pair_codes.hpp"
#include "remoteness/rgraph.hpp"
#include "remoteness/spaces.hpp"

using nlohmann::json;
using namespace rem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string format = "text";
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  bool verify = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "worker count for parallel scans (0 = all cores)")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "seed for randomized searches")->capture_default_str();
  cmd->add_flag("--verify", opts.verify, "cross-check results against the exhaustive oracle");
}

void emit(const CommonOpts& opts, const json& payload, const std::string& text) {
  if (opts.format == "json") {
    json j = payload;
    j["schema"] = 1;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree, char sep) {
  std::vector<Perm> out;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    const auto start = token.find_first_not_of(" \t");
    if (start == std::string::npos) {
      token.clear();
      return;
    }
    out.push_back(Perm::parse(token, degree));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  if (out.empty()) throw std::invalid_argument("no permutations found in '" + text + "'");
  return out;
}

int run_remoteness(const CommonOpts& opts, int degree, const std::string& code_text) {
  const auto code = parse_perm_list(code_text, degree, ';');
  SymmetricGroupSpace space(degree);
  const Code idx = perm_code_indices(space, code);
  const auto summary = summarize(space, idx, opts.jobs);

  bool verified = true;
  if (opts.verify) {
    if (degree > 6) throw CLI::ValidationError("--verify needs degree <= 6");
    const auto g_at = domination_graph(space, summary.remoteness);
    verified = g_at.strongly_dominates(idx);
    if (summary.remoteness < space_radius(space)) {
      const auto g_above = domination_graph(space, summary.remoteness + 1);
      verified = verified && !g_above.strongly_dominates(idx);
    }
  }

  json j = to_json(summary);
  if (opts.verify) j["verified"] = verified;
  std::ostringstream text;
  text << "remoteness       " << summary.remoteness << "\n"
       << "witness          " << summary.witness_name << "\n"
       << "radius           " << summary.radius << "\n"
       << "diameter         " << summary.diameter << "\n"
       << "covering_radius  " << summary.covering_radius << "\n"
       << "mu_count         " << summary.mu_count << "\n";
  if (opts.verify) text << "verified         " << (verified ? "yes" : "NO") << "\n";
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_pair(const CommonOpts& opts, int degree, const std::string& sigma_text) {
  const Perm sigma = Perm::parse(sigma_text, degree);
  const auto analysis = pair_remoteness(sigma);

  bool verified = true;
  if (opts.verify) {
    if (degree > 6) throw CLI::ValidationError("--verify needs degree <= 6");
    SymmetricGroupSpace space(degree);
    verified = remoteness(space, Code{0, space.index_of(sigma)}, opts.jobs).value ==
               analysis.remoteness;
  }

  json j = to_json(analysis);
  if (opts.verify) j["verified"] = verified;
  std::ostringstream text;
  text << "d                    " << analysis.distance << "\n"
       << "partitionable        " << (analysis.partitionable ? "yes" : "no") << "\n"
       << "remoteness           " << analysis.remoteness << "\n"
       << "minimal_permutation  " << analysis.minimal_permutation.str() << "\n";
  if (opts.verify) text << "verified             " << (verified ? "yes" : "NO") << "\n";
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_group(const CommonOpts& opts, int degree, const std::string& gens_text) {
  const auto gens = parse_perm_list(gens_text, degree, ',');
  PermutationGroup G(degree, gens);

  json j{{"degree", degree}, {"order", G.order()}, {"transitive", G.is_transitive()}};
  std::ostringstream text;
  text << "order       " << G.order() << "\n"
       << "transitive  " << (G.is_transitive() ? "yes" : "no") << "\n";

  bool verified = true;
  if (G.is_transitive()) {
    const auto res = transitive_remoteness(G);
    j["rank"] = G.orbitals().rank;
    j["remoteness"] = res.value;
    j["method"] = res.method;
    if (res.witness) j["witness"] = res.witness->str();
    text << "rank        " << G.orbitals().rank << "\n"
         << "remoteness  " << res.value << "\n"
         << "method      " << res.method << "\n";
    if (res.witness) text << "witness     " << res.witness->str() << "\n";
    if (opts.verify) {
      const auto direct = equidistant_witness_backtracking(G);
      verified = direct.has_value() == (res.value == degree - 1);
      if (degree <= 6) {
        SymmetricGroupSpace space(degree);
        verified = verified && remoteness(space, perm_code_indices(space, G.elements()),
                                          opts.jobs)
                                       .value == res.value;
      }
    }
  } else {
    if (degree > 8)
      throw CLI::ValidationError("intransitive groups are handled exhaustively; degree <= 8 only");
    SymmetricGroupSpace space(degree);
    const auto res = remoteness(space, perm_code_indices(space, G.elements()), opts.jobs);
    j["remoteness"] = res.value;
    j["witness"] = space.point_name(res.witness);
    text << "remoteness  " << res.value << "\n"
         << "witness     " << space.point_name(res.witness) << "\n";
  }
  if (opts.verify) {
    j["verified"] = verified;
    text << "verified    " << (verified ? "yes" : "NO") << "\n";
  }
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_cyclic(const CommonOpts& opts, int degree, const std::string& g_text) {
  const Perm g = Perm::parse(g_text, degree);
  const auto res = cyclic_group_remoteness(g);

  bool verified = true;
  if (opts.verify) {
    if (degree > 6) throw CLI::ValidationError("--verify needs degree <= 6");
    SymmetricGroupSpace space(degree);
    PermutationGroup G(degree, {g});
    verified =
        remoteness(space, perm_code_indices(space, G.elements()), opts.jobs).value == res.value;
  }

  json j{{"generator", g.str()}, {"remoteness", res.value}, {"witness", res.witness.str()}};
  if (opts.verify) j["verified"] = verified;
  std::ostringstream text;
  text << "remoteness  " << res.value << "\n"
       << "witness     " << res.witness.str() << "\n";
  if (opts.verify) text << "verified    " << (verified ? "yes" : "NO") << "\n";
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_dihedral(const CommonOpts& opts, int n) {
  const auto res = dihedral_remoteness(n);
  bool verified = true;
  if (opts.verify) {
    const auto search = transitive_remoteness(dihedral_group(n));
    verified = search.value == res.value;
  }
  json j{{"n", n}, {"order", 2 * n}, {"remoteness", res.value}};
  if (res.witness) j["witness"] = res.witness->str();
  if (opts.verify) j["verified"] = verified;
  std::ostringstream text;
  text << "remoteness  " << res.value << "\n";
  if (res.witness) text << "witness     " << res.witness->str() << "\n";
  if (opts.verify) text << "verified    " << (verified ? "yes" : "NO") << "\n";
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_latin(const CommonOpts& opts, int order, int rows, bool bachelor,
              unsigned long long budget) {
  if (bachelor) {
    const auto res = find_bachelor_square(order, opts.seed, budget, opts.jobs);
    json j{{"order", order}, {"squares_examined", res.squares_examined}};
    std::ostringstream text;
    switch (res.outcome) {
      case BachelorSearchResult::Outcome::found: {
        j["outcome"] = "found";
        j["square"] = to_json(res.found->square);
        j["cell"] = {res.found->row, res.found->col};
        text << "confirmed bachelor found; cell (" << res.found->row << "," << res.found->col
             << ") lies on no transversal\n"
             << res.found->square.str();
        break;
      }
      case BachelorSearchResult::Outcome::exhausted:
        j["outcome"] = "exhausted";
        text << "search space exhausted without a confirmed bachelor\n";
        break;
      case BachelorSearchResult::Outcome::budget_exhausted:
        j["outcome"] = "budget exhausted";
        text << "budget exhausted without a confirmed bachelor (not a nonexistence claim)\n";
        break;
    }
    emit(opts, j, text.str());
    return res.outcome == BachelorSearchResult::Outcome::found ? kExitOk : kExitVerifyFailed;
  }

  const auto L = cyclic_latin(order);
  const int k = rows == 0 ? order : rows;
  const auto bound = first_rows_remoteness(L, k, true, opts.jobs);
  const auto transversal = find_transversal(L);

  json j{{"order", order},
         {"rows", k},
         {"square", to_json(L)},
         {"lower_bound", bound.lower_bound},
         {"improved", bound.improved},
         {"has_transversal", transversal.has_value()}};
  if (bound.exact) j["exact"] = *bound.exact;
  if (transversal) j["transversal_permutation"] = transversal_permutation(L, *transversal).str();

  std::ostringstream text;
  text << "cyclic square of order " << order << ", first " << k << " rows\n"
       << "lower_bound      " << bound.lower_bound << (bound.improved ? " (improved)" : "") << "\n";
  if (bound.exact) text << "exact            " << *bound.exact << "\n";
  text << "has_transversal  " << (transversal ? "yes" : "no") << "\n";
  if (transversal)
    text << "transversal      " << transversal_permutation(L, *transversal).str() << "\n";

  bool verified = true;
  if (opts.verify && bound.exact) verified = *bound.exact >= bound.lower_bound;
  if (opts.verify) {
    j["verified"] = verified;
    text << "verified         " << (verified ? "yes" : "NO") << "\n";
  }
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_bachelor(const CommonOpts& opts, int order, unsigned long long budget, bool extend) {
  if (!extend) return run_latin(opts, order, 0, true, budget);

  const auto ext = extended_latin_code(order, opts.seed, budget, opts.jobs);
  json words = json::array();
  for (const auto& p : ext.code) words.push_back(p.str());
  json j{{"order", order},
         {"square", to_json(ext.square)},
         {"bachelor_cell", {ext.bachelor_row, ext.bachelor_col}},
         {"code", words},
         {"size", ext.code.size()}};
  std::ostringstream text;
  text << "extended code of size " << ext.code.size() << " (rows + transpositions)\n";
  for (const auto& p : ext.code) text << "  " << p.str() << "\n";

  bool verified = true;
  if (opts.verify) {
    if (order > 6) throw CLI::ValidationError("--verify needs order <= 6");
    SymmetricGroupSpace space(order);
    verified = remoteness(space, perm_code_indices(space, ext.code), opts.jobs).value == order;
    j["verified"] = verified;
    text << "verified: remoteness " << (verified ? "equals" : "DOES NOT equal") << " " << order
         << "\n";
  }
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_rgraph(const CommonOpts& opts, int degree, const std::string& gens_text, bool edges) {
  const auto gens = parse_perm_list(gens_text, degree, ',');
  PermutationGroup G(degree, gens);
  const auto R = build_remoteness_graph(G);
  const auto stab = stability_number(R);
  const auto stats = graph_stats(R);

  json j = to_json(stab, degree);
  j["valency"] = stats.valency;
  j["valency_formula"] = stats.valency_formula;
  j["vertices"] = R.vertex_count();
  j["clique_lower"] = stats.clique_lower;
  if (stats.clique_exact) j["clique"] = *stats.clique_exact;
  if (edges) j["edges"] = R.edge_list();

  bool verified = true;
  if (opts.verify) {
    const auto direct = equidistant_witness_backtracking(G);
    verified = direct.has_value() == (stab.alpha == degree);
    if (stab.witness_perm) verified = verified && orbital_witness_valid(G, *stab.witness_perm);
    j["verified"] = verified;
  }

  std::ostringstream text;
  text << "vertices  " << R.vertex_count() << "\n"
       << "valency   " << stats.valency << " (formula " << stats.valency_formula << ")\n"
       << "alpha     " << stab.alpha << (stab.alpha == degree ? "  => remoteness n-1" : "") << "\n";
  if (stab.witness_perm) text << "witness   " << stab.witness_perm->str() << "\n";
  if (stats.clique_exact) text << "clique    " << *stats.clique_exact << "\n";
  if (opts.verify) text << "verified  " << (verified ? "yes" : "NO") << "\n";
  if (edges) text << R.edge_list();
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_mtable(const CommonOpts& opts, int degree, int tmax, unsigned long long budget) {
  SymmetricGroupSpace space(degree);
  const int top = tmax < 0 ? space_radius(space) : tmax;
  json rows = json::array();
  std::ostringstream text;
  bool verified = true;
  text << "t  m(S_" << degree << ",t)\n";
  for (int t = 0; t <= top; ++t) {
    const auto r = min_code_size(space, t, budget, opts.jobs);
    json row = to_json(r);
    row["t"] = t;
    if (t >= 1) {
      const auto b = bound_min_code_size(space, t);
      row["lower_bound"] = b.lower;
      row["upper_bound"] = b.upper;
      if (opts.verify && r.outcome == MinCodeOutcome::found && b.lower > r.size)
        verified = false;
    }
    if (opts.verify && r.outcome == MinCodeOutcome::found) {
      const bool witness_ok = remoteness(space, r.witness, opts.jobs).value == t;
      if (!witness_ok) verified = false;
      row["verified"] = witness_ok;
    }
    rows.push_back(row);
    text << t << "  ";
    switch (r.outcome) {
      case MinCodeOutcome::found:
        text << r.size;
        break;
      case MinCodeOutcome::unattainable:
        text << "unattainable";
        break;
      case MinCodeOutcome::budget_exceeded:
        text << "exceeds search budget";
        break;
    }
    text << "\n";
  }
  if (opts.verify) text << "verified  " << (verified ? "yes" : "NO") << "\n";
  json j{{"degree", degree}, {"rows", rows}};
  if (opts.verify) j["verified"] = verified;
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_table(const CommonOpts& opts, const std::string& data_path) {
  const auto entries = data_path.empty() ? load_catalog() : load_catalog(data_path);
  const auto report = verify_table(entries, opts.jobs);
  emit(opts, to_json(report), report.text());
  return report.all_ok ? kExitOk : kExitVerifyFailed;
}

int run_bounds(const CommonOpts& opts, const std::string& space_kind, int degree, int length,
               int alphabet, int t) {
  std::unique_ptr<FiniteMetricSpace> space;
  std::string name;
  if (space_kind == "symmetric") {
    space = std::make_unique<SymmetricGroupSpace>(degree);
    name = "S_" + std::to_string(degree);
  } else {
    space = std::make_unique<HammingGraphSpace>(length, alphabet);
    name = "H(" + std::to_string(length) + "," + std::to_string(alphabet) + ")";
  }
  const auto b = bound_min_code_size(*space, t);
  json j{{"space", name},
         {"t", t},
         {"lower", b.lower},
         {"upper", b.upper},
         {"min_ball_volume", space->min_ball_volume(t - 1)},
         {"max_ball_volume", space->max_ball_volume(t - 1)}};
  std::ostringstream text;
  text << name << ", t = " << t << "\n"
       << "lower  " << b.lower << "\n"
       << "upper  " << b.upper << "\n";

  bool verified = true;
  if (opts.verify) {
    if (space->size() > 720) throw CLI::ValidationError("--verify needs a space of at most 720 points");
    const auto m = min_code_size(*space, t);
    if (m.outcome == MinCodeOutcome::found) {
      verified = b.lower <= static_cast<double>(m.size);
      j["exact"] = m.size;
      text << "exact  " << m.size << "\n";
    }
    j["verified"] = verified;
    text << "verified  " << (verified ? "yes" : "NO") << "\n";
  }
  emit(opts, j, text.str());
  return verified ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"remoteness of permutation codes and groups under Hamming distance"};
  app.require_subcommand(1);

  CommonOpts opts;

  // remoteness
  auto* cmd_rem = app.add_subcommand("remoteness", "summary of a permutation code");
  int rem_degree = 0;
  std::string rem_code;
  cmd_rem->add_option("--degree", rem_degree, "degree n")->required();
  cmd_rem->add_option("--code", rem_code,
                      "codewords separated by ';', in image or cycle notation")
      ->required();
  add_common(cmd_rem, opts);

  // pair
  auto* cmd_pair = app.add_subcommand("pair", "remoteness of {identity, sigma}");
  int pair_degree = 0;
  std::string pair_sigma;
  cmd_pair->add_option("--degree", pair_degree, "degree n")->required();
  cmd_pair->add_option("--sigma", pair_sigma, "the second codeword")->required();
  add_common(cmd_pair, opts);

  // group
  auto* cmd_group = app.add_subcommand("group", "remoteness of a permutation group");
  int group_degree = 0;
  std::string group_gens;
  cmd_group->add_option("--degree", group_degree, "degree n")->required();
  cmd_group->add_option("--generators", group_gens, "generators separated by ','")->required();
  add_common(cmd_group, opts);

  // cyclic
  auto* cmd_cyclic = app.add_subcommand("cyclic", "remoteness of the group generated by one element");
  int cyc_degree = 0;
  std::string cyc_g;
  cmd_cyclic->add_option("--degree", cyc_degree, "degree n")->required();
  cmd_cyclic->add_option("--g", cyc_g, "the generator")->required();
  add_common(cmd_cyclic, opts);

  // dihedral
  auto* cmd_dihedral = app.add_subcommand("dihedral", "remoteness of the dihedral group of order 2n");
  int dih_n = 0;
  cmd_dihedral->add_option("--n", dih_n, "number of points")->required()->check(CLI::Range(3, 1000));
  add_common(cmd_dihedral, opts);

  // latin
  auto* cmd_latin = app.add_subcommand("latin", "cyclic Latin square rows as a code");
  int latin_order = 0, latin_rows = 0;
  bool latin_bachelor = false;
  unsigned long long latin_budget = 20000;
  cmd_latin->add_option("--order", latin_order, "square order")->required()->check(CLI::Range(1, 16));
  cmd_latin->add_option("--rows", latin_rows, "use only the first k rows (default: all)");
  cmd_latin->add_flag("--bachelor", latin_bachelor, "search for a confirmed-bachelor square instead");
  cmd_latin->add_option("--budget", latin_budget, "square budget for the randomized search");
  add_common(cmd_latin, opts);

  // bachelor
  auto* cmd_bachelor = app.add_subcommand("bachelor", "confirmed-bachelor search and extension");
  int bach_order = 0;
  bool bach_extend = false;
  unsigned long long bach_budget = 20000;
  cmd_bachelor->add_option("--order", bach_order, "square order (odd)")->required();
  cmd_bachelor->add_flag("--extend", bach_extend,
                         "emit the extended code of size (3n-1)/2 with remoteness n");
  cmd_bachelor->add_option("--budget", bach_budget, "square budget for the randomized search");
  add_common(cmd_bachelor, opts);

  // rgraph
  auto* cmd_rgraph = app.add_subcommand("rgraph", "remoteness graph of a transitive group");
  int rg_degree = 0;
  std::string rg_gens;
  bool rg_edges = false;
  cmd_rgraph->add_option("--degree", rg_degree, "degree n")->required();
  cmd_rgraph->add_option("--generators", rg_gens, "generators separated by ','")->required();
  cmd_rgraph->add_flag("--edges", rg_edges, "dump the edge list");
  add_common(cmd_rgraph, opts);

  // mtable
  auto* cmd_mtable = app.add_subcommand("mtable", "minimum code sizes per remoteness target");
  int mt_degree = 0, mt_tmax = -1;
  unsigned long long mt_budget = 1000000000ULL;
  cmd_mtable->add_option("--degree", mt_degree, "degree n")->required()->check(CLI::Range(1, 10));
  cmd_mtable->add_option("--tmax", mt_tmax, "largest t (default: the radius)");
  cmd_mtable->add_option("--budget", mt_budget, "candidate budget per table");
  add_common(cmd_mtable, opts);

  // table
  auto* cmd_table = app.add_subcommand("table", "verify the transitive-group catalog");
  std::string table_data;
  cmd_table->add_option("--data", table_data, "path to the catalog data file");
  add_common(cmd_table, opts);

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "set-cover bounds on the minimum code size");
  std::string bounds_space = "symmetric";
  int bounds_degree = 0, bounds_length = 0, bounds_alphabet = 2, bounds_t = 1;
  cmd_bounds->add_option("--space", bounds_space, "symmetric or hamming")
      ->check(CLI::IsMember({"symmetric", "hamming"}))
      ->capture_default_str();
  cmd_bounds->add_option("--degree", bounds_degree, "degree for the symmetric space");
  cmd_bounds->add_option("--length", bounds_length, "word length for the Hamming space");
  cmd_bounds->add_option("--alphabet", bounds_alphabet, "alphabet size for the Hamming space");
  cmd_bounds->add_option("--t", bounds_t, "remoteness target")->required();
  add_common(cmd_bounds, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_rem->parsed()) return run_remoteness(opts, rem_degree, rem_code);
    if (cmd_pair->parsed()) return run_pair(opts, pair_degree, pair_sigma);
    if (cmd_group->parsed()) return run_group(opts, group_degree, group_gens);
    if (cmd_cyclic->parsed()) return run_cyclic(opts, cyc_degree, cyc_g);
    if (cmd_dihedral->parsed()) return run_dihedral(opts, dih_n);
    if (cmd_latin->parsed())
      return run_latin(opts, latin_order, latin_rows, latin_bachelor, latin_budget);
    if (cmd_bachelor->parsed()) return run_bachelor(opts, bach_order, bach_budget, bach_extend);
    if (cmd_rgraph->parsed()) return run_rgraph(opts, rg_degree, rg_gens, rg_edges);
    if (cmd_mtable->parsed()) return run_mtable(opts, mt_degree, mt_tmax, mt_budget);
    if (cmd_table->parsed()) return run_table(opts, table_data);
    if (cmd_bounds->parsed())
      return run_bounds(opts, bounds_space, bounds_degree, bounds_length, bounds_alphabet,
                        bounds_t);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
