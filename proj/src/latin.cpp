#include "remoteness/latin.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "remoteness/metric.hpp"
#include "remoteness/parallel.hpp"
#include "remoteness/spaces.hpp"

namespace rem {

LatinSquare::LatinSquare(int order, std::vector<int> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order < 1) throw std::invalid_argument("Latin square order must be >= 1");
  if (cells_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw std::invalid_argument("cell count does not match order");
  for (int r = 0; r < order_; ++r) {
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    for (int c = 0; c < order_; ++c) {
      const int v = at(r, c);
      if (v < 0 || v >= order_ || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("row " + std::to_string(r) + " is not Latin");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int c = 0; c < order_; ++c) {
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    for (int r = 0; r < order_; ++r) {
      const int v = at(r, c);
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("column " + std::to_string(c) + " is not Latin");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

Perm LatinSquare::row(int r) const {
  std::vector<int> img(static_cast<std::size_t>(order_));
  for (int c = 0; c < order_; ++c) img[static_cast<std::size_t>(c)] = at(r, c);
  return Perm(std::move(img));
}

std::vector<Perm> LatinSquare::rows() const {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int r = 0; r < order_; ++r) out.push_back(row(r));
  return out;
}

bool LatinSquare::is_cyclic() const {
  for (int r = 0; r < order_; ++r)
    for (int c = 0; c < order_; ++c)
      if (at(r, c) != (r + c) % order_) return false;
  return true;
}

std::string LatinSquare::str() const {
  std::string out;
  for (int r = 0; r < order_; ++r) {
    for (int c = 0; c < order_; ++c) {
      if (c) out += ',';
      out += std::to_string(at(r, c));
    }
    out += '\n';
  }
  return out;
}

LatinSquare LatinSquare::parse(const std::string& text) {
  std::vector<int> cells;
  std::istringstream in(text);
  std::string line;
  int order = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string tok;
    int count = 0;
    while (std::getline(ls, tok, ',')) {
      cells.push_back(std::stoi(tok));
      ++count;
    }
    if (order < 0)
      order = count;
    else if (count != order)
      throw std::invalid_argument("ragged Latin square input");
  }
  if (order <= 0) throw std::invalid_argument("empty Latin square input");
  return LatinSquare(order, std::move(cells));
}

LatinSquare cyclic_latin(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(r * n + c)] = (r + c) % n;
  return LatinSquare(n, std::move(cells));
}

Perm transversal_permutation(const LatinSquare& square, const Transversal& t) {
  const int n = square.order();
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("transversal size mismatch");
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    const int c = t[static_cast<std::size_t>(r)];
    img[static_cast<std::size_t>(c)] = square.at(r, c);
  }
  return Perm(std::move(img));
}

namespace {

struct TransversalScan {
  const LatinSquare& L;
  std::vector<int> row_order;
  Transversal pick;
  Transversal* out = nullptr;
  long long* count_all = nullptr;

  // Fills rows in order with column/symbol bitmasks; returns true to stop.
  bool fill(std::size_t depth, std::uint32_t cols_used, std::uint32_t syms_used) {
    if (depth == row_order.size()) {
      if (count_all) {
        ++*count_all;
        return false;
      }
      if (out) *out = pick;
      return true;
    }
    const int r = row_order[depth];
    for (int c = 0; c < L.order(); ++c) {
      if (cols_used & (1u << c)) continue;
      const int s = L.at(r, c);
      if (syms_used & (1u << s)) continue;
      pick[static_cast<std::size_t>(r)] = c;
      if (fill(depth + 1, cols_used | (1u << c), syms_used | (1u << s))) return true;
    }
    return false;
  }
};

// `fixed_row`, when >= 0, is assigned `fixed_col` up front.
bool transversal_search(const LatinSquare& L, int fixed_row, int fixed_col, Transversal* out,
                        long long* count_all) {
  TransversalScan scan{L, {}, Transversal(static_cast<std::size_t>(L.order()), -1), out, count_all};
  std::uint32_t cols_used = 0, syms_used = 0;
  if (fixed_row >= 0) {
    cols_used |= 1u << fixed_col;
    syms_used |= 1u << L.at(fixed_row, fixed_col);
    scan.pick[static_cast<std::size_t>(fixed_row)] = fixed_col;
  }
  for (int r = 0; r < L.order(); ++r)
    if (r != fixed_row) scan.row_order.push_back(r);
  const bool stopped = scan.fill(0, cols_used, syms_used);
  if (count_all) return *count_all > 0;
  return stopped;
}

}  // namespace

std::optional<Transversal> find_transversal(const LatinSquare& square) {
  Transversal t;
  if (transversal_search(square, -1, -1, &t, nullptr)) return t;
  return std::nullopt;
}

bool has_transversal_through(const LatinSquare& square, int row, int col) {
  Transversal t;
  return transversal_search(square, row, col, &t, nullptr);
}

long long count_transversals(const LatinSquare& square) {
  long long count = 0;
  transversal_search(square, -1, -1, nullptr, &count);
  return count;
}

RowsRemoteness first_rows_remoteness(const LatinSquare& square, int k, bool compute_exact,
                                     unsigned jobs) {
  const int n = square.order();
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, order]");
  RowsRemoteness out{n - n / k, false, std::nullopt};
  if (k % 2 == 0 && n % k == 0 && square.is_cyclic()) {
    out.lower_bound = n - n / k + 1;
    out.improved = true;
  }
  if (compute_exact && n >= 2 && n <= 7) {
    SymmetricGroupSpace space(n);
    Code code;
    for (int r = 0; r < k; ++r) code.push_back(space.index_of(square.row(r)));
    std::sort(code.begin(), code.end());
    out.exact = remoteness(space, code, jobs).value;
  }
  return out;
}

namespace {

// Backtracking enumeration of Latin squares with first row 0..n-1 and, when
// `reduced`, first column 0..n-1. visit returns true to stop.
struct SquareScan {
  int n;
  bool reduced;
  std::vector<int> cells;
  std::vector<std::uint32_t> col_used;

  template <class Visit>
  bool fill(int r, int c, std::uint32_t row_used, Visit&& visit) {
    if (c == n) return fill(r + 1, 0, 0, visit);
    if (r == n) return visit(LatinSquare(n, cells));
    for (int v = 0; v < n; ++v) {
      if (reduced && c == 0 && v != r) continue;
      if (row_used & (1u << v)) continue;
      if (col_used[static_cast<std::size_t>(c)] & (1u << v)) continue;
      cells[static_cast<std::size_t>(r * n + c)] = v;
      col_used[static_cast<std::size_t>(c)] |= 1u << v;
      if (fill(r, c + 1, row_used | (1u << v), visit)) return true;
      col_used[static_cast<std::size_t>(c)] &= ~(1u << v);
    }
    return false;
  }
};

template <class Visit>
void enumerate_squares(int n, bool reduced, Visit&& visit) {
  SquareScan scan{n, reduced,
                  std::vector<int>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (int c = 0; c < n; ++c) {
    scan.cells[static_cast<std::size_t>(c)] = c;
    scan.col_used[static_cast<std::size_t>(c)] |= 1u << c;
  }
  scan.fill(1, 0, 0, visit);
}

std::optional<std::pair<int, int>> bachelor_cell_of(const LatinSquare& L) {
  const int n = L.order();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!has_transversal_through(L, r, c)) return std::make_pair(r, c);
  return std::nullopt;
}

std::optional<LatinSquare> random_square(int n, std::mt19937_64& rng, int attempts) {
  for (int a = 0; a < attempts; ++a) {
    std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    std::vector<std::uint32_t> col_used(static_cast<std::size_t>(n), 0);
    bool dead = false;
    for (int r = 0; r < n && !dead; ++r) {
      std::uint32_t row_used = 0;
      // random cell-by-cell completion of the row; restart the square on a
      // dead end
      for (int c = 0; c < n; ++c) {
        std::vector<int> options;
        for (int v = 0; v < n; ++v)
          if (!(row_used & (1u << v)) && !(col_used[static_cast<std::size_t>(c)] & (1u << v)))
            options.push_back(v);
        if (options.empty()) {
          dead = true;
          break;
        }
        const int v = options[std::uniform_int_distribution<std::size_t>(
            0, options.size() - 1)(rng)];
        cells[static_cast<std::size_t>(r * n + c)] = v;
        row_used |= 1u << v;
        col_used[static_cast<std::size_t>(c)] |= 1u << v;
      }
    }
    if (!dead) return LatinSquare(n, std::move(cells));
  }
  return std::nullopt;
}

}  // namespace

std::vector<LatinSquare> reduced_latin_squares(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("reduced-square enumeration is guarded to n <= 5");
  std::vector<LatinSquare> out;
  enumerate_squares(n, true, [&](const LatinSquare& L) {
    out.push_back(L);
    return false;
  });
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

BachelorSearchResult find_bachelor_square(int n, std::uint64_t seed, unsigned long long budget,
                                          unsigned jobs) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("bachelor search expects odd order >= 3");

  BachelorSearchResult res{BachelorSearchResult::Outcome::exhausted, std::nullopt, 0};

  if (n <= 5) {
    // Every square of these orders reduces to a representative with first
    // row and column in natural order without disturbing which cells carry
    // transversals, so exhausting reduced squares settles existence.
    bool stop = false;
    enumerate_squares(n, true, [&](const LatinSquare& L) {
      ++res.squares_examined;
      if (auto cell = bachelor_cell_of(L)) {
        res.outcome = BachelorSearchResult::Outcome::found;
        res.found = BachelorSquare{L, cell->first, cell->second};
        stop = true;
      }
      return stop;
    });
    return res;
  }

  // Each restart index carries its own seed, so the answer is the least
  // successful index no matter how many workers share the range.
  const unsigned workers = resolve_jobs(jobs);
  std::atomic<unsigned long long> best_index{budget};
  std::vector<std::optional<BachelorSquare>> hits(workers);
  run_workers(workers, [&](unsigned w) {
    for (unsigned long long i = w; i < budget; i += workers) {
      if (i > best_index.load(std::memory_order_relaxed)) break;
      std::mt19937_64 rng(mix_seed(seed, i));
      auto square = random_square(n, rng, 64);
      if (!square) continue;
      if (auto cell = bachelor_cell_of(*square)) {
        hits[w] = BachelorSquare{*square, cell->first, cell->second};
        unsigned long long cur = best_index.load(std::memory_order_relaxed);
        while (i < cur && !best_index.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        break;
      }
    }
  });

  const unsigned long long winner = best_index.load();
  if (winner < budget) {
    // restart indices consumed up to the successful one, independent of the
    // worker count
    res.squares_examined = winner + 1;
    res.outcome = BachelorSearchResult::Outcome::found;
    res.found = hits[static_cast<std::size_t>(winner % workers)];
    return res;
  }
  res.squares_examined = budget;
  res.outcome = BachelorSearchResult::Outcome::budget_exhausted;
  return res;
}

NormalizedBachelor normalize_bachelor(const BachelorSquare& b) {
  const int n = b.square.order();
  NormalizedBachelor out{b.square, {}, {}, {}};

  // Row order: bachelor row first, the rest in their original order.
  out.row_order.push_back(b.row);
  for (int r = 0; r < n; ++r)
    if (r != b.row) out.row_order.push_back(r);
  // Column order: bachelor column last.
  for (int c = 0; c < n; ++c)
    if (c != b.col) out.col_order.push_back(c);
  out.col_order.push_back(b.col);

  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      cells[static_cast<std::size_t>(r * n + c)] =
          b.square.at(out.row_order[static_cast<std::size_t>(r)],
                      out.col_order[static_cast<std::size_t>(c)]);

  // Rename symbols so the first row becomes the identity.
  out.relabel.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) out.relabel[static_cast<std::size_t>(cells[static_cast<std::size_t>(c)])] = c;
  for (auto& v : cells) v = out.relabel[static_cast<std::size_t>(v)];

  out.square = LatinSquare(n, std::move(cells));
  return out;
}

ExtendedLatinCode extended_latin_code(int n, std::uint64_t seed, unsigned long long budget,
                                      unsigned jobs) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("extended code needs odd order >= 5");
  const auto search = find_bachelor_square(n, seed, budget, jobs);
  if (search.outcome != BachelorSearchResult::Outcome::found)
    throw std::runtime_error("no confirmed-bachelor square available at order " + std::to_string(n));

  const auto norm = normalize_bachelor(*search.found);
  ExtendedLatinCode out{norm.square.rows(), norm.square, 0, n - 1};
  for (int i = 0; i + 1 < n; i += 2) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i + 1)]);
    out.code.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace rem
