#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "remoteness/perm.hpp"

namespace rem {

/// An n x n array over {0,...,n-1} with every symbol exactly once per row
/// and per column. Rows read as image sequences are permutations.
class LatinSquare {
public:
  LatinSquare(int order, std::vector<int> cells);  // row-major; validates

  int order() const { return order_; }
  int at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row * order_ + col)];
  }
  Perm row(int r) const;
  std::vector<Perm> rows() const;

  /// Whether L(i,j) = (i + j) mod n.
  bool is_cyclic() const;

  /// n lines of comma-separated symbols.
  std::string str() const;
  static LatinSquare parse(const std::string& text);

  bool operator==(const LatinSquare&) const = default;

private:
  int order_;
  std::vector<int> cells_;
};

/// The square L(i,j) = (i + j) mod n; its rows are the powers of the
/// standard cycle in image form.
LatinSquare cyclic_latin(int n);

/// A transversal stored as the column picked in each row; the n cells cover
/// all rows, all columns and all symbols.
using Transversal = std::vector<int>;

/// Read a transversal as the permutation mapping each column to the symbol
/// of the transversal cell in that column; it is at Hamming distance n-1
/// from every row of the square.
Perm transversal_permutation(const LatinSquare& square, const Transversal& t);

/// Backtracking search; nullopt certifies that no transversal exists.
std::optional<Transversal> find_transversal(const LatinSquare& square);
bool has_transversal_through(const LatinSquare& square, int row, int col);
long long count_transversals(const LatinSquare& square);

struct RowsRemoteness {
  int lower_bound;
  bool improved;  // the strengthened bound for even k dividing n on the cyclic square
  std::optional<int> exact;
};

/// Lower bound n - floor(n/k) on the remoteness of the first k rows, with
/// the improvement to n - n/k + 1 when k is even, k divides n and the square
/// is cyclic. The exact value is computed by exhaustive search when the
/// order is small enough (n <= 7).
RowsRemoteness first_rows_remoteness(const LatinSquare& square, int k, bool compute_exact = true,
                                     unsigned jobs = 0);

struct BachelorSquare {
  LatinSquare square;
  int row;
  int col;  // cell through which no transversal passes
};

struct BachelorSearchResult {
  enum class Outcome { found, exhausted, budget_exhausted };
  Outcome outcome;
  std::optional<BachelorSquare> found;
  unsigned long long squares_examined = 0;
};

/// Searches for a Latin square of odd order n with a cell avoided by every
/// transversal. Order 5 (and 3) is settled by exhausting reduced squares;
/// larger odd orders use randomized row-completion with restarts spread over
/// `jobs` workers (each restart index is seeded independently, so the result
/// does not depend on the worker count). A failed search is reported as
/// such, never as a nonexistence claim.
BachelorSearchResult find_bachelor_square(int n, std::uint64_t seed = 0,
                                          unsigned long long budget = 20000, unsigned jobs = 0);

/// All reduced Latin squares (first row and first column in natural order).
/// Guarded to n <= 5.
std::vector<LatinSquare> reduced_latin_squares(int n);

struct NormalizedBachelor {
  LatinSquare square;  // first row = identity, bachelor cell at (0, n-1)
  std::vector<int> row_order;  // new row i was old row row_order[i]
  std::vector<int> col_order;
  std::vector<int> relabel;    // symbol s renamed to relabel[s]
};

/// Moves the bachelor cell into the identity row, last column. The cell must
/// sit in the row that becomes the identity so that the transposition
/// extension below blocks every possible fixed point.
NormalizedBachelor normalize_bachelor(const BachelorSquare& b);

struct ExtendedLatinCode {
  std::vector<Perm> code;  // rows of the normalized square plus transpositions
  LatinSquare square;
  int bachelor_row;
  int bachelor_col;
};

/// For odd n >= 5: the rows of a normalized confirmed-bachelor square
/// together with the transpositions (0 1),(2 3),...,(n-3 n-2). The resulting
/// code has (3n-1)/2 codewords and remoteness exactly n.
ExtendedLatinCode extended_latin_code(int n, std::uint64_t seed = 0,
                                      unsigned long long budget = 20000, unsigned jobs = 0);

}  // namespace rem
