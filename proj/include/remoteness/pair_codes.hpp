#pragma once

#include <vector>

#include "remoteness/perm.hpp"

namespace rem {

/// The permutation that fixes the first n-e points and cyclically shifts the
/// rest: it is at distance e from the identity and n+1-e from the standard
/// n-cycle. Requires 2 <= e <= n-1.
Perm split_permutation(int n, int e);

struct PairAnalysis {
  int distance;           // d(identity, sigma)
  bool partitionable;     // cycle lengths admit a split into two halves of d/2
  int remoteness;         // d/2 if partitionable, floor(d/2) + 1 otherwise
  Perm minimal_permutation;
};

/// Remoteness of the pair {identity, sigma} from the cycle structure of
/// sigma, together with an explicit permutation attaining it. General pairs
/// reduce to this form by translation. Requires sigma != identity.
PairAnalysis pair_remoteness(const Perm& sigma);

/// Whether r(C) + cr(C) >= n + 1, computed exhaustively over S_n. Holds for
/// every code that is neither a singleton nor all of S_n.
bool strict_triangle_check(const std::vector<Perm>& code, unsigned jobs = 0);

}  // namespace rem
