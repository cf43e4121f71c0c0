#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remoteness/perm.hpp"

namespace rem {

/// Orbits of a group on ordered pairs of points, acting coordinatewise.
/// Labels are assigned by the least pair of each orbit in lexicographic
/// scan order, so on a transitive group the diagonal is orbital 0.
struct OrbitalPartition {
  int degree = 0;
  int rank = 0;
  std::vector<int> label;       // degree*degree entries, label[x*degree + y]
  std::vector<long long> sizes; // per orbital

  int label_of(int x, int y) const { return label[static_cast<std::size_t>(x * degree + y)]; }
  bool diagonal_is_single_orbital() const;
  /// Sizes of the non-diagonal orbitals (any orbital containing a
  /// non-diagonal pair).
  std::vector<long long> nondiagonal_sizes() const;
};

/// A permutation group given by generators, with the element closure, point
/// orbits and orbital partition computed on demand and cached. Closure is
/// guarded by an order cap. Not safe for concurrent first access; compute
/// the lazy parts before sharing across threads.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Perm> generators, std::size_t order_cap = 100000);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// All elements, sorted lexicographically; computed on first use.
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

  std::vector<std::vector<int>> point_orbits() const;
  bool is_transitive() const;
  const OrbitalPartition& orbitals() const;
  bool is_2transitive() const;

  /// Whether |G| = degree and the action is transitive (hence free).
  bool is_regular() const;

  /// Subgroup fixing the given point, as a group on the same degree.
  PermutationGroup stabilizer(int point) const;

private:
  int degree_;
  std::vector<Perm> generators_;
  std::size_t order_cap_;
  mutable std::optional<std::vector<Perm>> elements_;
  mutable std::optional<OrbitalPartition> orbitals_;
};

PermutationGroup cyclic_group(int n);
/// Dihedral group of order 2n acting on {0,...,n-1} (rotation plus
/// reflection j -> -j mod n). Requires n >= 3.
PermutationGroup dihedral_group(int n);

struct CyclicRemoteness {
  int value;
  Perm witness;  // attains max distance `value` over the whole cyclic group
};

/// Remoteness of the cyclic group generated by g, from the cycle type of g:
/// with s moved points and k nontrivial cycles, the value is s - k for even
/// g and s - k + 1 for odd g (fixed points do not contribute). The witness
/// is built per cycle and verified against every power of g.
CyclicRemoteness cyclic_group_remoteness(const Perm& g);

/// A pair of permutations of degree 2m whose distances to the powers of the
/// standard 2m-cycle alternate between 2m-2 and 2m, the first pair member
/// meeting even powers at 2m-2 and the second odd powers.
std::pair<Perm, Perm> alternating_distance_pair(int m);

struct DihedralRemoteness {
  int value;  // n-1 when n is coprime to 6, n otherwise
  std::optional<Perm> witness;  // j -> 2j mod n in the n-1 case
};

DihedralRemoteness dihedral_remoteness(int n);

struct TransitiveRemoteness {
  int value;  // always n-1 or n
  std::optional<Perm> witness;  // permutation at distance n-1 from all of G
  std::string method;  // which criterion decided
};

/// Remoteness of a transitive group: n-1 exactly when some permutation is at
/// distance n-1 from every element, n otherwise. Decided by a fixed chain of
/// shortcuts (2-transitivity, a large suborbit, odd order, the regular-group
/// complete-mapping criterion) with independent-set search over the
/// remoteness graph as the general fallback.
TransitiveRemoteness transitive_remoteness(const PermutationGroup& G);

/// Orbital criterion: pi is at distance n-1 from every element of the
/// transitive group G exactly when no non-diagonal orbital contains both
/// (x,y) and (x pi, y pi).
bool orbital_witness_valid(const PermutationGroup& G, const Perm& pi);

/// Direct backtracking over images: builds a permutation that agrees with
/// every group element at most once. On a transitive group any completion is
/// automatically at distance n-1 from all elements. Independent of the
/// orbital machinery; returns the lexicographically least witness.
std::optional<Perm> equidistant_witness_backtracking(const PermutationGroup& G);

/// Block concatenation: acts as c1 on the first n1 points and as c2,
/// shifted, on the rest. Remoteness is additive over the factors.
std::vector<Perm> cartesian_product_code(const std::vector<Perm>& code1,
                                         const std::vector<Perm>& code2);
Perm cartesian_product_perm(const Perm& a, const Perm& b);

struct RestrictedCode {
  int degree = 0;                // 0 when every point was removed
  std::vector<Perm> code;        // empty at degree 0; remoteness is then 0
  std::vector<int> removed_points;
  Perm translation;              // applied on the right before restricting
};

/// Removes points on which all codewords agree, after a right translation
/// aligning those points with their images. Remoteness is unchanged. When
/// `points` is given, the codewords must agree on exactly those points.
RestrictedCode restrict_agreeing_points(const std::vector<Perm>& code,
                                        const std::optional<std::vector<int>>& points = std::nullopt);

}  // namespace rem
