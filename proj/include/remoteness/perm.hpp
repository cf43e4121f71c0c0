#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rem {

/// A permutation of {0,...,n-1} in image form: entry i is the image of i.
/// Values are immutable after construction and safe to share across threads.
class Perm {
public:
  /// Validates that `images` is a bijection on {0,...,n-1}, n >= 1.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// The standard cycle i -> i+1 mod n.
  static Perm standard_cycle(int degree);
  /// Parses cycle notation, e.g. "(0 1 2)(3 4)"; points absent from all
  /// cycles are fixed. "()" and "id" denote the identity.
  static Perm from_cycles(int degree, const std::string& text);
  /// Parses either comma-separated image form ("2,0,1") or cycle notation.
  /// Cycle notation requires `degree`.
  static Perm parse(const std::string& text, std::optional<int> degree = std::nullopt);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Apply *this first, then `then`: i -> then[this[i]].
  Perm compose(const Perm& then) const;
  Perm inverse() const;
  Perm power(long long exponent) const;

  /// Comma-separated image form, e.g. "2,0,1".
  std::string str() const;
  /// Cycle notation with fixed points omitted; identity renders as "()".
  std::string cycle_str() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

/// Number of points where the two permutations differ. Degrees must match.
int hamming_distance(const Perm& a, const Perm& b);

/// Nontrivial cycles (length >= 2) plus fixed points. Each cycle starts at
/// its least point; cycles are listed by least point ascending.
struct CycleStructure {
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed_points;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  std::vector<int> lengths() const;
  /// Total number of moved points; equals hamming_distance(p, identity).
  int support_size() const;
};

CycleStructure cycle_structure(const Perm& p);

enum class Parity { even, odd };

Parity parity(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace rem
