#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "remoteness/perm.hpp"

namespace rem {

/// A finite set of points with an integer metric. Points are addressed by
/// index in a fixed enumeration order; for the concrete spaces below that
/// order is lexicographic on the point's word form, so "least index" and
/// "lexicographically least point" coincide.
///
/// Distance queries must be safe from concurrent readers.
class FiniteMetricSpace {
public:
  virtual ~FiniteMetricSpace() = default;

  virtual std::size_t size() const = 0;
  virtual int distance(std::size_t u, std::size_t v) const = 0;
  virtual std::string point_name(std::size_t v) const;

  /// True when the space has distance-preserving translations carrying any
  /// point to point 0 (so searches may fix a first codeword at index 0).
  virtual bool homogeneous() const { return false; }

  /// Ball volumes: |B_t(v)| minimized / maximized over centers v.
  /// Defaults compute them exhaustively; subclasses override with closed
  /// forms where available.
  virtual long long min_ball_volume(int t) const;
  virtual long long max_ball_volume(int t) const;

  /// Exact radius/diameter of the whole space when known in closed form.
  virtual std::optional<int> known_radius() const { return std::nullopt; }
  virtual std::optional<int> known_diameter() const { return std::nullopt; }
};

/// min over points of max distance to any point.
int space_radius(const FiniteMetricSpace& space);
/// max pairwise distance.
int space_diameter(const FiniteMetricSpace& space);

/// All of S_n under Hamming distance, enumerated in lexicographic order of
/// image words (index 0 is the identity). Degrees above 10 are rejected.
class SymmetricGroupSpace final : public FiniteMetricSpace {
public:
  explicit SymmetricGroupSpace(int degree);

  int degree() const { return degree_; }
  std::size_t size() const override { return count_; }
  int distance(std::size_t u, std::size_t v) const override;
  std::string point_name(std::size_t v) const override;
  bool homogeneous() const override { return true; }
  long long min_ball_volume(int t) const override;
  long long max_ball_volume(int t) const override;
  std::optional<int> known_radius() const override;
  std::optional<int> known_diameter() const override;

  Perm perm_at(std::size_t index) const;
  std::size_t index_of(const Perm& p) const;

  const std::uint8_t* word(std::size_t index) const {
    return table_.data() + index * static_cast<std::size_t>(degree_);
  }

private:
  int degree_;
  std::size_t count_;
  std::vector<long long> factorial_;
  std::vector<std::uint8_t> table_;  // n! rows of n images, lex order
};

/// Words of length n over {0,...,q-1} under Hamming distance, enumerated in
/// lexicographic order (first coordinate most significant).
class HammingGraphSpace final : public FiniteMetricSpace {
public:
  HammingGraphSpace(int length, int alphabet);

  int length() const { return length_; }
  int alphabet() const { return alphabet_; }
  std::size_t size() const override { return count_; }
  int distance(std::size_t u, std::size_t v) const override;
  std::string point_name(std::size_t v) const override;
  bool homogeneous() const override { return true; }
  long long min_ball_volume(int t) const override;
  long long max_ball_volume(int t) const override;
  std::optional<int> known_radius() const override { return length_; }
  std::optional<int> known_diameter() const override { return length_; }

  std::vector<int> word_at(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& word) const;

private:
  int length_;
  int alphabet_;
  std::size_t count_;
};

/// Number of permutations of an i-set with no fixed point.
long long derangement_count(int i);
long long binomial(int n, int k);

}  // namespace rem
