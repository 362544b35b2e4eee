#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symkron/partition.hpp"

namespace symkron {

/// Largest degree for which one-line ranks fit in 64 bits (20! < 2^63).
inline constexpr int kMaxPermIndexDegree = 20;

/// A permutation of {1..n} in one-line notation: entry i-1 of images() is
/// the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Parses the bracketed one-line form, e.g. "[2,3,1]".
  static Permutation parse(const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of i (1-based).
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }

  const std::vector<int>& images() const { return images_; }

  /// Bracketed one-line form, e.g. "[2,3,1]".
  std::string str() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Composition p after q: (compose(p, q))(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Cycle lengths of p, sorted into a partition of its degree.
Partition cycle_type(const Permutation& p);

/// Extends h in S_m to degree n >= m by fixing m+1..n.
Permutation embed(const Permutation& h, int n);

/// Rank of p among all degree-n permutations ordered lexicographically by
/// one-line images; the identity has rank 0.
std::uint64_t perm_index(const Permutation& p);

/// Inverse of perm_index for degree n.
Permutation perm_unindex(std::uint64_t index, int n);

/// The coset representative tau_j: the cycle (j, j+1, ..., n), which maps
/// n to j and fixes everything below j. tau_n is the identity.
Permutation transversal_element(int j, int n);

/// Splits pi in S_n uniquely as pi = tau_j . h with h fixing n; returns
/// (j, h) with h truncated to degree n-1. j equals pi(n).
std::pair<int, Permutation> coset_factorize(const Permutation& pi);

}  // namespace symkron
