#pragma once

#include <string>
#include <vector>

#include "symkron/bigint.hpp"

namespace symkron {

/// Hard ceiling on the degree accepted by enumerate_partitions.
inline constexpr int kMaxPartitionDegree = 64;

/// An integer partition: weakly decreasing positive parts. The default
/// object is the empty partition of 0, which appears only as an internal
/// recursion base; public enumeration starts at n = 1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses the comma-separated text form, e.g. "3,2,1".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  /// Part at 0-based index i, or 0 beyond the last row.
  int part(int i) const {
    return i >= 0 && i < num_parts() ? parts_[static_cast<size_t>(i)] : 0;
  }

  Partition conjugate() const;

  /// Comma-separated text form, e.g. "3,2,1".
  std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in the global order: reverse-lexicographic, (n)
/// first, (1^n) last. Throws DomainError for n = 0 or n beyond the ceiling.
std::vector<Partition> enumerate_partitions(int n);

/// Irreducible dimension d_lambda by the hook length formula (exact).
BigInt hook_dimension(const Partition& lambda);

/// The partitions of one fixed n with index lookup in the global order.
class PartitionList {
 public:
  explicit PartitionList(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(all_.size()); }
  const Partition& at(int i) const { return all_[static_cast<size_t>(i)]; }
  const std::vector<Partition>& all() const { return all_; }

  /// Position of lambda in the global order. Throws DomainError when
  /// lambda is not a partition of n.
  int index_of(const Partition& lambda) const;

 private:
  int n_;
  std::vector<Partition> all_;
};

}  // namespace symkron
