#pragma once

#include <vector>

#include "symkron/partition.hpp"
#include "symkron/permutation.hpp"

namespace symkron {

/// Largest degree for which the full n! by n! composition table is built.
inline constexpr int kMaxGroupTableDegree = 6;

/// Fully enumerated degree-n symmetric group: elements by rank, composition
/// and inversion tables, and conjugacy-class membership.
class GroupTable {
 public:
  explicit GroupTable(int n);

  int n() const { return n_; }
  int size() const { return size_; }

  const Permutation& element(int index) const {
    return elements_[static_cast<size_t>(index)];
  }

  /// Rank of element(a) composed after element(b).
  int compose(int a, int b) const {
    return compose_[static_cast<size_t>(a) * static_cast<size_t>(size_) +
                    static_cast<size_t>(b)];
  }

  int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }

  /// Global partition index of the element's cycle type.
  int class_index(int a) const { return class_index_[static_cast<size_t>(a)]; }

  const PartitionList& classes() const { return classes_; }

  const std::vector<int>& class_members(int class_idx) const {
    return class_members_[static_cast<size_t>(class_idx)];
  }

 private:
  int n_;
  int size_;
  PartitionList classes_;
  std::vector<Permutation> elements_;
  std::vector<int> compose_;
  std::vector<int> inverse_;
  std::vector<int> class_index_;
  std::vector<std::vector<int>> class_members_;
};

/// Shared immutable table, built once per degree.
const GroupTable& group_table_cached(int n);

}  // namespace symkron
