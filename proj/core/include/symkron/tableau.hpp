#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symkron/partition.hpp"

namespace symkron {

/// A standard filling of a Young diagram: rows and columns strictly
/// increase and each of 1..n appears once.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int n() const { return shape_.n(); }

  /// 1-based (row, column) of the cell holding value v.
  std::pair<int, int> position_of(int v) const;

  /// Row-wise text form, e.g. "{1,2|3}".
  std::string str() const;

  bool operator==(const StandardTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// All partitions of n-1 reachable by removing one corner cell, in the
/// global partition order. The dimensions of the results sum to the
/// dimension of lambda.
std::vector<Partition> branching_down(const Partition& lambda);

/// All standard tableaux of the shape in last-letter order: grouped by the
/// shape left after deleting the cell of n, groups following
/// branching_down, each group ordered recursively the same way.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

}  // namespace symkron
