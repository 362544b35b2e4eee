#pragma once

#include <Eigen/Dense>

#include "symkron/partition.hpp"

namespace symkron {

/// Ceiling for dense transforms over the full group algebra (n! by n!).
inline constexpr int kMaxQftDegree = 6;

/// Basis of Fourier labels (shape, row, column) for one degree: shapes in
/// the global partition order, and (row, column) pairs row-major within
/// each shape. The total count is n!.
class FourierBasis {
 public:
  explicit FourierBasis(int n);

  struct Label {
    int part_index;
    int row, col;  // 1-based
  };

  int n() const { return partitions_.n(); }
  int size() const { return size_; }
  const PartitionList& partitions() const { return partitions_; }
  int dim(int part_index) const {
    return dims_[static_cast<size_t>(part_index)];
  }
  int offset(int part_index) const {
    return offsets_[static_cast<size_t>(part_index)];
  }
  int index(int part_index, int row, int col) const;
  Label label(int basis_index) const;

 private:
  PartitionList partitions_;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int size_ = 0;
};

/// The group-algebra Fourier transform as a dense real matrix: row
/// (shape, i, j), column the lexicographic rank of sigma, with entry
/// sqrt(d / n!) times the irrep matrix element at (i, j).
struct QftUnitary {
  int n;
  FourierBasis basis;
  Eigen::MatrixXd matrix;
};

/// Direct entry-by-entry construction from the irrep matrices.
QftUnitary qft_reference(int n);

/// Shared immutable copy, built once per degree.
const QftUnitary& qft_reference_cached(int n);

}  // namespace symkron
