#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symkron/partition.hpp"
#include "symkron/permutation.hpp"

namespace symkron {

/// Orthogonality defect allowed for a freshly built irrep matrix.
inline constexpr double kIrrepOrthogonalityTol = 1e-12;

/// A real orthogonal irrep matrix in the tableau basis. Construction
/// checks orthogonality to kIrrepOrthogonalityTol.
struct IrrepMatrix {
  Partition shape;
  Eigen::MatrixXd m;

  IrrepMatrix(Partition shape_in, Eigen::MatrixXd m_in);
};

/// Left-to-right factor indices k (each naming the swap of k, k+1) whose
/// generator product equals pi; built by bubble-sorting the one-line form.
/// The identity yields an empty word.
std::vector<int> adjacent_word(const Permutation& pi);

/// Generator matrix for the swap of k, k+1 on the irrep lambda: diagonal
/// entry 1/d per tableau, where d is the signed axial distance from the
/// cell of k to the cell of k+1, and coupling sqrt(1 - 1/d^2) to the
/// tableau with k and k+1 exchanged whenever that exchange is standard.
IrrepMatrix yor_adjacent(const Partition& lambda, int k);

/// All n-1 generator matrices for the irrep, index k-1 holding the swap of
/// k, k+1.
std::vector<Eigen::MatrixXd> yor_generators(const Partition& lambda);

/// Irrep matrix of an arbitrary permutation, as the generator product over
/// adjacent_word(pi).
IrrepMatrix yor_matrix(const Partition& lambda, const Permutation& pi);

}  // namespace symkron
