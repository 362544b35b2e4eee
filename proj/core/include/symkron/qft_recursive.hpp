#pragma once

#include <Eigen/Dense>
#include <memory>

#include "symkron/fourier.hpp"
#include "symkron/permutation.hpp"

namespace symkron {

/// Ceiling for the stepwise loop-invariant diagnostic.
inline constexpr int kMaxLoopInvariantDegree = 5;

/// Register layout for the recursive transform at degree n: a tag slot
/// (0 for the cleared state, k for the coset representative tau_k) tensor
/// a data slot holding either a degree-(n-1) label or a degree-n label.
/// The two label sections double as group-element sections through
/// perm_index while the algorithm is in a group-basis phase.
class HybridSpace {
 public:
  explicit HybridSpace(int n);

  int n() const { return n_; }
  int tags() const { return n_ + 1; }
  const FourierBasis& sub() const { return sub_; }
  const FourierBasis& full() const { return full_; }
  int data_dim() const { return sub_.size() + full_.size(); }
  int dim() const { return tags() * data_dim(); }

  int index(int tag, int data) const { return tag * data_dim() + data; }
  int sub_data(int label) const { return label; }
  int full_data(int label) const { return sub_.size() + label; }

 private:
  int n_;
  FourierBasis sub_;
  FourierBasis full_;
};

/// A unitary component of the recursive transform. Every component is
/// real, so dense() returns a real matrix.
class HybridOp {
 public:
  explicit HybridOp(HybridSpace space) : space_(std::move(space)) {}
  virtual ~HybridOp() = default;

  const HybridSpace& space() const { return space_; }

  virtual void apply(Eigen::VectorXcd& state, bool inverse) const = 0;
  void apply(Eigen::VectorXcd& state) const { apply(state, false); }

  Eigen::MatrixXd dense(bool inverse = false) const;

 private:
  HybridSpace space_;
};

/// Coset relabeling: swaps the tag-0 group slot of pi with the tag-j
/// subgroup slot of h, where pi = tau_j . h. A 0/1 permutation matrix.
std::unique_ptr<HybridOp> op_w(int n);

/// The degree-(n-1) transform on the subgroup section of every tag.
std::unique_ptr<HybridOp> op_sub_qft(int n, const Eigen::MatrixXd& sub_qft);

/// Left translation on degree-n labels: block lambda maps coefficient
/// matrices A to rep(pi) A. Identity on subgroup labels and on the tag.
std::unique_ptr<HybridOp> op_m(int n, const Permutation& pi);

/// Branching isometry on the tag-0 sector: |0>|sigma,p,q> maps to the
/// normalized sum of |0>|lambda,p',q'> over shapes covering sigma, the
/// tag-tau sectors are untouched, and the remaining tag-0 columns are a
/// deterministic orthonormal completion.
std::unique_ptr<HybridOp> op_u(int n);

/// Swaps tag 0 with tag k on the subgroup section; identity elsewhere.
std::unique_ptr<HybridOp> op_v(int n, int k);

/// The transform assembled by coset factorization, the degree-(n-1)
/// transform, and n rounds of M(tau_k)^-1, U V_k U-dagger, M(tau_k);
/// returns the matrix read off the tag-0 degree-n-label sector.
QftUnitary qft_recursive(int n);

struct LoopInvariantReport {
  bool pass = true;
  /// 0 flags the state right after the subgroup transform; k in 1..n flags
  /// the state after round k; -1 when nothing violated.
  int first_violation = -1;
  double max_deviation = 0.0;
};

/// Replays the recursion on the amplitude vector f (group basis, length
/// n!) and checks the expected register state after every round, plus the
/// round identity M(tau_k) U |0>|f_k-hat> == |0>|F-hat^k>.
LoopInvariantReport loop_invariant_check(int n, const Eigen::VectorXcd& f,
                                         double tol = 1e-8);

}  // namespace symkron
