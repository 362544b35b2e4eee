#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "symkron/bigint.hpp"
#include "symkron/group_table.hpp"
#include "symkron/partition.hpp"
#include "symkron/rng.hpp"

namespace symkron {

/// Largest joint register (ancilla times data) simulated amplitude by
/// amplitude, and the cap on plain multi-register states.
inline constexpr std::int64_t kMaxStateEntries = std::int64_t{1} << 25;

/// Ceiling for witness measurements and the exact diagonal sweep of the
/// triple product projector.
inline constexpr int kMaxWitnessDegree = 4;

/// Ceiling for the exact conjugation-action projector trace.
inline constexpr int kMaxConjTraceDegree = 7;

/// Degrees whose witness measurement runs the ancilla circuit by default.
inline constexpr int kDefaultWitnessCircuitDegree = 3;

/// Ceiling for the Monte-Carlo label sampler.
inline constexpr int kMaxKronSamplerDegree = 5;

/// Amplitudes over tuples of group elements: one complex entry per
/// (g_1, ..., g_arity), flattened with the first register as the major
/// index and each register ordered by permutation rank.
struct GroupAlgebraState {
  int n = 0;
  int arity = 1;
  Eigen::VectorXcd amplitudes;
};

Eigen::Index state_dim(int n, int arity);
GroupAlgebraState make_basis_state(int n, const std::vector<Permutation>& regs);
GroupAlgebraState make_uniform_state(int n, int arity);

/// A unitary representation of the degree-n symmetric group with a concrete
/// action on amplitude vectors, indexed by element rank.
class RepAction {
 public:
  enum class Kind { kLeftRegular, kConjugation, kTensorPower, kIrrep };

  static RepAction left_regular(int n);
  static RepAction conjugation(int n);
  /// Simultaneous left translation of every register.
  static RepAction tensor_power(int n, int arity);
  static RepAction triple_tensor(int n) { return tensor_power(n, 3); }
  /// The orthogonal irrep of the given shape acting on its own space.
  static RepAction irrep(const Partition& shape);

  Kind kind() const { return kind_; }
  int n() const { return table_->n(); }
  int arity() const { return arity_; }
  Eigen::Index dim() const { return dim_; }
  const GroupTable& table() const { return *table_; }

  /// out = rho(element(alpha)) applied to in.
  void apply(int alpha, const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  void apply_inverse(int alpha, const Eigen::VectorXcd& in,
                     Eigen::VectorXcd& out) const;

 private:
  RepAction(Kind kind, const GroupTable* table, int arity, Eigen::Index dim);

  Kind kind_;
  const GroupTable* table_;
  int arity_;
  Eigen::Index dim_;
  std::vector<Eigen::MatrixXcd> irrep_mats_;
};

/// One projective measurement outcome: the sampled shape, the probability
/// of that branch (squared norm before renormalization), and the
/// renormalized post-measurement amplitudes.
struct MeasureRecord {
  Partition outcome;
  double probability;
  Eigen::VectorXcd post_state;
};

/// Accept/reject measurement outcome for a claimed witness state.
struct WitnessRecord {
  bool accepted;
  double probability;
  GroupAlgebraState post_state;
};

/// Isotypic projector of the action at the given shape, computed by the
/// class-grouped character sum over the whole group; unnormalized result.
Eigen::VectorXcd project_irrep(const RepAction& action, const Partition& shape,
                               const Eigen::VectorXcd& psi);
GroupAlgebraState project_irrep(const RepAction& action, const Partition& shape,
                                const GroupAlgebraState& psi);

/// Projector onto the subspace of a three-register state invariant under
/// simultaneous left translation (the trivial-shape isotypic component of
/// the diagonal action).
GroupAlgebraState project_triple_invariant(const GroupAlgebraState& psi);

/// Transforms a unit single-register state, measures the shape label, and
/// returns the sampled shape with its probability and post-state. The
/// label-block masses are cross-checked against the projector path; the
/// post-state is the renormalized projection.
MeasureRecord weak_fourier_sample(const GroupAlgebraState& psi, SplitRng& rng);

/// Label distribution produced by the ancilla circuit: uniform ancilla,
/// controlled inverse action, Fourier transform of the ancilla, block
/// masses per shape. Cross-checked against the projector path.
std::vector<double> gpe_distribution(const RepAction& action,
                                     const Eigen::VectorXcd& psi);

/// Runs the full ancilla circuit, samples a shape label, restores the data
/// register, and asserts it matches the direct projection.
MeasureRecord gpe_measure(const RepAction& action, const Eigen::VectorXcd& psi,
                          SplitRng& rng);

/// Measures whether a three-register state is accepted as a witness for
/// the triple (mu, nu, lambda): each register's shape label is measured,
/// then the translation-invariant component. Acceptance probability equals
/// the squared norm of the state under the product projector. Degrees up
/// to max_circuit_degree also run every measurement through the circuit
/// path and require agreement with the projector algebra.
WitnessRecord measure_witness(const Partition& mu, const Partition& nu,
                              const Partition& lambda,
                              const GroupAlgebraState& psi, SplitRng& rng,
                              bool algebra_only = false,
                              int max_circuit_degree = kDefaultWitnessCircuitDegree);

/// Probability that measure_witness accepts, from the projector algebra.
double witness_acceptance(const Partition& mu, const Partition& nu,
                          const Partition& lambda,
                          const GroupAlgebraState& psi);

/// Exact trace of the product projector (translation-invariant projector
/// composed with the three per-register isotypic projectors), computed as
/// the diagonal sweep over all (n!)^3 basis tuples with exact character
/// arithmetic. Equals d_mu d_nu d_lambda times the coupling coefficient.
BigRat witness_projector_trace(const Partition& mu, const Partition& nu,
                               const Partition& lambda);

/// Exact trace of the isotypic projector of the conjugation action, equal
/// to d_lambda times the character row sum.
BigRat trace_conj_projector(const Partition& lambda);

/// Draws shape labels distributed as d_lambda g / (d_mu d_nu): each draw
/// picks uniform Fourier labels (i,j) and (k,l), forms the two dual-basis
/// states, and measures the shape label of the simultaneous-translation
/// action on the pair. Label distributions are computed once per (i,j,k,l)
/// by the exact amplitude path and cached.
class KronSampler {
 public:
  KronSampler(Partition mu, Partition nu, std::uint64_t seed);

  const Partition& mu() const { return mu_; }
  const Partition& nu() const { return nu_; }
  const PartitionList& labels() const;

  Partition sample();

  /// Label distribution conditioned on the Fourier labels (1-based).
  const std::vector<double>& conditional(int i, int j, int k, int l);

  /// Exact-amplitude mixture over all Fourier labels; equals the coupling
  /// distribution.
  std::vector<double> mixture_distribution();

 private:
  Partition mu_;
  Partition nu_;
  int d_mu_;
  int d_nu_;
  SplitRng rng_;
  std::map<std::tuple<int, int, int, int>, std::vector<double>> cache_;
};

/// Single draw with a caller-supplied stream.
Partition kron_sample(const Partition& mu, const Partition& nu, SplitRng& rng);

}  // namespace symkron
