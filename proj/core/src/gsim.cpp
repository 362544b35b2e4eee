#include "symkron/gsim.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "symkron/characters.hpp"
#include "symkron/conjugacy.hpp"
#include "symkron/errors.hpp"
#include "symkron/fourier.hpp"
#include "symkron/yor.hpp"

namespace symkron {

namespace {

using Complex = std::complex<double>;

constexpr double kPathAgreementTol = 1e-9;
constexpr double kProbabilityTol = 1e-10;
constexpr double kUnitNormTol = 1e-12;

const CharacterTable& character_table_cached(int n) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CharacterTable>(n);
  return *slot;
}

void require_unit(const Eigen::VectorXcd& amplitudes, const char* what) {
  if (std::abs(amplitudes.norm() - 1.0) > kUnitNormTol) {
    throw DomainError(std::string(what) + ": state must be normalized");
  }
}

Partition trivial_shape(int n) { return Partition(std::vector<int>{n}); }

/// Left translation of one register of a flattened multi-register state.
void apply_left_register(const GroupTable& t, int arity, int reg, int alpha,
                         const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  const Eigen::Index size = static_cast<Eigen::Index>(t.size());
  Eigen::Index stride = 1;
  for (int r = arity - 1; r > reg; --r) stride *= size;
  out.resize(in.size());
  for (Eigen::Index idx = 0; idx < in.size(); ++idx) {
    const int g = static_cast<int>((idx / stride) % size);
    const Eigen::Index mapped =
        idx + (static_cast<Eigen::Index>(t.compose(alpha, g)) - g) * stride;
    out[mapped] = in[idx];
  }
}

/// Class-grouped isotypic projection of one register.
GroupAlgebraState project_register(int reg, const Partition& shape,
                                   const GroupAlgebraState& psi) {
  const GroupTable& t = group_table_cached(psi.n);
  const CharacterTable& chars = character_table_cached(psi.n);
  const int shape_idx = chars.partitions().index_of(shape);
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(psi.amplitudes.size());
  Eigen::VectorXcd orbit = Eigen::VectorXcd::Zero(psi.amplitudes.size());
  Eigen::VectorXcd tmp(psi.amplitudes.size());
  for (int c = 0; c < t.classes().size(); ++c) {
    const double chi = chars.value(shape_idx, c).get_d();
    if (chi == 0.0) continue;
    orbit.setZero();
    for (const int alpha : t.class_members(c)) {
      apply_left_register(t, psi.arity, reg, alpha, psi.amplitudes, tmp);
      orbit += tmp;
    }
    acc += chi * orbit;
  }
  const double scale =
      hook_dimension(shape).get_d() / static_cast<double>(t.size());
  return GroupAlgebraState{psi.n, psi.arity, scale * acc};
}

/// Applies a matrix to one register axis of a flattened state.
Eigen::VectorXcd apply_matrix_register(const Eigen::MatrixXcd& m, int arity,
                                       int reg, const Eigen::VectorXcd& in) {
  const Eigen::Index size = m.rows();
  Eigen::Index stride = 1;
  for (int r = arity - 1; r > reg; --r) stride *= size;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  Eigen::VectorXcd slice(size);
  const Eigen::Index block = stride * size;
  for (Eigen::Index base = 0; base < in.size(); base += block) {
    for (Eigen::Index low = 0; low < stride; ++low) {
      for (Eigen::Index g = 0; g < size; ++g) {
        slice[g] = in[base + low + g * stride];
      }
      slice = (m * slice).eval();
      for (Eigen::Index g = 0; g < size; ++g) {
        out[base + low + g * stride] = slice[g];
      }
    }
  }
  return out;
}

std::vector<double> label_distribution(const Partition& mu, const Partition& nu,
                                       int i, int j, int k, int l) {
  const int n = mu.n();
  const GroupTable& t = group_table_cached(n);
  const CharacterTable& chars = character_table_cached(n);
  const QftUnitary& q = qft_reference_cached(n);
  const int size = t.size();
  const int mu_idx = q.basis.partitions().index_of(mu);
  const int nu_idx = q.basis.partitions().index_of(nu);

  const int row1 = q.basis.index(mu_idx, i, j);
  const int row2 = q.basis.index(nu_idx, k, l);
  Eigen::VectorXd psi1(size), psi2(size);
  for (int g = 0; g < size; ++g) {
    psi1[g] = q.matrix(row1, g);
    psi2[g] = q.matrix(row2, g);
  }

  std::vector<double> correlation(static_cast<size_t>(size));
  for (int alpha = 0; alpha < size; ++alpha) {
    double a1 = 0.0;
    double a2 = 0.0;
    for (int g = 0; g < size; ++g) {
      const int mapped = t.compose(alpha, g);
      a1 += psi1[mapped] * psi1[g];
      a2 += psi2[mapped] * psi2[g];
    }
    correlation[static_cast<size_t>(alpha)] = a1 * a2;
  }

  std::vector<double> dist(static_cast<size_t>(t.classes().size()));
  double total = 0.0;
  for (int s = 0; s < t.classes().size(); ++s) {
    double sum = 0.0;
    for (int c = 0; c < t.classes().size(); ++c) {
      const double chi =
          chars.value(s, c).get_d();
      if (chi == 0.0) continue;
      double orbit = 0.0;
      for (const int alpha : t.class_members(c)) {
        orbit += correlation[static_cast<size_t>(alpha)];
      }
      sum += chi * orbit;
    }
    double p = hook_dimension(t.classes().at(s)).get_d() * sum /
               static_cast<double>(size);
    if (p < -kProbabilityTol) {
      throw ConsistencyError("label distribution: negative probability");
    }
    if (p < 0.0) p = 0.0;
    dist[static_cast<size_t>(s)] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw ConsistencyError("label distribution: probabilities do not sum to 1");
  }
  return dist;
}

}  // namespace

Eigen::Index state_dim(int n, int arity) {
  if (n < 1) throw DomainError("state_dim: degree must be positive");
  if (arity < 1 || arity > 3) {
    throw DomainError("state_dim: arity must be 1, 2, or 3");
  }
  const BigInt order = factorial(n);
  BigInt total = 1;
  for (int r = 0; r < arity; ++r) total *= order;
  if (total > kMaxStateEntries) {
    throw ResourceError("state_dim: register exceeds the amplitude ceiling");
  }
  return static_cast<Eigen::Index>(total.get_si());
}

GroupAlgebraState make_basis_state(int n,
                                   const std::vector<Permutation>& regs) {
  const int arity = static_cast<int>(regs.size());
  const Eigen::Index dim = state_dim(n, arity);
  const Eigen::Index size = static_cast<Eigen::Index>(factorial(n).get_ui());
  Eigen::Index idx = 0;
  for (const Permutation& p : regs) {
    if (p.degree() != n) {
      throw DomainError("make_basis_state: register degree mismatch");
    }
    idx = idx * size + static_cast<Eigen::Index>(perm_index(p));
  }
  GroupAlgebraState state{n, arity, Eigen::VectorXcd::Zero(dim)};
  state.amplitudes[idx] = 1.0;
  return state;
}

GroupAlgebraState make_uniform_state(int n, int arity) {
  const Eigen::Index dim = state_dim(n, arity);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return GroupAlgebraState{n, arity,
                           Eigen::VectorXcd::Constant(dim, Complex(amp, 0.0))};
}

RepAction::RepAction(Kind kind, const GroupTable* table, int arity,
                     Eigen::Index dim)
    : kind_(kind), table_(table), arity_(arity), dim_(dim) {}

RepAction RepAction::left_regular(int n) {
  const GroupTable& t = group_table_cached(n);
  return RepAction(Kind::kLeftRegular, &t, 1, t.size());
}

RepAction RepAction::conjugation(int n) {
  const GroupTable& t = group_table_cached(n);
  return RepAction(Kind::kConjugation, &t, 1, t.size());
}

RepAction RepAction::tensor_power(int n, int arity) {
  const Eigen::Index dim = state_dim(n, arity);
  const GroupTable& t = group_table_cached(n);
  return RepAction(Kind::kTensorPower, &t, arity, dim);
}

RepAction RepAction::irrep(const Partition& shape) {
  const GroupTable& t = group_table_cached(shape.n());
  RepAction action(Kind::kIrrep, &t, 1,
                   static_cast<Eigen::Index>(hook_dimension(shape).get_si()));
  action.irrep_mats_.reserve(static_cast<size_t>(t.size()));
  for (int a = 0; a < t.size(); ++a) {
    action.irrep_mats_.push_back(
        yor_matrix(shape, t.element(a)).m.cast<Complex>());
  }
  return action;
}

void RepAction::apply(int alpha, const Eigen::VectorXcd& in,
                      Eigen::VectorXcd& out) const {
  if (alpha < 0 || alpha >= table_->size()) {
    throw DomainError("RepAction: element rank out of range");
  }
  if (in.size() != dim_) {
    throw DomainError("RepAction: amplitude count does not match the action");
  }
  const GroupTable& t = *table_;
  const Eigen::Index size = static_cast<Eigen::Index>(t.size());
  out.resize(dim_);
  switch (kind_) {
    case Kind::kLeftRegular:
      for (Eigen::Index g = 0; g < size; ++g) {
        out[t.compose(alpha, static_cast<int>(g))] = in[g];
      }
      break;
    case Kind::kConjugation: {
      const int inv = t.inverse(alpha);
      for (Eigen::Index g = 0; g < size; ++g) {
        out[t.compose(t.compose(alpha, static_cast<int>(g)), inv)] = in[g];
      }
      break;
    }
    case Kind::kTensorPower:
      if (arity_ == 1) {
        for (Eigen::Index g = 0; g < size; ++g) {
          out[t.compose(alpha, static_cast<int>(g))] = in[g];
        }
      } else if (arity_ == 2) {
        for (Eigen::Index a = 0; a < size; ++a) {
          const Eigen::Index ra = static_cast<Eigen::Index>(
                                      t.compose(alpha, static_cast<int>(a))) *
                                  size;
          const Eigen::Index ia = a * size;
          for (Eigen::Index b = 0; b < size; ++b) {
            out[ra + t.compose(alpha, static_cast<int>(b))] = in[ia + b];
          }
        }
      } else {
        for (Eigen::Index a = 0; a < size; ++a) {
          const Eigen::Index ra = static_cast<Eigen::Index>(
                                      t.compose(alpha, static_cast<int>(a))) *
                                  size * size;
          const Eigen::Index ia = a * size * size;
          for (Eigen::Index b = 0; b < size; ++b) {
            const Eigen::Index rb =
                ra + static_cast<Eigen::Index>(
                         t.compose(alpha, static_cast<int>(b))) *
                         size;
            const Eigen::Index ib = ia + b * size;
            for (Eigen::Index c = 0; c < size; ++c) {
              out[rb + t.compose(alpha, static_cast<int>(c))] = in[ib + c];
            }
          }
        }
      }
      break;
    case Kind::kIrrep:
      out = irrep_mats_[static_cast<size_t>(alpha)] * in;
      break;
  }
}

void RepAction::apply_inverse(int alpha, const Eigen::VectorXcd& in,
                              Eigen::VectorXcd& out) const {
  apply(table_->inverse(alpha), in, out);
}

Eigen::VectorXcd project_irrep(const RepAction& action, const Partition& shape,
                               const Eigen::VectorXcd& psi) {
  if (shape.n() != action.n()) {
    throw DomainError("project_irrep: shape degree does not match the action");
  }
  if (psi.size() != action.dim()) {
    throw DomainError("project_irrep: amplitude count does not match the action");
  }
  const GroupTable& t = action.table();
  const CharacterTable& chars = character_table_cached(t.n());
  const int shape_idx = chars.partitions().index_of(shape);
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(psi.size());
  Eigen::VectorXcd orbit = Eigen::VectorXcd::Zero(psi.size());
  Eigen::VectorXcd tmp(psi.size());
  for (int c = 0; c < t.classes().size(); ++c) {
    const double chi = chars.value(shape_idx, c).get_d();
    if (chi == 0.0) continue;
    orbit.setZero();
    for (const int alpha : t.class_members(c)) {
      action.apply(alpha, psi, tmp);
      orbit += tmp;
    }
    acc += chi * orbit;
  }
  const double scale =
      hook_dimension(shape).get_d() / static_cast<double>(t.size());
  return scale * acc;
}

GroupAlgebraState project_irrep(const RepAction& action, const Partition& shape,
                                const GroupAlgebraState& psi) {
  if (psi.n != action.n() || psi.amplitudes.size() != action.dim()) {
    throw DomainError("project_irrep: state does not match the action");
  }
  return GroupAlgebraState{psi.n, psi.arity,
                           project_irrep(action, shape, psi.amplitudes)};
}

GroupAlgebraState project_triple_invariant(const GroupAlgebraState& psi) {
  if (psi.arity != 3) {
    throw DomainError("project_triple_invariant: arity must be 3");
  }
  return project_irrep(RepAction::triple_tensor(psi.n), trivial_shape(psi.n),
                       psi);
}

MeasureRecord weak_fourier_sample(const GroupAlgebraState& psi, SplitRng& rng) {
  if (psi.arity != 1) {
    throw DomainError("weak_fourier_sample: arity must be 1");
  }
  if (psi.amplitudes.size() != state_dim(psi.n, 1)) {
    throw DomainError("weak_fourier_sample: amplitude count must be n!");
  }
  require_unit(psi.amplitudes, "weak_fourier_sample");

  const QftUnitary& q = qft_reference_cached(psi.n);
  const Eigen::VectorXcd phi = q.matrix.cast<Complex>() * psi.amplitudes;

  const RepAction action = RepAction::left_regular(psi.n);
  const int shapes = q.basis.partitions().size();
  std::vector<double> mass(static_cast<size_t>(shapes));
  std::vector<Eigen::VectorXcd> projections(static_cast<size_t>(shapes));
  double total = 0.0;
  for (int s = 0; s < shapes; ++s) {
    const int d = q.basis.dim(s);
    const double circuit =
        phi.segment(q.basis.offset(s), d * d).squaredNorm();
    projections[static_cast<size_t>(s)] =
        project_irrep(action, q.basis.partitions().at(s), psi.amplitudes);
    const double algebra = projections[static_cast<size_t>(s)].squaredNorm();
    if (std::abs(circuit - algebra) > kPathAgreementTol) {
      throw ConsistencyError(
          "weak_fourier_sample: circuit and projector paths disagree");
    }
    mass[static_cast<size_t>(s)] = circuit;
    total += circuit;
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw ConsistencyError(
        "weak_fourier_sample: outcome probabilities do not sum to 1");
  }

  const int pick = sample_index(mass, rng);
  const Eigen::VectorXcd& proj = projections[static_cast<size_t>(pick)];
  return MeasureRecord{q.basis.partitions().at(pick),
                       mass[static_cast<size_t>(pick)], proj / proj.norm()};
}

std::vector<double> gpe_distribution(const RepAction& action,
                                     const Eigen::VectorXcd& psi) {
  if (psi.size() != action.dim()) {
    throw DomainError("gpe_distribution: amplitude count does not match the action");
  }
  require_unit(psi, "gpe_distribution");
  const int n = action.n();
  const QftUnitary& q = qft_reference_cached(n);
  const Eigen::Index size = static_cast<Eigen::Index>(action.table().size());
  const Eigen::Index data = action.dim();
  if (size * data > kMaxStateEntries) {
    throw ResourceError("gpe_distribution: joint register exceeds the ceiling");
  }

  Eigen::MatrixXcd joint(size, data);
  Eigen::VectorXcd buf(data);
  for (Eigen::Index alpha = 0; alpha < size; ++alpha) {
    action.apply_inverse(static_cast<int>(alpha), psi, buf);
    joint.row(alpha) = q.matrix(0, alpha) * buf.transpose();
  }
  joint = (q.matrix.cast<Complex>() * joint).eval();

  std::vector<double> mass(static_cast<size_t>(q.basis.partitions().size()));
  double total = 0.0;
  for (int s = 0; s < q.basis.partitions().size(); ++s) {
    const int d = q.basis.dim(s);
    mass[static_cast<size_t>(s)] =
        joint.middleRows(q.basis.offset(s), d * d).squaredNorm();
    total += mass[static_cast<size_t>(s)];
    const double algebra =
        project_irrep(action, q.basis.partitions().at(s), psi).squaredNorm();
    if (std::abs(mass[static_cast<size_t>(s)] - algebra) > kPathAgreementTol) {
      throw ConsistencyError(
          "gpe_distribution: circuit and projector paths disagree");
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw ConsistencyError(
        "gpe_distribution: outcome probabilities do not sum to 1");
  }
  return mass;
}

MeasureRecord gpe_measure(const RepAction& action, const Eigen::VectorXcd& psi,
                          SplitRng& rng) {
  if (psi.size() != action.dim()) {
    throw DomainError("gpe_measure: amplitude count does not match the action");
  }
  require_unit(psi, "gpe_measure");
  const int n = action.n();
  const QftUnitary& q = qft_reference_cached(n);
  const Eigen::Index size = static_cast<Eigen::Index>(action.table().size());
  const Eigen::Index data = action.dim();
  if (size * data > kMaxStateEntries) {
    throw ResourceError("gpe_measure: joint register exceeds the ceiling");
  }
  const Eigen::MatrixXcd qc = q.matrix.cast<Complex>();

  Eigen::VectorXcd ancilla(size);
  for (Eigen::Index alpha = 0; alpha < size; ++alpha) {
    ancilla[alpha] = q.matrix(0, alpha);
  }

  Eigen::MatrixXcd joint(size, data);
  Eigen::VectorXcd buf(data);
  for (Eigen::Index alpha = 0; alpha < size; ++alpha) {
    action.apply_inverse(static_cast<int>(alpha), psi, buf);
    joint.row(alpha) = ancilla[alpha] * buf.transpose();
  }
  joint = (qc * joint).eval();

  const int shapes = q.basis.partitions().size();
  std::vector<double> mass(static_cast<size_t>(shapes));
  std::vector<Eigen::VectorXcd> projections(static_cast<size_t>(shapes));
  double total = 0.0;
  for (int s = 0; s < shapes; ++s) {
    const int d = q.basis.dim(s);
    mass[static_cast<size_t>(s)] =
        joint.middleRows(q.basis.offset(s), d * d).squaredNorm();
    total += mass[static_cast<size_t>(s)];
    projections[static_cast<size_t>(s)] =
        project_irrep(action, q.basis.partitions().at(s), psi);
    if (std::abs(mass[static_cast<size_t>(s)] -
                 projections[static_cast<size_t>(s)].squaredNorm()) >
        kPathAgreementTol) {
      throw ConsistencyError("gpe_measure: circuit and projector paths disagree");
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw ConsistencyError("gpe_measure: outcome probabilities do not sum to 1");
  }

  const int pick = sample_index(mass, rng);

  const int d = q.basis.dim(pick);
  const int offset = q.basis.offset(pick);
  Eigen::MatrixXcd collapsed = Eigen::MatrixXcd::Zero(size, data);
  collapsed.middleRows(offset, d * d) = joint.middleRows(offset, d * d);
  collapsed = (qc.adjoint() * collapsed).eval();
  Eigen::VectorXcd row(data);
  for (Eigen::Index alpha = 0; alpha < size; ++alpha) {
    buf = collapsed.row(alpha).transpose();
    action.apply(static_cast<int>(alpha), buf, row);
    collapsed.row(alpha) = row.transpose();
  }
  Eigen::VectorXcd extracted = Eigen::VectorXcd::Zero(data);
  for (Eigen::Index alpha = 0; alpha < size; ++alpha) {
    extracted += std::conj(ancilla[alpha]) * collapsed.row(alpha).transpose();
  }

  const Eigen::VectorXcd& proj = projections[static_cast<size_t>(pick)];
  if ((extracted - proj).cwiseAbs().maxCoeff() > kPathAgreementTol) {
    throw ConsistencyError(
        "gpe_measure: restored data register does not match the projection");
  }
  return MeasureRecord{q.basis.partitions().at(pick),
                       mass[static_cast<size_t>(pick)], proj / proj.norm()};
}

double witness_acceptance(const Partition& mu, const Partition& nu,
                          const Partition& lambda,
                          const GroupAlgebraState& psi) {
  if (mu.n() != psi.n || nu.n() != psi.n || lambda.n() != psi.n) {
    throw DomainError("witness_acceptance: shape degrees must match the state");
  }
  if (psi.arity != 3) {
    throw DomainError("witness_acceptance: arity must be 3");
  }
  GroupAlgebraState cur = project_register(0, mu, psi);
  cur = project_register(1, nu, cur);
  cur = project_register(2, lambda, cur);
  cur = project_triple_invariant(cur);
  return cur.amplitudes.squaredNorm();
}

WitnessRecord measure_witness(const Partition& mu, const Partition& nu,
                              const Partition& lambda,
                              const GroupAlgebraState& psi, SplitRng& rng,
                              bool algebra_only, int max_circuit_degree) {
  if (psi.n > kMaxWitnessDegree) {
    throw ResourceError("measure_witness: n exceeds ceiling " +
                        std::to_string(kMaxWitnessDegree));
  }
  require_unit(psi.amplitudes, "measure_witness");
  const double accept_prob = witness_acceptance(mu, nu, lambda, psi);
  const bool circuit = !algebra_only && psi.n <= max_circuit_degree;

  const GroupTable& t = group_table_cached(psi.n);
  const QftUnitary& q = qft_reference_cached(psi.n);
  const Eigen::MatrixXcd qc = q.matrix.cast<Complex>();
  const PartitionList& shapes = t.classes();
  const Partition targets[3] = {mu, nu, lambda};

  GroupAlgebraState state = psi;
  double path_prob = 1.0;
  for (int reg = 0; reg < 3; ++reg) {
    std::vector<double> mass(static_cast<size_t>(shapes.size()));
    std::vector<GroupAlgebraState> projections;
    projections.reserve(static_cast<size_t>(shapes.size()));
    double total = 0.0;
    for (int s = 0; s < shapes.size(); ++s) {
      projections.push_back(project_register(reg, shapes.at(s), state));
      mass[static_cast<size_t>(s)] = projections.back().amplitudes.squaredNorm();
      total += mass[static_cast<size_t>(s)];
    }
    if (std::abs(total - 1.0) > kProbabilityTol) {
      throw ConsistencyError(
          "measure_witness: register outcome probabilities do not sum to 1");
    }
    if (circuit) {
      const Eigen::VectorXcd transformed =
          apply_matrix_register(qc, 3, reg, state.amplitudes);
      Eigen::Index stride = 1;
      for (int r = 2; r > reg; --r) stride *= t.size();
      for (int s = 0; s < shapes.size(); ++s) {
        const int d = q.basis.dim(s);
        double block = 0.0;
        for (Eigen::Index idx = 0; idx < transformed.size(); ++idx) {
          const int digit = static_cast<int>((idx / stride) % t.size());
          if (digit >= q.basis.offset(s) && digit < q.basis.offset(s) + d * d) {
            block += std::norm(transformed[idx]);
          }
        }
        if (std::abs(block - mass[static_cast<size_t>(s)]) > kPathAgreementTol) {
          throw ConsistencyError(
              "measure_witness: register circuit and projector paths disagree");
        }
      }
    }
    const int pick = sample_index(mass, rng);
    path_prob *= mass[static_cast<size_t>(pick)];
    state = std::move(projections[static_cast<size_t>(pick)]);
    state.amplitudes /= state.amplitudes.norm();
    if (!(shapes.at(pick) == targets[reg])) {
      return WitnessRecord{false, 1.0 - accept_prob, std::move(state)};
    }
  }

  const GroupAlgebraState invariant = project_triple_invariant(state);
  const double p_accept_stage = invariant.amplitudes.squaredNorm();
  if (circuit) {
    const std::vector<double> dist =
        gpe_distribution(RepAction::triple_tensor(psi.n), state.amplitudes);
    if (std::abs(dist[0] - p_accept_stage) > kPathAgreementTol) {
      throw ConsistencyError(
          "measure_witness: invariant-stage circuit and projector paths disagree");
    }
  }

  if (std::abs(path_prob * p_accept_stage - accept_prob) > kPathAgreementTol) {
    throw ConsistencyError("measure_witness: accept-path probability mismatch");
  }
  if (rng.uniform() < p_accept_stage) {
    GroupAlgebraState post = invariant;
    post.amplitudes /= post.amplitudes.norm();
    return WitnessRecord{true, accept_prob, std::move(post)};
  }
  GroupAlgebraState post = state;
  post.amplitudes -= invariant.amplitudes;
  const double norm = post.amplitudes.norm();
  if (norm > 0.0) post.amplitudes /= norm;
  return WitnessRecord{false, 1.0 - accept_prob, std::move(post)};
}

BigRat witness_projector_trace(const Partition& mu, const Partition& nu,
                               const Partition& lambda) {
  const int n = mu.n();
  if (nu.n() != n || lambda.n() != n) {
    throw DomainError("witness_projector_trace: shapes must share one degree");
  }
  if (n > kMaxWitnessDegree) {
    throw ResourceError("witness_projector_trace: n exceeds ceiling " +
                        std::to_string(kMaxWitnessDegree));
  }
  const GroupTable& t = group_table_cached(n);
  const CharacterTable& chars = character_table_cached(n);
  const int size = t.size();
  const int num_classes = t.classes().size();

  const Partition* shapes[3] = {&mu, &nu, &lambda};
  std::vector<long> weight[3];
  for (int r = 0; r < 3; ++r) {
    const int shape_idx = chars.partitions().index_of(*shapes[r]);
    const long d = hook_dimension(*shapes[r]).get_si();
    weight[r].resize(static_cast<size_t>(num_classes));
    for (int c = 0; c < num_classes; ++c) {
      weight[r][static_cast<size_t>(c)] = d * chars.value(shape_idx, c).get_si();
    }
  }

  BigInt numerator = 0;
  for (int a = 0; a < size; ++a) {
    const int inv_a = t.inverse(a);
    for (int b = 0; b < size; ++b) {
      const int inv_b = t.inverse(b);
      for (int c = 0; c < size; ++c) {
        const int inv_c = t.inverse(c);
        long tuple_sum = 0;
        for (int sigma = 0; sigma < size; ++sigma) {
          const int sinv = t.inverse(sigma);
          const int beta1 = t.compose(t.compose(sinv, a), inv_a);
          const int beta2 = t.compose(t.compose(sinv, b), inv_b);
          const int beta3 = t.compose(t.compose(sinv, c), inv_c);
          tuple_sum += weight[0][static_cast<size_t>(t.class_index(beta1))] *
                       weight[1][static_cast<size_t>(t.class_index(beta2))] *
                       weight[2][static_cast<size_t>(t.class_index(beta3))];
        }
        numerator += tuple_sum;
      }
    }
  }

  const BigInt order = factorial(n);
  BigRat trace(numerator, order * order * order * order);
  trace.canonicalize();
  if (trace.get_den() != 1) {
    throw ConsistencyError("witness_projector_trace: trace is not an integer");
  }
  return trace;
}

BigRat trace_conj_projector(const Partition& lambda) {
  const int n = lambda.n();
  if (n > kMaxConjTraceDegree) {
    throw ResourceError("trace_conj_projector: n exceeds ceiling " +
                        std::to_string(kMaxConjTraceDegree));
  }
  const CharacterTable& chars = character_table_cached(n);
  const int shape_idx = chars.partitions().index_of(lambda);
  BigInt sum = 0;
  for (int c = 0; c < chars.partitions().size(); ++c) {
    const ConjugacyClass data = class_data(chars.partitions().at(c));
    sum += data.size * chars.value(shape_idx, c) * data.centralizer_size;
  }
  BigRat trace(BigInt(hook_dimension(lambda) * sum), factorial(n));
  trace.canonicalize();
  if (trace.get_den() != 1) {
    throw ConsistencyError("trace_conj_projector: trace is not an integer");
  }
  return trace;
}

KronSampler::KronSampler(Partition mu, Partition nu, std::uint64_t seed)
    : mu_(std::move(mu)), nu_(std::move(nu)), rng_(seed) {
  if (mu_.n() != nu_.n()) {
    throw DomainError("KronSampler: shapes must share one degree");
  }
  if (mu_.n() > kMaxKronSamplerDegree) {
    throw ResourceError("KronSampler: n exceeds ceiling " +
                        std::to_string(kMaxKronSamplerDegree));
  }
  d_mu_ = static_cast<int>(hook_dimension(mu_).get_si());
  d_nu_ = static_cast<int>(hook_dimension(nu_).get_si());
}

const PartitionList& KronSampler::labels() const {
  return group_table_cached(mu_.n()).classes();
}

const std::vector<double>& KronSampler::conditional(int i, int j, int k,
                                                    int l) {
  if (i < 1 || i > d_mu_ || j < 1 || j > d_mu_ || k < 1 || k > d_nu_ ||
      l < 1 || l > d_nu_) {
    throw DomainError("KronSampler: label position out of range");
  }
  const auto key = std::make_tuple(i, j, k, l);
  auto found = cache_.find(key);
  if (found == cache_.end()) {
    found = cache_.emplace(key, label_distribution(mu_, nu_, i, j, k, l)).first;
  }
  return found->second;
}

Partition KronSampler::sample() {
  const int i = 1 + static_cast<int>(rng_.uniform_index(d_mu_));
  const int j = 1 + static_cast<int>(rng_.uniform_index(d_mu_));
  const int k = 1 + static_cast<int>(rng_.uniform_index(d_nu_));
  const int l = 1 + static_cast<int>(rng_.uniform_index(d_nu_));
  const std::vector<double>& dist = conditional(i, j, k, l);
  return labels().at(sample_index(dist, rng_));
}

std::vector<double> KronSampler::mixture_distribution() {
  std::vector<double> mix(static_cast<size_t>(labels().size()), 0.0);
  const double weight =
      1.0 / (static_cast<double>(d_mu_) * d_mu_ * d_nu_ * d_nu_);
  for (int i = 1; i <= d_mu_; ++i) {
    for (int j = 1; j <= d_mu_; ++j) {
      for (int k = 1; k <= d_nu_; ++k) {
        for (int l = 1; l <= d_nu_; ++l) {
          const std::vector<double>& dist = conditional(i, j, k, l);
          for (size_t s = 0; s < mix.size(); ++s) mix[s] += weight * dist[s];
        }
      }
    }
  }
  return mix;
}

Partition kron_sample(const Partition& mu, const Partition& nu, SplitRng& rng) {
  if (mu.n() != nu.n()) {
    throw DomainError("kron_sample: shapes must share one degree");
  }
  if (mu.n() > kMaxKronSamplerDegree) {
    throw ResourceError("kron_sample: n exceeds ceiling " +
                        std::to_string(kMaxKronSamplerDegree));
  }
  const int d_mu = static_cast<int>(hook_dimension(mu).get_si());
  const int d_nu = static_cast<int>(hook_dimension(nu).get_si());
  const int i = 1 + static_cast<int>(rng.uniform_index(d_mu));
  const int j = 1 + static_cast<int>(rng.uniform_index(d_mu));
  const int k = 1 + static_cast<int>(rng.uniform_index(d_nu));
  const int l = 1 + static_cast<int>(rng.uniform_index(d_nu));
  const std::vector<double> dist = label_distribution(mu, nu, i, j, k, l);
  return group_table_cached(mu.n()).classes().at(sample_index(dist, rng));
}

}  // namespace symkron
