#include "symkron/qft_recursive.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "symkron/errors.hpp"
#include "symkron/tableau.hpp"
#include "symkron/yor.hpp"

namespace symkron {

namespace {

using Complex = std::complex<double>;

int checked_hybrid_degree(int n) {
  if (n < 2) {
    throw DomainError("HybridSpace: degree must be at least 2");
  }
  return n;
}

class OpW : public HybridOp {
 public:
  explicit OpW(HybridSpace s) : HybridOp(std::move(s)) {
    const HybridSpace& sp = space();
    for (int l = 0; l < sp.full().size(); ++l) {
      const Permutation g = perm_unindex(static_cast<std::uint64_t>(l), sp.n());
      const auto [j, h] = coset_factorize(g);
      const int hidx = static_cast<int>(perm_index(h));
      pairs_.emplace_back(sp.index(0, sp.full_data(l)),
                          sp.index(j, sp.sub_data(hidx)));
    }
  }

  void apply(Eigen::VectorXcd& state, bool) const override {
    for (const auto& [a, b] : pairs_) std::swap(state[a], state[b]);
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

class OpSubQft : public HybridOp {
 public:
  OpSubQft(HybridSpace s, const Eigen::MatrixXd& sub_qft)
      : HybridOp(std::move(s)), q_(sub_qft.cast<Complex>()) {
    if (q_.rows() != space().sub().size() || q_.cols() != q_.rows()) {
      throw DomainError("op_sub_qft: matrix does not act on the subgroup section");
    }
  }

  void apply(Eigen::VectorXcd& state, bool inverse) const override {
    const HybridSpace& sp = space();
    const int m = sp.sub().size();
    for (int t = 0; t < sp.tags(); ++t) {
      auto seg = state.segment(sp.index(t, 0), m);
      seg = inverse ? (q_.adjoint() * seg).eval() : (q_ * seg).eval();
    }
  }

 private:
  Eigen::MatrixXcd q_;
};

class OpM : public HybridOp {
 public:
  OpM(HybridSpace s, const Permutation& pi) : HybridOp(std::move(s)) {
    if (pi.degree() != space().n()) {
      throw DomainError("op_m: permutation degree does not match the register");
    }
    const FourierBasis& full = space().full();
    for (int p = 0; p < full.partitions().size(); ++p) {
      reps_.push_back(yor_matrix(full.partitions().at(p), pi).m.cast<Complex>());
    }
  }

  void apply(Eigen::VectorXcd& state, bool inverse) const override {
    const HybridSpace& sp = space();
    for (int t = 0; t < sp.tags(); ++t) {
      for (int p = 0; p < sp.full().partitions().size(); ++p) {
        const int d = sp.full().dim(p);
        const int base = sp.index(t, sp.full_data(sp.full().offset(p)));
        Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
            block(state.data() + base, d, d);
        const auto& rep = reps_[static_cast<size_t>(p)];
        block = inverse ? (rep.adjoint() * block).eval() : (rep * block).eval();
      }
    }
  }

 private:
  std::vector<Eigen::MatrixXcd> reps_;
};

class OpU : public HybridOp {
 public:
  explicit OpU(HybridSpace s) : HybridOp(std::move(s)) {
    const HybridSpace& sp = space();
    const int n = sp.n();
    const int m = sp.sub().size();
    const int sector = sp.data_dim();
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(sector, sector);

    for (int p = 0; p < sp.full().partitions().size(); ++p) {
      const Partition& lambda = sp.full().partitions().at(p);
      int off = 0;
      for (const Partition& sigma : branching_down(lambda)) {
        const int sidx = sp.sub().partitions().index_of(sigma);
        const int dsub = sp.sub().dim(sidx);
        const double coeff =
            std::sqrt(static_cast<double>(sp.full().dim(p)) /
                      (static_cast<double>(n) * static_cast<double>(dsub)));
        for (int r = 1; r <= dsub; ++r) {
          for (int c = 1; c <= dsub; ++c) {
            u(m + sp.full().index(p, off + r, off + c),
              sp.sub().index(sidx, r, c)) = coeff;
          }
        }
        off += dsub;
      }
    }

    // Fixed-order Gram-Schmidt completion of the remaining columns, so the
    // operator is the same on every run and platform.
    int next_col = m;
    for (int i = 0; i < sector && next_col < sector; ++i) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(sector);
      v[i] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < next_col; ++c) {
          v -= u.col(c).dot(v) * u.col(c);
        }
      }
      const double norm = v.norm();
      if (norm < 1e-6) continue;
      u.col(next_col++) = v / norm;
    }
    if (next_col != sector) {
      throw ConsistencyError("op_u: orthonormal completion came up short");
    }
    u_ = u.cast<Complex>();
  }

  void apply(Eigen::VectorXcd& state, bool inverse) const override {
    const HybridSpace& sp = space();
    auto seg = state.segment(sp.index(0, 0), sp.data_dim());
    seg = inverse ? (u_.adjoint() * seg).eval() : (u_ * seg).eval();
  }

 private:
  Eigen::MatrixXcd u_;
};

class OpV : public HybridOp {
 public:
  OpV(HybridSpace s, int k) : HybridOp(std::move(s)), k_(k) {
    if (k < 1 || k > space().n()) {
      throw DomainError("op_v: tag out of range");
    }
  }

  void apply(Eigen::VectorXcd& state, bool) const override {
    const HybridSpace& sp = space();
    const int m = sp.sub().size();
    for (int d = 0; d < m; ++d) {
      std::swap(state[sp.index(0, d)], state[sp.index(k_, d)]);
    }
  }

 private:
  int k_;
};

struct RoundOps {
  std::unique_ptr<HybridOp> w;
  std::unique_ptr<HybridOp> sub_qft;
  std::unique_ptr<HybridOp> u;
  std::vector<std::unique_ptr<HybridOp>> m;
  std::vector<std::unique_ptr<HybridOp>> v;
};

RoundOps build_ops(int n, const Eigen::MatrixXd& sub_qft) {
  RoundOps ops;
  ops.w = op_w(n);
  ops.sub_qft = op_sub_qft(n, sub_qft);
  ops.u = op_u(n);
  for (int k = 1; k <= n; ++k) {
    ops.m.push_back(op_m(n, transversal_element(k, n)));
    ops.v.push_back(op_v(n, k));
  }
  return ops;
}

void run_round(const RoundOps& ops, int k, Eigen::VectorXcd& state) {
  ops.m[static_cast<size_t>(k - 1)]->apply(state, true);
  ops.u->apply(state, true);
  ops.v[static_cast<size_t>(k - 1)]->apply(state);
  ops.u->apply(state);
  ops.m[static_cast<size_t>(k - 1)]->apply(state);
}

}  // namespace

HybridSpace::HybridSpace(int n)
    : n_(checked_hybrid_degree(n)), sub_(n - 1), full_(n) {}

Eigen::MatrixXd HybridOp::dense(bool inverse) const {
  const int d = space_.dim();
  Eigen::MatrixXd out(d, d);
  Eigen::VectorXcd col(d);
  for (int c = 0; c < d; ++c) {
    col.setZero();
    col[c] = 1.0;
    apply(col, inverse);
    out.col(c) = col.real();
  }
  return out;
}

std::unique_ptr<HybridOp> op_w(int n) {
  return std::make_unique<OpW>(HybridSpace(n));
}

std::unique_ptr<HybridOp> op_sub_qft(int n, const Eigen::MatrixXd& sub_qft) {
  return std::make_unique<OpSubQft>(HybridSpace(n), sub_qft);
}

std::unique_ptr<HybridOp> op_m(int n, const Permutation& pi) {
  return std::make_unique<OpM>(HybridSpace(n), pi);
}

std::unique_ptr<HybridOp> op_u(int n) {
  return std::make_unique<OpU>(HybridSpace(n));
}

std::unique_ptr<HybridOp> op_v(int n, int k) {
  return std::make_unique<OpV>(HybridSpace(n), k);
}

QftUnitary qft_recursive(int n) {
  if (n <= 0) throw DomainError("qft_recursive: n must be positive");
  if (n > kMaxQftDegree) {
    throw ResourceError("qft_recursive: n exceeds ceiling " +
                        std::to_string(kMaxQftDegree));
  }
  if (n == 1) {
    return QftUnitary{1, FourierBasis(1), Eigen::MatrixXd::Ones(1, 1)};
  }

  const QftUnitary below = qft_recursive(n - 1);
  HybridSpace space(n);
  const RoundOps ops = build_ops(n, below.matrix);

  FourierBasis basis(n);
  const int size = basis.size();
  Eigen::MatrixXd out(size, size);
  Eigen::VectorXcd state(space.dim());
  for (int col = 0; col < size; ++col) {
    state.setZero();
    state[space.index(0, space.full_data(col))] = 1.0;
    ops.w->apply(state);
    ops.sub_qft->apply(state);
    for (int k = 1; k <= n; ++k) run_round(ops, k, state);

    double residual = 0.0;
    for (int t = 0; t < space.tags(); ++t) {
      for (int d = 0; d < space.data_dim(); ++d) {
        if (t == 0 && d >= space.sub().size()) continue;
        residual = std::max(residual, std::abs(state[space.index(t, d)]));
      }
    }
    if (residual > 1e-9) {
      throw ConsistencyError(
          "qft_recursive: amplitude left outside the output section");
    }
    for (int row = 0; row < size; ++row) {
      out(row, col) = state[space.index(0, space.full_data(row))].real();
    }
  }
  return QftUnitary{n, std::move(basis), std::move(out)};
}

LoopInvariantReport loop_invariant_check(int n, const Eigen::VectorXcd& f,
                                         double tol) {
  if (n < 2) {
    throw DomainError("loop_invariant_check: degree must be at least 2");
  }
  if (n > kMaxLoopInvariantDegree) {
    throw ResourceError("loop_invariant_check: n exceeds ceiling " +
                        std::to_string(kMaxLoopInvariantDegree));
  }
  HybridSpace space(n);
  const int m = space.sub().size();
  const int full_size = space.full().size();
  if (f.size() != full_size) {
    throw DomainError("loop_invariant_check: amplitude count must be n!");
  }

  const QftUnitary& qn = qft_reference_cached(n);
  const QftUnitary& qsub = qft_reference_cached(n - 1);
  const Eigen::MatrixXcd qn_c = qn.matrix.cast<Complex>();
  const Eigen::MatrixXcd qsub_c = qsub.matrix.cast<Complex>();

  std::vector<int> coset_of(static_cast<size_t>(full_size));
  std::vector<Eigen::VectorXcd> f_sub(static_cast<size_t>(n + 1),
                                      Eigen::VectorXcd::Zero(m));
  for (int l = 0; l < full_size; ++l) {
    const auto [j, h] =
        coset_factorize(perm_unindex(static_cast<std::uint64_t>(l), n));
    coset_of[static_cast<size_t>(l)] = j;
    f_sub[static_cast<size_t>(j)][static_cast<Eigen::Index>(perm_index(h))] =
        f[l];
  }
  std::vector<Eigen::VectorXcd> f_sub_hat(static_cast<size_t>(n + 1));
  std::vector<Eigen::VectorXcd> f_coset_hat(static_cast<size_t>(n + 1));
  for (int j = 1; j <= n; ++j) {
    f_sub_hat[static_cast<size_t>(j)] = qsub_c * f_sub[static_cast<size_t>(j)];
    Eigen::VectorXcd coset = Eigen::VectorXcd::Zero(full_size);
    for (int l = 0; l < full_size; ++l) {
      if (coset_of[static_cast<size_t>(l)] == j) coset[l] = f[l];
    }
    f_coset_hat[static_cast<size_t>(j)] = qn_c * coset;
  }

  const RoundOps ops = build_ops(n, qsub.matrix);
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(space.dim());
  for (int l = 0; l < full_size; ++l) {
    state[space.index(0, space.full_data(l))] = f[l];
  }
  ops.w->apply(state);
  ops.sub_qft->apply(state);

  LoopInvariantReport report;
  const auto record = [&](int stage, double deviation) {
    report.max_deviation = std::max(report.max_deviation, deviation);
    if (deviation > tol && report.pass) {
      report.pass = false;
      report.first_violation = stage;
    }
  };

  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(space.dim());
  for (int j = 1; j <= n; ++j) {
    for (int d = 0; d < m; ++d) {
      expected[space.index(j, d)] = f_sub_hat[static_cast<size_t>(j)][d];
    }
  }
  record(0, (state - expected).cwiseAbs().maxCoeff());

  for (int k = 1; k <= n; ++k) {
    run_round(ops, k, state);

    expected.setZero();
    for (int j = 1; j <= k; ++j) {
      for (int l = 0; l < full_size; ++l) {
        expected[space.index(0, space.full_data(l))] +=
            f_coset_hat[static_cast<size_t>(j)][l];
      }
    }
    for (int j = k + 1; j <= n; ++j) {
      for (int d = 0; d < m; ++d) {
        expected[space.index(j, d)] = f_sub_hat[static_cast<size_t>(j)][d];
      }
    }
    record(k, (state - expected).cwiseAbs().maxCoeff());

    Eigen::VectorXcd isolated = Eigen::VectorXcd::Zero(space.dim());
    for (int d = 0; d < m; ++d) {
      isolated[space.index(0, d)] = f_sub_hat[static_cast<size_t>(k)][d];
    }
    ops.u->apply(isolated);
    ops.m[static_cast<size_t>(k - 1)]->apply(isolated);
    Eigen::VectorXcd isolated_expected = Eigen::VectorXcd::Zero(space.dim());
    for (int l = 0; l < full_size; ++l) {
      isolated_expected[space.index(0, space.full_data(l))] =
          f_coset_hat[static_cast<size_t>(k)][l];
    }
    record(k, (isolated - isolated_expected).cwiseAbs().maxCoeff());
  }
  return report;
}

}  // namespace symkron
