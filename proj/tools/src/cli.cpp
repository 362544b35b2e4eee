#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symkron/bigint.hpp"
#include "symkron/characters.hpp"
#include "symkron/errors.hpp"
#include "symkron/fourier.hpp"
#include "symkron/gsim.hpp"
#include "symkron/group_table.hpp"
#include "symkron/kronecker.hpp"
#include "symkron/partition.hpp"
#include "symkron/permutation.hpp"
#include "symkron/qft_recursive.hpp"
#include "symkron/rng.hpp"
#include "symkron/tableau.hpp"
#include "symkron/yor.hpp"

namespace symkron::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kDefaultSessionCap = 12;
constexpr int kMaxYorVerifyDegree = 6;

/// Command-line level problem: bad value, unknown shape text, over a cap.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int session_cap() {
  const char* raw = std::getenv("SYMKRON_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultSessionCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > kMaxPartitionDegree) {
    throw UsageError(
        "SYMKRON_MAX_N must be an integer between 1 and " +
        std::to_string(kMaxPartitionDegree));
  }
  return static_cast<int>(value);
}

void require_degree(int n, const std::string& what) {
  if (n < 1) throw UsageError(what + ": n must be positive");
  const int cap = session_cap();
  if (n > cap) {
    throw UsageError(what + ": n = " + std::to_string(n) +
                     " exceeds the session cap " + std::to_string(cap) +
                     " (set SYMKRON_MAX_N to raise it)");
  }
}

void require_ceiling(int n, int ceiling, const std::string& what) {
  if (n > ceiling) {
    throw UsageError(what + ": n = " + std::to_string(n) +
                     " exceeds the hard ceiling " + std::to_string(ceiling));
  }
}

Partition parse_shape(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const DomainError& e) {
    throw UsageError("bad partition \"" + text + "\": " + e.what());
  }
}

ordered_json json_exact(const BigInt& value) {
  if (value.fits_slong_p()) {
    return static_cast<std::int64_t>(value.get_si());
  }
  return value.get_str();
}

std::string rational_text(const BigRat& value) { return to_string(value); }

void emit(std::ostream& out, const ordered_json& report) {
  out << report.dump(2) << "\n";
}

/// Collects named pass/fail checks and renders the aggregate report.
class Suite {
 public:
  void add(std::string identity, bool pass, ordered_json detail) {
    if (!pass && first_failure_.empty()) first_failure_ = identity;
    failed_ += pass ? 0 : 1;
    ordered_json entry;
    entry["identity"] = std::move(identity);
    entry["pass"] = pass;
    entry.update(detail);
    checks_.push_back(std::move(entry));
  }

  bool pass() const { return failed_ == 0; }
  const std::string& first_failure() const { return first_failure_; }

  ordered_json report() const {
    ordered_json r;
    r["checks"] = checks_;
    r["total"] = checks_.size();
    r["failed"] = failed_;
    r["pass"] = pass();
    if (failed_ > 0) r["first_failure"] = first_failure_;
    return r;
  }

 private:
  std::vector<ordered_json> checks_;
  int failed_ = 0;
  std::string first_failure_;
};

int finish_verification(const std::string& command, int n, const Suite& suite,
                        std::ostream& out, std::ostream& err) {
  ordered_json report;
  report["command"] = command;
  report["n"] = n;
  report.update(suite.report());
  emit(out, report);
  if (!suite.pass()) {
    err << command << ": verification failed: " << suite.first_failure()
        << "\n";
    return 1;
  }
  return 0;
}

int run_partitions(int n, std::ostream& out) {
  require_degree(n, "partitions");
  const PartitionList shapes(n);
  ordered_json report;
  report["command"] = "partitions";
  report["n"] = n;
  report["count"] = shapes.size();
  ordered_json list = ordered_json::array();
  for (int i = 0; i < shapes.size(); ++i) list.push_back(shapes.at(i).str());
  report["partitions"] = std::move(list);
  emit(out, report);
  return 0;
}

int run_dims(int n, std::ostream& out) {
  require_degree(n, "dims");
  const PartitionList shapes(n);
  ordered_json report;
  report["command"] = "dims";
  report["n"] = n;
  report["order"] = json_exact(factorial(n));
  ordered_json entries = ordered_json::array();
  BigInt square_sum = 0;
  for (int i = 0; i < shapes.size(); ++i) {
    const BigInt d = hook_dimension(shapes.at(i));
    square_sum += d * d;
    ordered_json entry;
    entry["partition"] = shapes.at(i).str();
    entry["dim"] = json_exact(d);
    entries.push_back(std::move(entry));
  }
  report["entries"] = std::move(entries);
  report["sum_dim_squared"] = json_exact(square_sum);
  emit(out, report);
  return 0;
}

std::string csv_cell(const std::string& text) { return "\"" + text + "\""; }

int run_chartable(int n, const std::string& format, std::ostream& out) {
  require_degree(n, "chartable");
  require_ceiling(n, kMaxCharacterDegree, "chartable");
  const CharacterTable table(n);
  const PartitionList& shapes = table.partitions();
  if (format == "csv") {
    out << csv_cell("lambda");
    for (int c = 0; c < shapes.size(); ++c) {
      out << "," << csv_cell(shapes.at(c).str());
    }
    out << "\n";
    for (int r = 0; r < shapes.size(); ++r) {
      out << csv_cell(shapes.at(r).str());
      for (int c = 0; c < shapes.size(); ++c) {
        out << "," << table.value(r, c).get_str();
      }
      out << "\n";
    }
    return 0;
  }
  ordered_json report;
  report["command"] = "chartable";
  report["n"] = n;
  ordered_json classes = ordered_json::array();
  for (int c = 0; c < shapes.size(); ++c) classes.push_back(shapes.at(c).str());
  report["classes"] = std::move(classes);
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < shapes.size(); ++r) {
    ordered_json row;
    row["partition"] = shapes.at(r).str();
    ordered_json values = ordered_json::array();
    for (int c = 0; c < shapes.size(); ++c) {
      values.push_back(json_exact(table.value(r, c)));
    }
    row["values"] = std::move(values);
    rows.push_back(std::move(row));
  }
  report["rows"] = std::move(rows);
  emit(out, report);
  return 0;
}

int run_rowsums(int n, std::ostream& out) {
  require_degree(n, "rowsums");
  require_ceiling(n, kMaxCharacterDegree, "rowsums");
  const PartitionList shapes(n);
  ordered_json report;
  report["command"] = "rowsums";
  report["n"] = n;
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < shapes.size(); ++i) {
    ordered_json entry;
    entry["partition"] = shapes.at(i).str();
    entry["row_sum"] = json_exact(row_sum(shapes.at(i)).value);
    entries.push_back(std::move(entry));
  }
  report["entries"] = std::move(entries);
  emit(out, report);
  return 0;
}

int run_kron(const std::string& mu_text, const std::string& nu_text,
             const std::string& lambda_text, std::ostream& out) {
  const Partition mu = parse_shape(mu_text);
  const Partition nu = parse_shape(nu_text);
  const Partition lambda = parse_shape(lambda_text);
  if (mu.n() != nu.n() || mu.n() != lambda.n()) {
    throw UsageError("kron: the three partitions must share one degree");
  }
  require_degree(mu.n(), "kron");
  require_ceiling(mu.n(), kMaxCharacterDegree, "kron");
  const KronResult kr = kron(mu, nu, lambda);
  ordered_json report;
  report["command"] = "kron";
  report["mu"] = mu.str();
  report["nu"] = nu.str();
  report["lambda"] = lambda.str();
  report["g"] = json_exact(kr.g);
  report["d_mu"] = json_exact(kr.d_mu);
  report["d_nu"] = json_exact(kr.d_nu);
  report["d_lambda"] = json_exact(kr.d_lambda);
  emit(out, report);
  return 0;
}

int run_kron_dist(const std::string& mu_text, const std::string& nu_text,
                  std::ostream& out) {
  const Partition mu = parse_shape(mu_text);
  const Partition nu = parse_shape(nu_text);
  if (mu.n() != nu.n()) {
    throw UsageError("kron-dist: the two partitions must share one degree");
  }
  require_degree(mu.n(), "kron-dist");
  require_ceiling(mu.n(), kMaxCharacterDegree, "kron-dist");
  const KronDistribution dist = kron_distribution(mu, nu);
  ordered_json report;
  report["command"] = "kron-dist";
  report["mu"] = mu.str();
  report["nu"] = nu.str();
  ordered_json weights;
  for (const auto& [shape, weight] : dist.weights) {
    weights[shape.str()] = rational_text(weight);
  }
  report["weights"] = std::move(weights);
  emit(out, report);
  return 0;
}

int run_sample(const std::string& mu_text, const std::string& nu_text,
               int count, std::uint64_t seed, std::ostream& out) {
  const Partition mu = parse_shape(mu_text);
  const Partition nu = parse_shape(nu_text);
  if (mu.n() != nu.n()) {
    throw UsageError("sample: the two partitions must share one degree");
  }
  require_degree(mu.n(), "sample");
  require_ceiling(mu.n(), kMaxKronSamplerDegree, "sample");
  KronSampler sampler(mu, nu, seed);
  const PartitionList& labels = sampler.labels();
  std::vector<int> counts(static_cast<size_t>(labels.size()), 0);
  ordered_json samples = ordered_json::array();
  for (int i = 0; i < count; ++i) {
    const Partition drawn = sampler.sample();
    ++counts[static_cast<size_t>(labels.index_of(drawn))];
    samples.push_back(drawn.str());
  }
  ordered_json report;
  report["command"] = "sample";
  report["mu"] = mu.str();
  report["nu"] = nu.str();
  report["seed"] = seed;
  report["count"] = count;
  ordered_json histogram;
  for (int s = 0; s < labels.size(); ++s) {
    histogram[labels.at(s).str()] = counts[static_cast<size_t>(s)];
  }
  report["histogram"] = std::move(histogram);
  report["samples"] = std::move(samples);
  emit(out, report);
  return 0;
}

int run_verify_yor(int n, std::ostream& out, std::ostream& err) {
  require_degree(n, "verify-yor");
  require_ceiling(n, kMaxYorVerifyDegree, "verify-yor");
  const PartitionList shapes(n);
  const std::uint64_t order = factorial(n).get_ui();
  Suite suite;

  double worst_orth = 0.0;
  double worst_sym = 0.0;
  for (int s = 0; s < shapes.size(); ++s) {
    for (const Eigen::MatrixXd& g : yor_generators(shapes.at(s))) {
      const Eigen::MatrixXd eye =
          Eigen::MatrixXd::Identity(g.rows(), g.cols());
      worst_orth = std::max(
          worst_orth, (g.transpose() * g - eye).cwiseAbs().maxCoeff());
      worst_sym =
          std::max(worst_sym, (g - g.transpose()).cwiseAbs().maxCoeff());
    }
  }
  suite.add("adjacent transposition matrices are orthogonal",
            worst_orth <= 1e-10,
            {{"max_deviation", worst_orth}, {"tolerance", 1e-10}});
  suite.add("adjacent transposition matrices are symmetric",
            worst_sym <= 1e-10,
            {{"max_deviation", worst_sym}, {"tolerance", 1e-10}});

  std::mt19937_64 gen(0);
  double worst_hom = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = perm_unindex(gen() % order, n);
    const Permutation q = perm_unindex(gen() % order, n);
    const Permutation pq = compose(p, q);
    for (int s = 0; s < shapes.size(); ++s) {
      const Eigen::MatrixXd lhs = yor_matrix(shapes.at(s), pq).m;
      const Eigen::MatrixXd rhs =
          yor_matrix(shapes.at(s), p).m * yor_matrix(shapes.at(s), q).m;
      worst_hom = std::max(worst_hom, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  suite.add("irrep matrices respect composition", worst_hom <= 1e-10,
            {{"pairs", 100},
             {"max_deviation", worst_hom},
             {"tolerance", 1e-10}});

  const CharacterTable table(n);
  double worst_trace = 0.0;
  for (std::uint64_t rank = 0; rank < order; ++rank) {
    const Permutation pi = perm_unindex(rank, n);
    const int class_idx = shapes.index_of(cycle_type(pi));
    for (int s = 0; s < shapes.size(); ++s) {
      const double trace = yor_matrix(shapes.at(s), pi).m.trace();
      const double exact = table.value(s, class_idx).get_d();
      worst_trace = std::max(worst_trace, std::abs(trace - exact));
    }
  }
  suite.add("matrix traces reproduce the exact characters",
            worst_trace <= 1e-9,
            {{"max_deviation", worst_trace}, {"tolerance", 1e-9}});

  if (n >= 2) {
    const std::uint64_t sub_order = factorial(n - 1).get_ui();
    double worst_block = 0.0;
    for (std::uint64_t rank = 0; rank < sub_order; ++rank) {
      const Permutation h = perm_unindex(rank, n - 1);
      const Permutation hn = embed(h, n);
      for (int s = 0; s < shapes.size(); ++s) {
        const Eigen::MatrixXd big = yor_matrix(shapes.at(s), hn).m;
        Eigen::MatrixXd expect =
            Eigen::MatrixXd::Zero(big.rows(), big.cols());
        Eigen::Index offset = 0;
        for (const Partition& sub : branching_down(shapes.at(s))) {
          const Eigen::MatrixXd block = yor_matrix(sub, h).m;
          expect.block(offset, offset, block.rows(), block.cols()) = block;
          offset += block.rows();
        }
        worst_block =
            std::max(worst_block, (big - expect).cwiseAbs().maxCoeff());
      }
    }
    suite.add("restriction is block diagonal along the branching order",
              worst_block <= 1e-10,
              {{"max_deviation", worst_block}, {"tolerance", 1e-10}});
  }

  if (n <= 5) {
    double worst_gram = 0.0;
    std::vector<std::vector<Eigen::MatrixXd>> reps(
        static_cast<size_t>(shapes.size()));
    for (int s = 0; s < shapes.size(); ++s) {
      reps[static_cast<size_t>(s)].reserve(order);
      for (std::uint64_t rank = 0; rank < order; ++rank) {
        reps[static_cast<size_t>(s)].push_back(
            yor_matrix(shapes.at(s), perm_unindex(rank, n)).m);
      }
    }
    for (int s1 = 0; s1 < shapes.size(); ++s1) {
      const Eigen::Index d1 = reps[static_cast<size_t>(s1)][0].rows();
      for (int s2 = s1; s2 < shapes.size(); ++s2) {
        const Eigen::Index d2 = reps[static_cast<size_t>(s2)][0].rows();
        for (Eigen::Index i = 0; i < d1; ++i) {
          for (Eigen::Index j = 0; j < d1; ++j) {
            for (Eigen::Index k = 0; k < d2; ++k) {
              for (Eigen::Index l = 0; l < d2; ++l) {
                double sum = 0.0;
                for (std::uint64_t g = 0; g < order; ++g) {
                  sum += reps[static_cast<size_t>(s1)][g](i, j) *
                         reps[static_cast<size_t>(s2)][g](k, l);
                }
                const double expect =
                    (s1 == s2 && i == k && j == l)
                        ? static_cast<double>(order) / static_cast<double>(d1)
                        : 0.0;
                worst_gram = std::max(worst_gram, std::abs(sum - expect));
              }
            }
          }
        }
      }
    }
    suite.add("matrix coefficients are pairwise orthogonal over the group",
              worst_gram <= 1e-8,
              {{"max_deviation", worst_gram}, {"tolerance", 1e-8}});
  }

  return finish_verification("verify-yor", n, suite, out, err);
}

int run_verify_qft(int n, std::ostream& out, std::ostream& err) {
  require_degree(n, "verify-qft");
  require_ceiling(n, kMaxQftDegree, "verify-qft");
  Suite suite;

  const QftUnitary recursive = qft_recursive(n);
  const QftUnitary& reference = qft_reference_cached(n);
  const double deviation =
      (recursive.matrix - reference.matrix).cwiseAbs().maxCoeff();
  suite.add("recursive transform matches the direct construction",
            deviation <= 1e-8,
            {{"max_deviation", deviation}, {"tolerance", 1e-8}});

  const Eigen::MatrixXd gram = recursive.matrix.transpose() * recursive.matrix;
  const double defect =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();
  suite.add("recursive transform is orthogonal", defect <= 1e-10,
            {{"unitarity_defect", defect}, {"tolerance", 1e-10}});

  if (n >= 2 && n <= kMaxLoopInvariantDegree) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXcd f(recursive.matrix.cols());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      f[i] = std::complex<double>(dist(gen), dist(gen));
    }
    f /= f.norm();
    const LoopInvariantReport report = loop_invariant_check(n, f);
    suite.add("stagewise recursion invariant holds for a random input",
              report.pass,
              {{"max_deviation", report.max_deviation},
               {"first_violation", report.first_violation},
               {"tolerance", 1e-8}});
  }

  return finish_verification("verify-qft", n, suite, out, err);
}

Eigen::VectorXcd character_column(const CharacterTable& table,
                                  const GroupTable& group, int shape_idx) {
  Eigen::VectorXcd v(group.size());
  for (int g = 0; g < group.size(); ++g) {
    v[g] = table.value(shape_idx, group.class_index(g)).get_d();
  }
  return v / v.norm();
}

GroupAlgebraState character_triple(const CharacterTable& table,
                                   const GroupTable& group, int a, int b,
                                   int c) {
  const Eigen::VectorXcd va = character_column(table, group, a);
  const Eigen::VectorXcd vb = character_column(table, group, b);
  const Eigen::VectorXcd vc = character_column(table, group, c);
  const Eigen::Index size = va.size();
  GroupAlgebraState psi{group.n(), 3, Eigen::VectorXcd(size * size * size)};
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      for (Eigen::Index k = 0; k < size; ++k) {
        psi.amplitudes[(i * size + j) * size + k] = va[i] * vb[j] * vc[k];
      }
    }
  }
  return psi;
}

int run_verify_trace(int n, bool algebra_only, std::ostream& out,
                     std::ostream& err) {
  require_degree(n, "verify-trace");
  require_ceiling(n, kMaxWitnessDegree, "verify-trace");
  const CharacterTable table(n);
  const PartitionList& shapes = table.partitions();
  Suite suite;

  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < shapes.size(); ++a) {
    for (int b = 0; b < shapes.size(); ++b) {
      for (int c = 0; c < shapes.size(); ++c) triples.push_back({a, b, c});
    }
  }

  for (const auto& [a, b, c] : triples) {
    const Partition& mu = shapes.at(a);
    const Partition& nu = shapes.at(b);
    const Partition& lambda = shapes.at(c);
    const KronResult kr = kron(table, mu, nu, lambda);
    const BigRat trace = witness_projector_trace(mu, nu, lambda);
    const BigInt expected = kr.d_mu * kr.d_nu * kr.d_lambda * kr.g;
    const bool pass = trace == BigRat(expected);
    suite.add("projector trace at (" + mu.str() + " | " + nu.str() + " | " +
                  lambda.str() + ") equals d_mu d_nu d_lambda g",
              pass,
              {{"trace", json_exact(BigInt(trace.get_num()))},
               {"expected", json_exact(expected)}});
  }

  if (!algebra_only) {
    const GroupTable& group = group_table_cached(n);
    double worst_accept = 0.0;
    double worst_measure = 0.0;
    for (const auto& [a, b, c] : triples) {
      const Partition& mu = shapes.at(a);
      const Partition& nu = shapes.at(b);
      const Partition& lambda = shapes.at(c);
      const KronResult kr = kron(table, mu, nu, lambda);
      const GroupAlgebraState psi = character_triple(table, group, a, b, c);
      const double accept = witness_acceptance(mu, nu, lambda, psi);
      const double expect =
          kr.g.get_d() /
          (kr.d_mu.get_d() * kr.d_nu.get_d() * kr.d_lambda.get_d());
      worst_accept = std::max(worst_accept, std::abs(accept - expect));

      SplitRng rng(0);
      const WitnessRecord rec = measure_witness(mu, nu, lambda, psi, rng);
      const double expected_prob = rec.accepted ? accept : 1.0 - accept;
      worst_measure =
          std::max(worst_measure, std::abs(rec.probability - expected_prob));
    }
    suite.add("character tuple acceptance equals the coupling ratio",
              worst_accept <= 1e-10,
              {{"max_deviation", worst_accept}, {"tolerance", 1e-10}});
    suite.add("measured branch probability matches the projector algebra",
              worst_measure <= 1e-9,
              {{"max_deviation", worst_measure}, {"tolerance", 1e-9}});
  }

  return finish_verification("verify-trace", n, suite, out, err);
}

int run_verify_rowsum(int n, std::ostream& out, std::ostream& err) {
  require_degree(n, "verify-rowsum");
  require_ceiling(n, kMaxCharacterDegree, "verify-rowsum");
  const PartitionList shapes(n);
  Suite suite;

  bool all_nonnegative = true;
  std::string first_negative;
  for (int s = 0; s < shapes.size(); ++s) {
    const Partition& shape = shapes.at(s);
    const BigInt direct = row_sum(shape).value;
    const BigInt multiplicity = row_sum_via_multiplicity(shape);
    suite.add("row sum of " + shape.str() +
                  " equals its conjugation multiplicity",
              direct == multiplicity,
              {{"row_sum", json_exact(direct)},
               {"multiplicity", json_exact(multiplicity)}});
    if (direct < 0 && all_nonnegative) {
      all_nonnegative = false;
      first_negative = shape.str();
    }
  }
  ordered_json nonneg_detail = ordered_json::object();
  if (!all_nonnegative) nonneg_detail["first_negative"] = first_negative;
  suite.add("all row sums are nonnegative", all_nonnegative,
            std::move(nonneg_detail));

  if (n <= kMaxConjTraceDegree) {
    for (int s = 0; s < shapes.size(); ++s) {
      const Partition& shape = shapes.at(s);
      const BigRat trace = trace_conj_projector(shape);
      const BigInt expected = hook_dimension(shape) * row_sum(shape).value;
      suite.add("conjugation projector trace at " + shape.str() +
                    " equals dim times row sum",
                trace == BigRat(expected),
                {{"trace", json_exact(BigInt(trace.get_num()))},
                 {"expected", json_exact(expected)}});
    }
  }

  return finish_verification("verify-rowsum", n, suite, out, err);
}

int run_verify_all(int n, std::ostream& out, std::ostream& err) {
  require_degree(n, "verify-all");
  ordered_json report;
  report["command"] = "verify-all";
  report["n"] = n;
  ordered_json suites = ordered_json::array();
  bool all_pass = true;

  const auto capture = [&](const std::string& name, int ceiling, auto&& fn) {
    ordered_json entry;
    entry["suite"] = name;
    if (n > ceiling) {
      entry["skipped"] = true;
      entry["reason"] =
          "n exceeds the suite ceiling " + std::to_string(ceiling);
      suites.push_back(std::move(entry));
      return;
    }
    std::ostringstream sub_out;
    std::ostringstream sub_err;
    const int code = fn(sub_out, sub_err);
    entry["report"] = ordered_json::parse(sub_out.str());
    suites.push_back(std::move(entry));
    if (code != 0) all_pass = false;
  };

  capture("yor", kMaxYorVerifyDegree, [&](std::ostream& o, std::ostream& e) {
    return run_verify_yor(n, o, e);
  });
  capture("qft", kMaxQftDegree, [&](std::ostream& o, std::ostream& e) {
    return run_verify_qft(n, o, e);
  });
  capture("trace", kMaxWitnessDegree, [&](std::ostream& o, std::ostream& e) {
    return run_verify_trace(n, false, o, e);
  });
  capture("rowsum", kMaxCharacterDegree,
          [&](std::ostream& o, std::ostream& e) {
            return run_verify_rowsum(n, o, e);
          });

  report["suites"] = std::move(suites);
  report["pass"] = all_pass;
  emit(out, report);
  if (!all_pass) {
    err << "verify-all: at least one suite failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact symmetric-group toolkit: characters, coupling coefficients, "
      "Fourier transforms over the group algebra, and their verification "
      "suites. Degrees are capped per session (default 12); set the "
      "SYMKRON_MAX_N environment variable to raise the cap up to the "
      "library ceilings."};
  app.name("symkron");
  app.require_subcommand(1);
  int exit_code = 0;

  int n = 0;
  std::string mu_text, nu_text, lambda_text;
  std::string format = "json";
  int count = 1;
  std::uint64_t seed = 0;
  bool algebra_only = false;

  CLI::App* partitions =
      app.add_subcommand("partitions", "List the partitions of n in the "
                                       "global order, largest part first");
  partitions->add_option("n", n, "degree")->required();
  partitions->callback([&] { exit_code = run_partitions(n, out); });

  CLI::App* dims = app.add_subcommand(
      "dims", "Irreducible dimensions by the hook length formula");
  dims->add_option("n", n, "degree")->required();
  dims->callback([&] { exit_code = run_dims(n, out); });

  CLI::App* chartable = app.add_subcommand(
      "chartable", "Exact character table, rows and columns in the global "
                   "partition order");
  chartable->add_option("n", n, "degree")->required();
  chartable->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  chartable->callback([&] { exit_code = run_chartable(n, format, out); });

  CLI::App* rowsums = app.add_subcommand(
      "rowsums", "Character row sums over the conjugacy classes");
  rowsums->add_option("n", n, "degree")->required();
  rowsums->callback([&] { exit_code = run_rowsums(n, out); });

  CLI::App* kron_cmd = app.add_subcommand(
      "kron", "Kronecker coefficient of three partitions of one degree");
  kron_cmd->add_option("mu", mu_text, "first partition, e.g. 2,1")->required();
  kron_cmd->add_option("nu", nu_text, "second partition")->required();
  kron_cmd->add_option("lambda", lambda_text, "third partition")->required();
  kron_cmd->callback(
      [&] { exit_code = run_kron(mu_text, nu_text, lambda_text, out); });

  CLI::App* kron_dist = app.add_subcommand(
      "kron-dist", "Exact label distribution d_lambda g / (d_mu d_nu)");
  kron_dist->add_option("mu", mu_text, "first partition")->required();
  kron_dist->add_option("nu", nu_text, "second partition")->required();
  kron_dist->callback(
      [&] { exit_code = run_kron_dist(mu_text, nu_text, out); });

  CLI::App* sample = app.add_subcommand(
      "sample", "Draw labels from the coupling distribution by simulated "
                "measurement");
  sample->add_option("mu", mu_text, "first partition")->required();
  sample->add_option("nu", nu_text, "second partition")->required();
  sample->add_option("--count", count, "number of draws")
      ->check(CLI::Range(1, 10000000));
  sample->add_option("--seed", seed, "random seed (default 0, fixed)");
  sample->callback(
      [&] { exit_code = run_sample(mu_text, nu_text, count, seed, out); });

  CLI::App* verify_yor = app.add_subcommand(
      "verify-yor", "Check the orthogonal irrep matrices: orthogonality, "
                    "composition, traces, restriction blocks");
  verify_yor->add_option("n", n, "degree")->required();
  verify_yor->callback([&] { exit_code = run_verify_yor(n, out, err); });

  CLI::App* verify_qft = app.add_subcommand(
      "verify-qft", "Check the recursive Fourier transform against the "
                    "direct construction");
  verify_qft->add_option("n", n, "degree")->required();
  verify_qft->callback([&] { exit_code = run_verify_qft(n, out, err); });

  CLI::App* verify_trace = app.add_subcommand(
      "verify-trace", "Check the exact witness projector traces against "
                      "coupling coefficients for every triple of degree n");
  verify_trace->add_option("n", n, "degree")->required();
  verify_trace->add_flag("--algebra-only", algebra_only,
                         "skip the floating-point measurement paths");
  verify_trace->callback(
      [&] { exit_code = run_verify_trace(n, algebra_only, out, err); });

  CLI::App* verify_rowsum = app.add_subcommand(
      "verify-rowsum", "Check row sums against conjugation multiplicities "
                       "and projector traces");
  verify_rowsum->add_option("n", n, "degree")->required();
  verify_rowsum->callback([&] { exit_code = run_verify_rowsum(n, out, err); });

  CLI::App* verify_all = app.add_subcommand(
      "verify-all", "Run every verification suite that admits degree n");
  verify_all->add_option("n", n, "degree")->required();
  verify_all->callback([&] { exit_code = run_verify_all(n, out, err); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace symkron::cli
