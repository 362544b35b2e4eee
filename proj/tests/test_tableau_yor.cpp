#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symkron/characters.hpp"
#include "symkron/errors.hpp"
#include "symkron/tableau.hpp"
#include "symkron/yor.hpp"

using namespace symkron;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::uint64_t fact(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  return perm_unindex(rng() % fact(n), n);
}

}  // namespace

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(StandardTableau(P({2, 1}), {{1, 2}, {3}}));
  CHECK_THROWS_AS(StandardTableau(P({2, 1}), {{2, 1}, {3}}), DomainError);
  CHECK_THROWS_AS(StandardTableau(P({2, 1}), {{1, 3}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(StandardTableau(P({2, 1}), {{1, 1}, {2}}), DomainError);
  const StandardTableau t(P({2, 1}), {{1, 3}, {2}});
  CHECK(t.position_of(3) == std::pair<int, int>{1, 2});
  CHECK(t.str() == "{1,3|2}");
}

TEST_CASE("branching order and dimension split") {
  CHECK(branching_down(P({4})) == std::vector<Partition>{P({3})});
  CHECK(branching_down(P({2, 1})) ==
        std::vector<Partition>{P({2}), P({1, 1})});
  // Corner cells of (3,3,1) sit at (2,3) and (3,1); the global order puts
  // (3,3) ahead of (3,2,1).
  CHECK(branching_down(P({3, 3, 1})) ==
        std::vector<Partition>{P({3, 3}), P({3, 2, 1})});

  for (int n = 2; n <= 7; ++n) {
    const PartitionList list(n - 1);
    for (const Partition& lambda : enumerate_partitions(n)) {
      const auto below = branching_down(lambda);
      BigInt total = 0;
      int previous = -1;
      for (const Partition& b : below) {
        total += hook_dimension(b);
        const int index = list.index_of(b);
        CHECK(index > previous);
        previous = index;
      }
      CHECK(total == hook_dimension(lambda));
    }
  }
}

TEST_CASE("standard tableaux in last-letter order") {
  const auto t21 = standard_tableaux(P({2, 1}));
  REQUIRE(t21.size() == 2);
  CHECK(t21[0] == StandardTableau(P({2, 1}), {{1, 2}, {3}}));
  CHECK(t21[1] == StandardTableau(P({2, 1}), {{1, 3}, {2}}));

  const auto t22 = standard_tableaux(P({2, 2}));
  REQUIRE(t22.size() == 2);
  CHECK(t22[0] == StandardTableau(P({2, 2}), {{1, 2}, {3, 4}}));
  CHECK(t22[1] == StandardTableau(P({2, 2}), {{1, 3}, {2, 4}}));

  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      CHECK(standard_tableaux(lambda).size() ==
            static_cast<size_t>(
                oracle::standard_filling_count(lambda.parts())));
    }
  }
}

TEST_CASE("last-letter order groups by the cell of n") {
  // Within each shape the tableaux holding n in the same cell must be
  // contiguous, groups following branching_down.
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      const auto tableaux = standard_tableaux(lambda);
      const auto below = branching_down(lambda);
      size_t at = 0;
      for (const Partition& b : below) {
        const BigInt d = hook_dimension(b);
        for (BigInt i = 0; i < d; ++i) {
          int row = 0;
          while (b.part(row) == lambda.part(row)) ++row;
          CHECK(tableaux[at].position_of(n).first == row + 1);
          ++at;
        }
      }
      CHECK(at == tableaux.size());
    }
  }
}

TEST_CASE("adjacent generator matrices for (2,1)") {
  const IrrepMatrix s1 = yor_adjacent(P({2, 1}), 1);
  CHECK(s1.m(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s1.m(1, 1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(s1.m(0, 1)) < 1e-14);
  CHECK(std::abs(s1.m(1, 0)) < 1e-14);

  // First tableau {1,2|3}: axial distance from 2 at (1,2) to 3 at (2,1)
  // is -2, so the diagonal runs (-1/2, 1/2).
  const IrrepMatrix s2 = yor_adjacent(P({2, 1}), 2);
  CHECK(s2.m(0, 0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(s2.m(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s2.m(0, 1) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(s2.m(1, 0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));

  CHECK(yor_adjacent(P({3}), 1).m(0, 0) == doctest::Approx(1.0));
  CHECK(yor_adjacent(P({1, 1, 1}), 1).m(0, 0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(yor_adjacent(P({2, 1}), 3), DomainError);
}

TEST_CASE("adjacent word reconstructs the permutation") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t i = 0; i < fact(n); ++i) {
      const Permutation pi = perm_unindex(i, n);
      Permutation product = Permutation::identity(n);
      for (int k : adjacent_word(pi)) {
        std::vector<int> images;
        for (int v = 1; v <= n; ++v) images.push_back(v);
        std::swap(images[static_cast<size_t>(k - 1)],
                  images[static_cast<size_t>(k)]);
        product = compose(product, Permutation(images));
      }
      CHECK(product == pi);
    }
  }
}

TEST_CASE("yor matrix of the identity and a 3-cycle") {
  const IrrepMatrix id = yor_matrix(P({2, 1}), Permutation::identity(3));
  CHECK((id.m - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-14);

  const IrrepMatrix cyc = yor_matrix(P({2, 1}), Permutation({2, 3, 1}));
  CHECK(cyc.m.trace() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("yor is a homomorphism on seeded random pairs") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      for (int trial = 0; trial < 20; ++trial) {
        const Permutation a = random_perm(n, rng);
        const Permutation b = random_perm(n, rng);
        const Eigen::MatrixXd lhs = yor_matrix(lambda, compose(a, b)).m;
        const Eigen::MatrixXd rhs =
            yor_matrix(lambda, a).m * yor_matrix(lambda, b).m;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("yor traces reproduce the characters through n = 5") {
  for (int n = 1; n <= 5; ++n) {
    const CharacterTable table = character_table(n);
    for (const Partition& lambda : table.partitions().all()) {
      for (std::uint64_t i = 0; i < fact(n); ++i) {
        const Permutation pi = perm_unindex(i, n);
        const double trace = yor_matrix(lambda, pi).m.trace();
        const double expected =
            table.value(lambda, cycle_type(pi)).get_d();
        CHECK(std::abs(trace - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("restriction to the point stabilizer is block diagonal") {
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      const auto below = branching_down(lambda);
      for (std::uint64_t i = 0; i < fact(n - 1); ++i) {
        const Permutation h = perm_unindex(i, n - 1);
        const Eigen::MatrixXd big =
            yor_matrix(lambda, embed(h, n)).m;
        int offset = 0;
        Eigen::MatrixXd expected =
            Eigen::MatrixXd::Zero(big.rows(), big.cols());
        for (const Partition& b : below) {
          const Eigen::MatrixXd block =
              n - 1 == 1 ? Eigen::MatrixXd::Identity(1, 1)
                         : yor_matrix(b, h).m;
          expected.block(offset, offset, block.rows(), block.cols()) = block;
          offset += static_cast<int>(block.rows());
        }
        CHECK((big - expected).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("grand orthogonality through n = 4") {
  for (int n = 2; n <= 4; ++n) {
    const auto partitions = enumerate_partitions(n);
    // Gather all matrices once.
    std::vector<std::vector<Eigen::MatrixXd>> reps(partitions.size());
    for (size_t p = 0; p < partitions.size(); ++p) {
      for (std::uint64_t i = 0; i < fact(n); ++i) {
        reps[p].push_back(yor_matrix(partitions[p], perm_unindex(i, n)).m);
      }
    }
    const double order = static_cast<double>(fact(n));
    for (size_t p = 0; p < partitions.size(); ++p) {
      for (size_t q = p; q < partitions.size(); ++q) {
        const int dp = static_cast<int>(reps[p][0].rows());
        const int dq = static_cast<int>(reps[q][0].rows());
        for (int i = 0; i < dp; ++i) {
          for (int j = 0; j < dp; ++j) {
            for (int k = 0; k < dq; ++k) {
              for (int l = 0; l < dq; ++l) {
                double sum = 0;
                for (std::uint64_t g = 0; g < fact(n); ++g) {
                  sum += reps[p][g](i, j) * reps[q][g](k, l);
                }
                const double expected =
                    (p == q && i == k && j == l) ? order / dp : 0.0;
                CHECK(std::abs(sum - expected) < 1e-8);
              }
            }
          }
        }
      }
    }
  }
}
