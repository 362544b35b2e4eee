#pragma once

#include <vector>

#include "symkron/bigint.hpp"
#include "symkron/characters.hpp"
#include "symkron/partition.hpp"

namespace symkron {

struct KronResult {
  Partition mu, nu, lambda;
  BigInt g;
  BigInt d_mu, d_nu, d_lambda;
};

/// Kronecker coefficient g_{mu nu lambda}: the class-weighted triple
/// character sum divided by n!, with the division checked exact.
KronResult kron(const Partition& mu, const Partition& nu,
                const Partition& lambda);

/// Same, reusing a prebuilt character table of matching degree.
KronResult kron(const CharacterTable& table, const Partition& mu,
                const Partition& nu, const Partition& lambda);

struct KronDistribution {
  Partition mu, nu;
  /// Weight d_lambda g_{mu nu lambda} / (d_mu d_nu) per lambda, in the
  /// global partition order. Weights are exact and sum to one.
  std::vector<std::pair<Partition, BigRat>> weights;

  const BigRat& weight_of(const Partition& lambda) const;
};

KronDistribution kron_distribution(const Partition& mu, const Partition& nu);

/// Checks sum over lambda of d_lambda g_{mu nu lambda} == d_mu d_nu and
/// returns both sides.
struct IdentityDecomposition {
  BigInt lhs;  // sum of d_lambda g
  BigInt rhs;  // d_mu d_nu
  bool holds() const { return lhs == rhs; }
};

IdentityDecomposition check_identity_decomposition(const Partition& mu,
                                                   const Partition& nu);

}  // namespace symkron
