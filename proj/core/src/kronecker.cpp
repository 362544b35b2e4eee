#include "symkron/kronecker.hpp"

#include "symkron/conjugacy.hpp"
#include "symkron/errors.hpp"

namespace symkron {

namespace {

void require_common_degree(const Partition& mu, const Partition& nu,
                           const Partition& lambda) {
  if (mu.n() == 0 || mu.n() != nu.n() || mu.n() != lambda.n()) {
    throw DomainError("kron: arguments must partition the same positive n");
  }
}

}  // namespace

KronResult kron(const CharacterTable& table, const Partition& mu,
                const Partition& nu, const Partition& lambda) {
  require_common_degree(mu, nu, lambda);
  if (table.n() != mu.n()) {
    throw DomainError("kron: character table degree mismatch");
  }
  const PartitionList& classes = table.partitions();
  const int mu_i = classes.index_of(mu);
  const int nu_i = classes.index_of(nu);
  const int lambda_i = classes.index_of(lambda);
  BigInt weighted = 0;
  for (int c = 0; c < classes.size(); ++c) {
    weighted += class_data(classes.at(c)).size * table.value(mu_i, c) *
                table.value(nu_i, c) * table.value(lambda_i, c);
  }
  BigInt g = exact_div(weighted, factorial(mu.n()),
                       "Kronecker coefficient class sum");
  return KronResult{mu,
                    nu,
                    lambda,
                    std::move(g),
                    hook_dimension(mu),
                    hook_dimension(nu),
                    hook_dimension(lambda)};
}

KronResult kron(const Partition& mu, const Partition& nu,
                const Partition& lambda) {
  require_common_degree(mu, nu, lambda);
  return kron(character_table(mu.n()), mu, nu, lambda);
}

const BigRat& KronDistribution::weight_of(const Partition& lambda) const {
  for (const auto& [part, weight] : weights) {
    if (part == lambda) return weight;
  }
  throw DomainError("KronDistribution: no weight for " + lambda.str());
}

KronDistribution kron_distribution(const Partition& mu, const Partition& nu) {
  if (mu.n() == 0 || mu.n() != nu.n()) {
    throw DomainError("kron_distribution: arguments must partition the same n");
  }
  const CharacterTable table = character_table(mu.n());
  const BigInt d_mu = hook_dimension(mu);
  const BigInt d_nu = hook_dimension(nu);
  KronDistribution dist{mu, nu, {}};
  BigRat total = 0;
  for (const Partition& lambda : table.partitions().all()) {
    const KronResult k = kron(table, mu, nu, lambda);
    BigRat weight(k.d_lambda * k.g, d_mu * d_nu);
    weight.canonicalize();
    total += weight;
    dist.weights.emplace_back(lambda, std::move(weight));
  }
  if (total != 1) {
    throw ConsistencyError("kron_distribution: weights sum to " +
                           to_string(total) + ", expected 1");
  }
  return dist;
}

IdentityDecomposition check_identity_decomposition(const Partition& mu,
                                                   const Partition& nu) {
  if (mu.n() == 0 || mu.n() != nu.n()) {
    throw DomainError(
        "check_identity_decomposition: arguments must partition the same n");
  }
  const CharacterTable table = character_table(mu.n());
  BigInt lhs = 0;
  for (const Partition& lambda : table.partitions().all()) {
    lhs += hook_dimension(lambda) * kron(table, mu, nu, lambda).g;
  }
  return IdentityDecomposition{std::move(lhs),
                               hook_dimension(mu) * hook_dimension(nu)};
}

}  // namespace symkron
