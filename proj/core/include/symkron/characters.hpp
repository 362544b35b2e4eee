#pragma once

#include <vector>

#include "symkron/bigint.hpp"
#include "symkron/partition.hpp"

namespace symkron {

/// Ceiling on the degree accepted by character_table and the row-sum
/// operations; full tables stay interactive through n = 14 and finish
/// within a minute at n = 20 single-threaded.
inline constexpr int kMaxCharacterDegree = 20;

/// Irreducible character value chi_lambda(mu), exact.
BigInt character(const Partition& lambda, const Partition& mu);

/// The full character table of S_n. Rows are labeled by lambda and columns
/// by conjugacy class, both in the global partition order, so the identity
/// class (1^n) is the last column.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return partitions_.n(); }
  const PartitionList& partitions() const { return partitions_; }
  const BigInt& value(int lambda_index, int class_index) const;
  const BigInt& value(const Partition& lambda, const Partition& mu) const;

 private:
  PartitionList partitions_;
  std::vector<std::vector<BigInt>> values_;
};

CharacterTable character_table(int n);

struct RowSumRecord {
  Partition lambda;
  BigInt value;  // sum of chi_lambda over all classes, one per cycle type
};

/// R_lambda = sum over partitions mu of n of chi_lambda(mu).
RowSumRecord row_sum(const Partition& lambda);

/// Multiplicity of lambda in the conjugation representation, computed as
/// (1/n!) sum over classes of chi_lambda(C) |C| |Z(C)| with the division
/// checked exact. Equals row_sum by a centralizer identity; the two code
/// paths weight the classes differently and cross-check each other.
BigInt row_sum_via_multiplicity(const Partition& lambda);

/// Character of the conjugation representation at cycle type mu: the
/// number of group elements commuting with a representative, i.e. the
/// centralizer order.
BigInt conjugation_character(const Partition& mu);

}  // namespace symkron
