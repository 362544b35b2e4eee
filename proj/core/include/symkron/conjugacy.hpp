#pragma once

#include "symkron/bigint.hpp"
#include "symkron/partition.hpp"

namespace symkron {

/// A conjugacy class of S_n, keyed by cycle type.
struct ConjugacyClass {
  Partition cycle_type;
  BigInt size;
  BigInt centralizer_size;
};

/// Class data for cycle type mu: centralizer order prod_k k^{m_k} m_k!
/// (m_k = multiplicity of part k) and class size n!/centralizer.
ConjugacyClass class_data(const Partition& mu);

}  // namespace symkron
