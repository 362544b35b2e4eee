#include "symkron/characters.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "symkron/conjugacy.hpp"
#include "symkron/errors.hpp"

namespace symkron {

namespace {

// Murnaghan-Nakayama recursion on border strips, with shapes handled as
// beta-sets: B = {lambda_i + (len - 1 - i)}. Removing a strip of length k
// replaces some b in B (with b >= k, b - k not in B) by b - k; the strip
// height is the number of elements of B strictly between b - k and b.
class CharacterEvaluator {
 public:
  BigInt eval(const std::vector<int>& shape, const std::vector<int>& cycles) {
    return eval_from(shape, cycles, 0);
  }

 private:
  BigInt eval_from(const std::vector<int>& shape,
                   const std::vector<int>& cycles, size_t pos) {
    if (shape.empty()) return pos == cycles.size() ? 1 : 0;
    if (pos == cycles.size()) {
      throw ConsistencyError("character recursion: cycle parts exhausted early");
    }
    const Key key{shape, {cycles.begin() + static_cast<std::ptrdiff_t>(pos),
                          cycles.end()}};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles[pos];
    std::vector<int> beta(shape.size());
    const int len = static_cast<int>(shape.size());
    for (int i = 0; i < len; ++i) {
      beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + len - 1 - i;
    }

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
      const int b = beta[static_cast<size_t>(i)];
      const int target = b - k;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int height = 0;
      for (int other : beta) {
        if (other > target && other < b) ++height;
      }
      std::vector<int> next_beta = beta;
      next_beta[static_cast<size_t>(i)] = target;
      std::sort(next_beta.begin(), next_beta.end(), std::greater<int>());
      std::vector<int> next_shape;
      for (int j = 0; j < len; ++j) {
        const int part = next_beta[static_cast<size_t>(j)] - (len - 1 - j);
        if (part > 0) next_shape.push_back(part);
      }
      const BigInt sub = eval_from(next_shape, cycles, pos + 1);
      total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(key, total);
    return total;
  }

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, BigInt> memo_;
};

void require_same_degree(const Partition& lambda, const Partition& mu,
                         const char* what) {
  if (lambda.n() != mu.n() || lambda.n() == 0) {
    throw DomainError(std::string(what) +
                      ": arguments must partition the same positive n");
  }
}

void require_table_degree(int n, const char* what) {
  if (n <= 0) throw DomainError(std::string(what) + ": n must be positive");
  if (n > kMaxCharacterDegree) {
    throw ResourceError(std::string(what) + ": n exceeds ceiling " +
                        std::to_string(kMaxCharacterDegree));
  }
}

PartitionList table_partitions(int n) {
  require_table_degree(n, "character_table");
  return PartitionList(n);
}

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
  require_same_degree(lambda, mu, "character");
  CharacterEvaluator evaluator;
  return evaluator.eval(lambda.parts(), mu.parts());
}

CharacterTable::CharacterTable(int n) : partitions_(table_partitions(n)) {
  CharacterEvaluator evaluator;
  const int count = partitions_.size();
  values_.resize(static_cast<size_t>(count));
  for (int r = 0; r < count; ++r) {
    auto& row = values_[static_cast<size_t>(r)];
    row.reserve(static_cast<size_t>(count));
    for (int c = 0; c < count; ++c) {
      row.push_back(evaluator.eval(partitions_.at(r).parts(),
                                   partitions_.at(c).parts()));
    }
  }
}

const BigInt& CharacterTable::value(int lambda_index, int class_index) const {
  return values_[static_cast<size_t>(lambda_index)][static_cast<size_t>(class_index)];
}

const BigInt& CharacterTable::value(const Partition& lambda,
                                    const Partition& mu) const {
  return value(partitions_.index_of(lambda), partitions_.index_of(mu));
}

CharacterTable character_table(int n) { return CharacterTable(n); }

RowSumRecord row_sum(const Partition& lambda) {
  require_table_degree(lambda.n(), "row_sum");
  CharacterEvaluator evaluator;
  BigInt total = 0;
  for (const Partition& mu : enumerate_partitions(lambda.n())) {
    total += evaluator.eval(lambda.parts(), mu.parts());
  }
  return RowSumRecord{lambda, std::move(total)};
}

BigInt row_sum_via_multiplicity(const Partition& lambda) {
  require_table_degree(lambda.n(), "row_sum_via_multiplicity");
  CharacterEvaluator evaluator;
  BigInt weighted = 0;
  for (const Partition& mu : enumerate_partitions(lambda.n())) {
    const ConjugacyClass cls = class_data(mu);
    weighted += evaluator.eval(lambda.parts(), mu.parts()) * cls.size *
                cls.centralizer_size;
  }
  return exact_div(weighted, factorial(lambda.n()),
                   "conjugation multiplicity");
}

BigInt conjugation_character(const Partition& mu) {
  return class_data(mu).centralizer_size;
}

}  // namespace symkron
