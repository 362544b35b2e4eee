#include "symkron/tableau.hpp"

#include <algorithm>

#include "symkron/errors.hpp"

namespace symkron {

StandardTableau::StandardTableau(Partition shape,
                                 std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.n();
  if (static_cast<int>(rows_.size()) != shape_.num_parts()) {
    throw DomainError("StandardTableau: row count does not match shape");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.part(static_cast<int>(r))) {
      throw DomainError("StandardTableau: row length does not match shape");
    }
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) {
        throw DomainError("StandardTableau: entries must be 1..n once each");
      }
      seen[static_cast<size_t>(v - 1)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw DomainError("StandardTableau: rows must increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw DomainError("StandardTableau: columns must increase");
      }
    }
  }
}

std::pair<int, int> StandardTableau::position_of(int v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] == v) {
        return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      }
    }
  }
  throw DomainError("StandardTableau: value not present");
}

std::string StandardTableau::str() const {
  std::string out = "{";
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '|';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  out += '}';
  return out;
}

std::vector<Partition> branching_down(const Partition& lambda) {
  if (lambda.n() < 2) {
    throw DomainError("branching_down: shape must have at least two cells");
  }
  // Corner cells from the bottom row upward give exactly the global
  // (reverse-lexicographic) order: deleting lower leaves larger parts
  // earlier.
  std::vector<Partition> out;
  const auto& parts = lambda.parts();
  for (int r = lambda.num_parts() - 1; r >= 0; --r) {
    const bool corner =
        r + 1 == lambda.num_parts() || parts[static_cast<size_t>(r + 1)] <
                                           parts[static_cast<size_t>(r)];
    if (!corner) continue;
    std::vector<int> reduced = parts;
    if (--reduced[static_cast<size_t>(r)] == 0) reduced.pop_back();
    out.emplace_back(std::move(reduced));
  }
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  if (lambda.n() == 0) {
    throw DomainError("standard_tableaux: empty shape");
  }
  if (lambda.n() == 1) {
    return {StandardTableau(lambda, {{1}})};
  }
  const int n = lambda.n();
  std::vector<StandardTableau> out;
  for (const Partition& below : branching_down(lambda)) {
    // The deleted corner sits in the first row where the shapes differ.
    int row = 0;
    while (below.part(row) == lambda.part(row)) ++row;
    for (const StandardTableau& sub : standard_tableaux(below)) {
      std::vector<std::vector<int>> rows = sub.rows();
      if (row == static_cast<int>(rows.size())) rows.emplace_back();
      rows[static_cast<size_t>(row)].push_back(n);
      out.emplace_back(lambda, std::move(rows));
    }
  }
  return out;
}

}  // namespace symkron
