#include "symkron/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symkron/errors.hpp"

namespace symkron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("Partition: parts must be weakly decreasing");
    }
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw DomainError("Partition::parse: bad part \"" + piece + "\"");
    }
    if (used != piece.size()) {
      throw DomainError("Partition::parse: bad part \"" + piece + "\"");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw DomainError("Partition::parse: empty text");
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<size_t>(parts_[0]));
    for (int c = 0; c < parts_[0]; ++c) {
      int count = 0;
      for (int p : parts_) {
        if (p > c) ++count;
      }
      cols[static_cast<size_t>(c)] = count;
    }
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n <= 0) throw DomainError("enumerate_partitions: n must be positive");
  if (n > kMaxPartitionDegree) {
    throw DomainError("enumerate_partitions: n exceeds ceiling " +
                      std::to_string(kMaxPartitionDegree));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

BigInt hook_dimension(const Partition& lambda) {
  const auto& rows = lambda.parts();
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int arm = rows[r] - c - 1;
      int leg = conj.part(c) - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return exact_div(factorial(lambda.n()), hooks, "hook length formula");
}

PartitionList::PartitionList(int n) : n_(n), all_(enumerate_partitions(n)) {}

int PartitionList::index_of(const Partition& lambda) const {
  if (lambda.n() != n_) {
    throw DomainError("PartitionList: partition of " +
                      std::to_string(lambda.n()) + " in list for n = " +
                      std::to_string(n_));
  }
  for (int i = 0; i < size(); ++i) {
    if (all_[static_cast<size_t>(i)] == lambda) return i;
  }
  throw DomainError("PartitionList: partition not found");
}

}  // namespace symkron
