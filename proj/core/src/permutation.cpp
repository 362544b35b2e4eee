#include "symkron/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symkron/errors.hpp"

namespace symkron {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw DomainError("Permutation: degree must be positive");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) {
      throw DomainError("Permutation: images must be a bijection on {1.." +
                        std::to_string(n) + "}");
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n <= 0) throw DomainError("Permutation: degree must be positive");
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
    throw DomainError("Permutation::parse: expected \"[i1,...,in]\"");
  }
  std::vector<int> images;
  std::istringstream in(text.substr(1, text.size() - 2));
  std::string piece;
  while (std::getline(in, piece, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw DomainError("Permutation::parse: bad entry \"" + piece + "\"");
    }
    if (used != piece.size()) {
      throw DomainError("Permutation::parse: bad entry \"" + piece + "\"");
    }
    images.push_back(value);
  }
  return Permutation(std::move(images));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("compose: degree mismatch");
  }
  const int n = p.degree();
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<size_t>(i - 1)] = p(q(i));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<size_t>(p(i) - 1)] = i;
  }
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int length = 0;
    for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = p(j)) {
      seen[static_cast<size_t>(j - 1)] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

Permutation embed(const Permutation& h, int n) {
  if (n < h.degree()) throw DomainError("embed: target degree too small");
  std::vector<int> images = h.images();
  for (int i = h.degree() + 1; i <= n; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::uint64_t perm_index(const Permutation& p) {
  const int n = p.degree();
  if (n > kMaxPermIndexDegree) {
    throw ResourceError("perm_index: degree exceeds ceiling " +
                        std::to_string(kMaxPermIndexDegree));
  }
  std::uint64_t base = 1;
  for (int k = 2; k < n; ++k) base *= static_cast<std::uint64_t>(k);
  // base == (n-1)! ; shrink per position.
  std::uint64_t rank = 0;
  const auto& images = p.images();
  for (int i = 0; i < n - 1; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (images[static_cast<size_t>(j)] < images[static_cast<size_t>(i)]) {
        ++smaller_later;
      }
    }
    rank += smaller_later * base;
    base /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return rank;
}

Permutation perm_unindex(std::uint64_t index, int n) {
  if (n <= 0) throw DomainError("perm_unindex: degree must be positive");
  if (n > kMaxPermIndexDegree) {
    throw ResourceError("perm_unindex: degree exceeds ceiling " +
                        std::to_string(kMaxPermIndexDegree));
  }
  std::uint64_t base = 1;
  for (int k = 2; k < n; ++k) base *= static_cast<std::uint64_t>(k);
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t digit = base > 0 ? index / base : 0;
    if (digit >= pool.size()) {
      throw DomainError("perm_unindex: index out of range");
    }
    index -= digit * base;
    images.push_back(pool[static_cast<size_t>(digit)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    if (i < n - 1) base /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return Permutation(std::move(images));
}

Permutation transversal_element(int j, int n) {
  if (n <= 0) throw DomainError("transversal_element: degree must be positive");
  if (j < 1 || j > n) {
    throw DomainError("transversal_element: j must lie in {1.." +
                      std::to_string(n) + "}");
  }
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (i < j) {
      images[static_cast<size_t>(i - 1)] = i;
    } else if (i < n) {
      images[static_cast<size_t>(i - 1)] = i + 1;
    } else {
      images[static_cast<size_t>(i - 1)] = j;
    }
  }
  return Permutation(std::move(images));
}

std::pair<int, Permutation> coset_factorize(const Permutation& pi) {
  const int n = pi.degree();
  if (n < 2) throw DomainError("coset_factorize: degree must be at least 2");
  const int j = pi(n);
  const Permutation h_full = compose(inverse(transversal_element(j, n)), pi);
  if (h_full(n) != n) {
    throw ConsistencyError("coset_factorize: residual does not fix n");
  }
  std::vector<int> images(h_full.images().begin(), h_full.images().end() - 1);
  return {j, Permutation(std::move(images))};
}

}  // namespace symkron
