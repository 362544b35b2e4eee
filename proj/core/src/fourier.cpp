#include "symkron/fourier.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "symkron/errors.hpp"
#include "symkron/permutation.hpp"
#include "symkron/yor.hpp"

namespace symkron {

FourierBasis::FourierBasis(int n) : partitions_(n) {
  if (n > 8) {
    throw ResourceError("FourierBasis: degree exceeds ceiling 8");
  }
  for (int p = 0; p < partitions_.size(); ++p) {
    const int d = static_cast<int>(hook_dimension(partitions_.at(p)).get_si());
    dims_.push_back(d);
    offsets_.push_back(size_);
    size_ += d * d;
  }
}

int FourierBasis::index(int part_index, int row, int col) const {
  const int d = dim(part_index);
  if (row < 1 || row > d || col < 1 || col > d) {
    throw DomainError("FourierBasis: matrix position out of range");
  }
  return offset(part_index) + (row - 1) * d + (col - 1);
}

FourierBasis::Label FourierBasis::label(int basis_index) const {
  if (basis_index < 0 || basis_index >= size_) {
    throw DomainError("FourierBasis: index out of range");
  }
  int p = partitions_.size() - 1;
  while (offsets_[static_cast<size_t>(p)] > basis_index) --p;
  const int within = basis_index - offsets_[static_cast<size_t>(p)];
  const int d = dims_[static_cast<size_t>(p)];
  return Label{p, within / d + 1, within % d + 1};
}

QftUnitary qft_reference(int n) {
  if (n <= 0) throw DomainError("qft_reference: n must be positive");
  if (n > kMaxQftDegree) {
    throw ResourceError("qft_reference: n exceeds ceiling " +
                        std::to_string(kMaxQftDegree));
  }
  FourierBasis basis(n);
  const int size = basis.size();
  Eigen::MatrixXd matrix(size, size);
  const double order = static_cast<double>(size);
  for (int p = 0; p < basis.partitions().size(); ++p) {
    const Partition& shape = basis.partitions().at(p);
    const auto gens = yor_generators(shape);
    const int d = basis.dim(p);
    const double scale = std::sqrt(static_cast<double>(d) / order);
    for (int col = 0; col < size; ++col) {
      const Permutation sigma = perm_unindex(static_cast<std::uint64_t>(col), n);
      Eigen::MatrixXd rep = Eigen::MatrixXd::Identity(d, d);
      for (int k : adjacent_word(sigma)) {
        rep = rep * gens[static_cast<size_t>(k - 1)];
      }
      for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
          matrix(basis.index(p, i, j), col) = scale * rep(i - 1, j - 1);
        }
      }
    }
  }
  return QftUnitary{n, std::move(basis), std::move(matrix)};
}

const QftUnitary& qft_reference_cached(int n) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<QftUnitary>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QftUnitary>(qft_reference(n));
  return *slot;
}

}  // namespace symkron
