#include "symkron/yor.hpp"

#include <cmath>
#include <map>

#include "symkron/errors.hpp"
#include "symkron/tableau.hpp"

namespace symkron {

IrrepMatrix::IrrepMatrix(Partition shape_in, Eigen::MatrixXd m_in)
    : shape(std::move(shape_in)), m(std::move(m_in)) {
  if (m.rows() != m.cols()) {
    throw ConsistencyError("IrrepMatrix: matrix must be square");
  }
  const double defect =
      (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kIrrepOrthogonalityTol) {
    throw ConsistencyError("IrrepMatrix: orthogonality defect " +
                           std::to_string(defect) + " for shape " +
                           shape.str());
  }
}

std::vector<int> adjacent_word(const Permutation& pi) {
  std::vector<int> images = pi.images();
  const int n = pi.degree();
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (images[static_cast<size_t>(i)] > images[static_cast<size_t>(i + 1)]) {
        std::swap(images[static_cast<size_t>(i)],
                  images[static_cast<size_t>(i + 1)]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
  }
  // Each recorded swap right-multiplied pi, so pi equals the product of
  // the swaps in reverse order.
  return {swaps.rbegin(), swaps.rend()};
}

namespace {

// Tableaux are keyed by the row index of each value for swap lookups.
std::vector<int> row_profile(const StandardTableau& t) {
  std::vector<int> rows(static_cast<size_t>(t.n()));
  for (int v = 1; v <= t.n(); ++v) {
    rows[static_cast<size_t>(v - 1)] = t.position_of(v).first;
  }
  return rows;
}

Eigen::MatrixXd adjacent_matrix(const Partition& lambda,
                                const std::vector<StandardTableau>& tableaux,
                                const std::map<std::vector<int>, int>& lookup,
                                int k) {
  const int dim = static_cast<int>(tableaux.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int t = 0; t < dim; ++t) {
    const StandardTableau& tab = tableaux[static_cast<size_t>(t)];
    const auto [r1, c1] = tab.position_of(k);
    const auto [r2, c2] = tab.position_of(k + 1);
    const int d = (c2 - r2) - (c1 - r1);
    m(t, t) = 1.0 / static_cast<double>(d);
    if (d != 1 && d != -1) {
      std::vector<int> swapped = row_profile(tab);
      std::swap(swapped[static_cast<size_t>(k - 1)],
                swapped[static_cast<size_t>(k)]);
      const auto it = lookup.find(swapped);
      if (it == lookup.end()) {
        throw ConsistencyError("yor_adjacent: swapped tableau missing for " +
                               lambda.str());
      }
      m(t, it->second) = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) *
                                                static_cast<double>(d)));
    }
  }
  return m;
}

}  // namespace

IrrepMatrix yor_adjacent(const Partition& lambda, int k) {
  if (k < 1 || k >= lambda.n()) {
    throw DomainError("yor_adjacent: k must lie in 1..n-1");
  }
  const std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
  std::map<std::vector<int>, int> lookup;
  for (size_t i = 0; i < tableaux.size(); ++i) {
    lookup.emplace(row_profile(tableaux[i]), static_cast<int>(i));
  }
  return IrrepMatrix(lambda, adjacent_matrix(lambda, tableaux, lookup, k));
}

std::vector<Eigen::MatrixXd> yor_generators(const Partition& lambda) {
  const std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
  std::map<std::vector<int>, int> lookup;
  for (size_t i = 0; i < tableaux.size(); ++i) {
    lookup.emplace(row_profile(tableaux[i]), static_cast<int>(i));
  }
  std::vector<Eigen::MatrixXd> gens;
  gens.reserve(static_cast<size_t>(lambda.n() - 1));
  for (int k = 1; k < lambda.n(); ++k) {
    gens.push_back(adjacent_matrix(lambda, tableaux, lookup, k));
  }
  return gens;
}

IrrepMatrix yor_matrix(const Partition& lambda, const Permutation& pi) {
  if (pi.degree() != lambda.n()) {
    throw DomainError("yor_matrix: permutation degree does not match shape");
  }
  const std::vector<Eigen::MatrixXd> gens = yor_generators(lambda);
  const int dim = gens.empty() ? 1 : static_cast<int>(gens[0].rows());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
  for (int k : adjacent_word(pi)) {
    m = m * gens[static_cast<size_t>(k - 1)];
  }
  return IrrepMatrix(lambda, std::move(m));
}

}  // namespace symkron
