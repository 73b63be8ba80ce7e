#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "meancut/dataset.hpp"

namespace meancut {

inline constexpr std::size_t kDefaultDenseCap = 20000;

enum class KernelKind { gaussian, laplacian };

KernelKind parse_kernel(const std::string& name);

/// Strictly decreasing similarity transform of a distance; value 1 at 0.
struct Kernel {
  KernelKind kind = KernelKind::laplacian;
  double sigma = 1.0;

  /// gaussian: exp(-d^2 / (2 sigma^2)); laplacian: exp(-d / (2 sigma^2)).
  double weight(double dist) const;
};

/// Symmetric dense weight matrix with unit diagonal, entries in (0, 1].
/// `pathbased` distinguishes raw kernel weights from maximin weights.
struct SimilarityMatrix {
  std::size_t n = 0;
  bool pathbased = false;
  std::vector<double> w;  // n * n

  double at(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return w[i * n + j]; }
};

double euclidean(std::span<const double> a, std::span<const double> b);

SimilarityMatrix similarity_matrix(const Dataset& d, const Kernel& k,
                                   std::size_t dense_cap = kDefaultDenseCap);

/// Row sums including the diagonal self term.
std::vector<double> degrees(const SimilarityMatrix& s);

}  // namespace meancut
