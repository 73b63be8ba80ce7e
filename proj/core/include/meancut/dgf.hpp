#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "meancut/dataset.hpp"
#include "meancut/graph.hpp"
#include "meancut/objective.hpp"

namespace meancut {

/// Exact K nearest neighbors per point, distances ascending, ties by index.
struct KnnIndex {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint32_t> idx;  // n * k
  std::vector<double> dist;        // n * k

  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {idx.data() + i * k, k};
  }
  std::span<const double> distances(std::size_t i) const {
    return {dist.data() + i * k, k};
  }
};

struct DgfScores {
  std::vector<double> density;  // mean KNN distance (large = sparse)
  std::vector<double> dgf;
};

struct PointSplit {
  std::vector<std::size_t> internal_points;  // ascending index
  std::vector<std::size_t> junction_points;  // ascending index
};

KnnIndex knn(const Dataset& d, std::size_t k);

std::vector<double> density_scores(const KnnIndex& idx);

/// DGF(i) = mean over KNN j of (density(j) - density(i)) / dist(i, j).
/// Throws on a zero neighbor distance (input was not deduplicated).
DgfScores dgf_scores(const KnnIndex& idx, const std::vector<double>& density);

/// The floor(percentile * n) lowest-DGF points (ties by index) become
/// junction points; the rest are internal.
PointSplit split_junction(const DgfScores& s, double percentile);

struct MeanCutParams {
  Kernel kernel{KernelKind::laplacian, 1.0};
  double ratio = 0.2;
  std::size_t knn_k = 15;
  double percentile = 0.0;
  std::size_t noise_threshold = 0;
};

/// Full pipeline: dedup, DGF split, FastMST + maximin similarity + greedy
/// clustering on internal points, noise threshold, nearest-internal label
/// for junction points, labels broadcast back through the dedup map.
Labeling improved_meancut(const Dataset& d, const MeanCutParams& params);

}  // namespace meancut
