#include "meancut/dgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "meancut/pathsim.hpp"

namespace meancut {

KnnIndex knn(const Dataset& d, std::size_t k) {
  if (k < 1 || k > d.n - 1 || d.n < 2) {
    std::ostringstream msg;
    msg << "knn: K = " << k << " out of range [1, " << (d.n ? d.n - 1 : 0)
        << "]";
    throw std::invalid_argument(msg.str());
  }
  KnnIndex out;
  out.n = d.n;
  out.k = k;
  out.idx.resize(d.n * k);
  out.dist.resize(d.n * k);

  std::vector<std::pair<double, std::uint32_t>> cand(d.n - 1);
  for (std::size_t i = 0; i < d.n; ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < d.n; ++j) {
      if (j == i) continue;
      cand[c++] = {euclidean(d.row(i), d.row(j)),
                   static_cast<std::uint32_t>(j)};
    }
    std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
    for (std::size_t t = 0; t < k; ++t) {
      out.dist[i * k + t] = cand[t].first;
      out.idx[i * k + t] = cand[t].second;
    }
  }
  return out;
}

std::vector<double> density_scores(const KnnIndex& idx) {
  std::vector<double> density(idx.n);
  for (std::size_t i = 0; i < idx.n; ++i) {
    double sum = 0.0;
    for (double dist : idx.distances(i)) sum += dist;
    density[i] = sum / static_cast<double>(idx.k);
  }
  return density;
}

DgfScores dgf_scores(const KnnIndex& idx, const std::vector<double>& density) {
  if (density.size() != idx.n)
    throw std::invalid_argument("dgf_scores: density size mismatch");
  DgfScores out;
  out.density = density;
  out.dgf.resize(idx.n);
  for (std::size_t i = 0; i < idx.n; ++i) {
    double sum = 0.0;
    auto neighbors = idx.neighbors(i);
    auto dists = idx.distances(i);
    for (std::size_t t = 0; t < idx.k; ++t) {
      if (dists[t] <= 0.0)
        throw std::runtime_error(
            "dgf_scores: zero neighbor distance; deduplicate first");
      sum += (density[neighbors[t]] - density[i]) / dists[t];
    }
    out.dgf[i] = sum / static_cast<double>(idx.k);
  }
  return out;
}

PointSplit split_junction(const DgfScores& s, double percentile) {
  if (percentile < 0.0 || percentile >= 1.0)
    throw std::invalid_argument("split_junction: percentile must be in [0, 1)");
  const std::size_t n = s.dgf.size();
  auto cutoff = static_cast<std::size_t>(
      std::floor(percentile * static_cast<double>(n)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (s.dgf[a] != s.dgf[b]) return s.dgf[a] < s.dgf[b];
                     return a < b;
                   });

  PointSplit split;
  split.junction_points.assign(order.begin(), order.begin() + cutoff);
  split.internal_points.assign(order.begin() + cutoff, order.end());
  std::sort(split.junction_points.begin(), split.junction_points.end());
  std::sort(split.internal_points.begin(), split.internal_points.end());
  return split;
}

Labeling improved_meancut(const Dataset& d, const MeanCutParams& params) {
  auto [unique, map] = dedup(d);

  PointSplit split;
  if (params.percentile > 0.0) {
    KnnIndex index = knn(unique, params.knn_k);
    DgfScores scores = dgf_scores(index, density_scores(index));
    split = split_junction(scores, params.percentile);
  } else {
    split.internal_points.resize(unique.n);
    std::iota(split.internal_points.begin(), split.internal_points.end(),
              std::size_t{0});
  }
  if (split.internal_points.size() < 2)
    throw std::runtime_error("improved_meancut: fewer than 2 internal points");

  Dataset internal;
  internal.dim = unique.dim;
  internal.n = split.internal_points.size();
  internal.values.reserve(internal.n * internal.dim);
  for (std::size_t i : split.internal_points) {
    auto r = unique.row(i);
    internal.values.insert(internal.values.end(), r.begin(), r.end());
  }

  SimilarityMatrix sim = pathsim_pipeline(internal, params.kernel, params.ratio);
  std::vector<double> deg = degrees(sim);
  Labeling clustered = greedy_cluster(sim, deg);
  clustered = apply_noise_threshold(clustered, params.noise_threshold);

  // Junction points take the label of the Euclidean-nearest internal point.
  std::vector<int> rep_labels(unique.n, -1);
  for (std::size_t t = 0; t < split.internal_points.size(); ++t)
    rep_labels[split.internal_points[t]] = clustered.label[t];
  for (std::size_t j : split.junction_points) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = split.internal_points.front();
    for (std::size_t i : split.internal_points) {
      double dist = euclidean(unique.row(j), unique.row(i));
      if (dist < best) {
        best = dist;
        best_idx = i;
      }
    }
    rep_labels[j] = rep_labels[best_idx];
  }

  Labeling out;
  out.k = clustered.k;
  out.label = map.expand(rep_labels);
  return out;
}

}  // namespace meancut
