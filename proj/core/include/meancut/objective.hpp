#pragma once

#include <cstddef>
#include <vector>

#include "meancut/graph.hpp"

namespace meancut {

/// One growing cluster. sum_deg and sum_intra are the running quadratic
/// forms x'Dx and x'Wx of the membership indicator (diagonal included),
/// so the cut x'Lx is sum_deg - sum_intra.
struct ClusterState {
  std::vector<std::size_t> members;  // in join order
  std::vector<char> in_cluster;
  std::size_t m = 0;
  std::size_t n = 0;
  double sum_deg = 0.0;
  double sum_intra = 0.0;

  static ClusterState seed(std::size_t point, const SimilarityMatrix& sim,
                           const std::vector<double>& deg);
  void add(std::size_t point, const SimilarityMatrix& sim,
           const std::vector<double>& deg);
};

/// Per-point cluster assignment; -1 is noise, other ids dense 0..k-1.
struct Labeling {
  std::vector<int> label;
  int k = 0;
};

struct AssumptionReport {
  bool a1_holds = true;
  bool a2_holds = true;
  bool a3_holds = true;
  // Smallest inequality margin observed; >= 0 iff the assumption holds.
  double a1_margin = 0.0;
  double a2_margin = 0.0;
  double a3_margin = 0.0;
};

/// n/(n-m) * (x'Dx - x'Wx)/x'Dx; defined as exactly 0 when m == n.
double meancut_value(const ClusterState& st);

struct TryAddResult {
  double value = 0.0;
  double delta_deg = 0.0;
  double delta_intra = 0.0;
};

/// Objective the cluster would have with `point` added; does not mutate.
TryAddResult try_add(const ClusterState& st, std::size_t point,
                     const SimilarityMatrix& sim,
                     const std::vector<double>& deg);

/// Greedy degree-descent clustering: sweep points in degree-descending
/// order (ties by index), committing each point iff the objective does
/// not increase. Labels every point; no noise at this stage.
Labeling greedy_cluster(const SimilarityMatrix& sim,
                        const std::vector<double>& deg);

/// Clusters smaller than min_size become noise (-1); survivors are
/// re-densified preserving creation order.
Labeling apply_noise_threshold(const Labeling& l, std::size_t min_size);

/// Exhaustively checks the three separability assumptions against a
/// ground-truth partition; margins report the worst violation.
AssumptionReport check_assumptions(const SimilarityMatrix& sim,
                                   const std::vector<double>& deg,
                                   const Labeling& truth);

/// Objective values while the true members of one cluster are added in
/// degree-descending order. Non-increasing whenever the assumptions hold.
std::vector<double> monotone_trace(const SimilarityMatrix& sim,
                                   const std::vector<double>& deg,
                                   const Labeling& truth, int cluster_id);

}  // namespace meancut
