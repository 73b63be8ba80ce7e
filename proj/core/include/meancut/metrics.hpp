#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace meancut {

struct ContingencyTable {
  std::vector<std::vector<std::int64_t>> counts;  // pred rows x truth cols
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> col_sums;
  std::int64_t n = 0;
  std::vector<int> pred_labels;   // label of each row
  std::vector<int> truth_labels;  // label of each column
};

struct Assignment {
  std::vector<int> col_of_row;  // -1 when unassigned (rows > cols)
  double total = 0.0;
};

ContingencyTable contingency(const std::vector<int>& truth,
                             const std::vector<int>& pred);

/// Minimum-cost injective row-to-column assignment (Hungarian algorithm).
/// Rectangular inputs are padded with zero-cost dummies internally.
Assignment hungarian(const std::vector<std::vector<double>>& cost);

/// Best-map accuracy. Predicted noise (-1) counts against the score and
/// is never matched to a truth class.
double acc(const std::vector<int>& truth, const std::vector<int>& pred);

/// Mutual information over the geometric mean of the two entropies
/// (natural log). Noise labels participate as an ordinary cluster.
double nmi(const std::vector<int>& truth, const std::vector<int>& pred);

/// Hubert-Arabie adjusted Rand index.
double ari(const std::vector<int>& truth, const std::vector<int>& pred);

struct MetricsReport {
  double acc = 0.0;
  double nmi = 0.0;
  double ari = 0.0;
  int k_pred = 0;
  std::int64_t n_noise = 0;
};

MetricsReport evaluate(const std::vector<int>& truth,
                       const std::vector<int>& pred);

}  // namespace meancut
