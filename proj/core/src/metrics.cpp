#include "meancut/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace meancut {

ContingencyTable contingency(const std::vector<int>& truth,
                             const std::vector<int>& pred) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("contingency: labeling length mismatch");
  if (truth.empty())
    throw std::invalid_argument("contingency: no points");

  std::map<int, std::size_t> pred_idx, truth_idx;
  for (int p : pred) pred_idx.emplace(p, 0);
  for (int t : truth) truth_idx.emplace(t, 0);
  std::size_t r = 0, c = 0;
  for (auto& [label, idx] : pred_idx) idx = r++;
  for (auto& [label, idx] : truth_idx) idx = c++;

  ContingencyTable table;
  table.n = static_cast<std::int64_t>(truth.size());
  table.counts.assign(pred_idx.size(),
                      std::vector<std::int64_t>(truth_idx.size(), 0));
  table.row_sums.assign(pred_idx.size(), 0);
  table.col_sums.assign(truth_idx.size(), 0);
  for (auto& [label, idx] : pred_idx) table.pred_labels.push_back(label);
  for (auto& [label, idx] : truth_idx) table.truth_labels.push_back(label);

  for (std::size_t i = 0; i < truth.size(); ++i) {
    std::size_t row = pred_idx.at(pred[i]);
    std::size_t col = truth_idx.at(truth[i]);
    ++table.counts[row][col];
    ++table.row_sums[row];
    ++table.col_sums[col];
  }
  return table;
}

Assignment hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t rows = cost.size();
  if (rows == 0) return {};
  const std::size_t cols = cost.front().size();
  for (const auto& row : cost) {
    if (row.size() != cols)
      throw std::invalid_argument("hungarian: ragged cost matrix");
    for (double c : row)
      if (!std::isfinite(c))
        throw std::invalid_argument("hungarian: non-finite cost");
  }
  // Pad to square with zero-cost dummy rows/columns.
  const std::size_t n = std::max(rows, cols);
  auto at = [&](std::size_t r, std::size_t c) -> double {
    return (r < rows && c < cols) ? cost[r][c] : 0.0;
  };

  // Potentials-based O(n^3) assignment, 1-indexed internally.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0);  // match[col] = row
  std::vector<std::size_t> way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = match[j0], j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment result;
  result.col_of_row.assign(rows, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t i = match[j];
    if (i >= 1 && i <= rows && j <= cols) {
      result.col_of_row[i - 1] = static_cast<int>(j - 1);
      result.total += cost[i - 1][j - 1];
    }
  }
  return result;
}

double acc(const std::vector<int>& truth, const std::vector<int>& pred) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("acc: labeling length mismatch");
  if (truth.empty()) throw std::invalid_argument("acc: no points");

  // Predicted noise never matches; match only the non-noise clusters.
  std::vector<int> t2, p2;
  t2.reserve(truth.size());
  p2.reserve(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (pred[i] >= 0) {
      t2.push_back(truth[i]);
      p2.push_back(pred[i]);
    }
  }
  if (t2.empty()) return 0.0;
  ContingencyTable table = contingency(t2, p2);
  std::vector<std::vector<double>> negated(table.counts.size());
  for (std::size_t r = 0; r < table.counts.size(); ++r) {
    negated[r].resize(table.counts[r].size());
    for (std::size_t c = 0; c < table.counts[r].size(); ++c)
      negated[r][c] = -static_cast<double>(table.counts[r][c]);
  }
  Assignment a = hungarian(negated);
  return -a.total / static_cast<double>(truth.size());
}

namespace {

bool same_partition(const ContingencyTable& t) {
  // Identical as set partitions: every row hits exactly one column and
  // vice versa.
  for (const auto& row : t.counts) {
    std::size_t nonzero = 0;
    for (std::int64_t c : row) nonzero += c > 0;
    if (nonzero != 1) return false;
  }
  std::vector<std::size_t> col_hits(t.col_sums.size(), 0);
  for (const auto& row : t.counts)
    for (std::size_t c = 0; c < row.size(); ++c) col_hits[c] += row[c] > 0;
  for (std::size_t hits : col_hits)
    if (hits != 1) return false;
  return true;
}

}  // namespace

double nmi(const std::vector<int>& truth, const std::vector<int>& pred) {
  ContingencyTable t = contingency(truth, pred);
  const double n = static_cast<double>(t.n);

  double h_pred = 0.0, h_truth = 0.0, mi = 0.0;
  for (std::int64_t a : t.row_sums)
    if (a > 0) h_pred -= (a / n) * std::log(a / n);
  for (std::int64_t b : t.col_sums)
    if (b > 0) h_truth -= (b / n) * std::log(b / n);
  for (std::size_t r = 0; r < t.counts.size(); ++r) {
    for (std::size_t c = 0; c < t.counts[r].size(); ++c) {
      std::int64_t nij = t.counts[r][c];
      if (nij == 0) continue;
      mi += (nij / n) *
            std::log(n * static_cast<double>(nij) /
                     (static_cast<double>(t.row_sums[r]) *
                      static_cast<double>(t.col_sums[c])));
    }
  }
  // Identical set partitions are exactly 1 (MI equals both entropies);
  // computing the quotient would introduce rounding noise.
  if (same_partition(t)) return 1.0;
  if (h_pred <= 0.0 || h_truth <= 0.0) return 0.0;
  double value = mi / std::sqrt(h_pred * h_truth);
  return std::clamp(value, 0.0, 1.0);
}

double ari(const std::vector<int>& truth, const std::vector<int>& pred) {
  ContingencyTable t = contingency(truth, pred);
  auto choose2 = [](std::int64_t x) {
    return static_cast<double>(x) * static_cast<double>(x - 1) / 2.0;
  };
  double index = 0.0;
  for (const auto& row : t.counts)
    for (std::int64_t nij : row) index += choose2(nij);
  double sum_a = 0.0, sum_b = 0.0;
  for (std::int64_t a : t.row_sums) sum_a += choose2(a);
  for (std::int64_t b : t.col_sums) sum_b += choose2(b);
  double total = choose2(t.n);
  double expected = total > 0.0 ? sum_a * sum_b / total : 0.0;
  double maximum = 0.5 * (sum_a + sum_b);
  if (maximum == expected) return same_partition(t) ? 1.0 : 0.0;
  return (index - expected) / (maximum - expected);
}

MetricsReport evaluate(const std::vector<int>& truth,
                       const std::vector<int>& pred) {
  MetricsReport r;
  r.acc = acc(truth, pred);
  r.nmi = nmi(truth, pred);
  r.ari = ari(truth, pred);
  std::vector<int> distinct;
  for (int p : pred) {
    if (p >= 0) distinct.push_back(p);
    if (p == -1) ++r.n_noise;
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  r.k_pred = static_cast<int>(distinct.size());
  return r;
}

}  // namespace meancut
