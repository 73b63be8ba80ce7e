#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace meancut {

/// Dense row-major point set with optional ground-truth class labels.
struct Dataset {
  std::vector<double> values;  // n * dim, row-major
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<int> truth;  // empty when absent; -1 marks noise rows

  bool has_truth() const { return !truth.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
  double at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * dim + j]; }
};

/// Maps every original row to the representative of its duplicate group.
/// owner[i] is an original row index and owner[i] == i for kept rows.
struct DedupMap {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> owner;

  /// Broadcast a labeling of the representatives back to full length.
  std::vector<int> expand(const std::vector<int>& rep_labels) const;
};

/// Which CSV column carries ground truth, if any.
struct TruthSelector {
  enum class Kind { none, first, last, index };
  Kind kind = Kind::none;
  std::size_t index = 0;

  static TruthSelector none() { return {}; }
  /// Accepts "last", "first", or a 0-based column index.
  static TruthSelector parse(const std::string& text);
};

Dataset load_csv(const std::filesystem::path& path,
                 TruthSelector truth = TruthSelector::none());

void write_csv(const Dataset& d, const std::filesystem::path& path);

/// Per-column (f - min) / (max - min); constant columns map to 0.
Dataset minmax_normalize(const Dataset& d);

/// Keeps one representative per bitwise-distinct feature vector,
/// in first-appearance order.
std::pair<Dataset, DedupMap> dedup(const Dataset& d);

/// Euclidean diagonal of the axis-aligned minimum bounding rectangle.
double mbr_diagonal(const Dataset& d);

enum class Preset { blobs, ring_island, path_chain, weak_bridge, noisy_blobs };

Preset parse_preset(const std::string& name);
std::string preset_name(Preset p);

struct SyntheticParams {
  std::size_t clusters = 3;
  double spread = 0.5;       // within-cluster Gaussian sigma
  double separation = 10.0;  // center scale
  double noise_frac = 0.1;   // noisy_blobs only
  double bridge_frac = 0.06; // weak_bridge only
};

/// Deterministic 2-D generators. `tagged`, when non-null, receives the
/// row indices of bridge points (weak_bridge) or noise points (noisy_blobs).
Dataset gen_synthetic(Preset preset, std::size_t n, std::uint64_t seed,
                      const SyntheticParams& params = {},
                      std::vector<std::size_t>* tagged = nullptr);

}  // namespace meancut
