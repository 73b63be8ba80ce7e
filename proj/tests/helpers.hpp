#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "meancut/dataset.hpp"

namespace testutil {

/// Uniform points in [0, 1]^dim; jitter from the full 53-bit mantissa makes
/// pairwise distances distinct with overwhelming probability.
inline meancut::Dataset random_points(std::size_t n, std::size_t dim,
                                      std::uint64_t seed) {
  meancut::Dataset d;
  d.n = n;
  d.dim = dim;
  d.values.resize(n * dim);
  std::mt19937_64 gen(seed);
  for (double& v : d.values)
    v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return d;
}

inline meancut::Dataset from_rows(
    const std::vector<std::vector<double>>& rows) {
  meancut::Dataset d;
  d.n = rows.size();
  d.dim = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) d.values.insert(d.values.end(), r.begin(), r.end());
  return d;
}

/// Scratch directory unique to this test process, removed on destruction.
class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    std::mt19937_64 gen(std::random_device{}());
    path_ = base / ("meancut_test_" + std::to_string(gen()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p,
                       const std::string& text) {
  std::ofstream out(p);
  out << text;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// All set partitions of {0..n-1} as label vectors (Bell-number many).
inline std::vector<std::vector<int>> all_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
  auto rec = [&](auto&& self, std::size_t i, int max_used) -> void {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (int lab = 0; lab <= max_used + 1; ++lab) {
      labels[i] = lab;
      self(self, i + 1, std::max(max_used, lab));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace testutil
