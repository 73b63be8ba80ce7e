#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "meancut/dataset.hpp"
#include "meancut/graph.hpp"

namespace meancut {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double dist = 0.0;
  double sim = 0.0;
};

struct SpanningTree {
  std::size_t n = 0;
  std::vector<TreeEdge> edges;  // n - 1 edges, in construction order
};

struct ComponentLabels {
  std::vector<std::size_t> comp;   // dense ids, assigned by smallest member index
  std::vector<std::size_t> sizes;
};

struct FastMstInfo {
  std::size_t subtrees = 0;          // component count m
  std::size_t cross_candidates = 0;  // phase-2 edges, (n^2 - sum a_i^2) / 2
};

/// Minimum spanning tree over the complete distance graph, Kruskal with
/// (dist, u, v) ordering. n == 1 yields an empty edge list.
SpanningTree kruskal_full(const Dataset& d, const Kernel& k,
                          std::size_t dense_cap = kDefaultDenseCap);

/// Connected components of the graph whose edges are pairs at distance
/// <= eps (DBSCAN with minPts = 1).
ComponentLabels eps_components(const Dataset& d, double eps);

/// Two-phase Kruskal: per-component trees over edges <= Eps, then Kruskal
/// on the cross-component pairs. Eps = mbr_diagonal(d) * ratio.
SpanningTree fast_mst(const Dataset& d, const Kernel& k, double ratio,
                      FastMstInfo* info = nullptr);

/// (total distance, total similarity) over the edge list.
std::pair<double, double> tree_total(const SpanningTree& t);

/// True iff the edge set is acyclic and spans all n points.
bool is_spanning_tree(const SpanningTree& t);

void write_tree(const SpanningTree& t, const std::filesystem::path& path);

}  // namespace meancut
