#pragma once

#include <cstddef>
#include <vector>

#include "meancut/dataset.hpp"
#include "meancut/graph.hpp"
#include "meancut/mst.hpp"

// Independent reference implementations used by the `oracle` CLI command
// and the test suite. These deliberately share no code with the fast paths
// they are checked against.
namespace meancut::oracle {

/// Total distance of the minimum spanning tree, via Prim's algorithm.
double prim_total_distance(const Dataset& d);

/// Minimum assignment cost by enumerating all row permutations (square
/// matrices up to ~9x9).
double hungarian_brute(const std::vector<std::vector<double>>& cost);

/// MeanCut objective evaluated from explicit dense D, L and indicator
/// vectors, no running sums.
double meancut_dense(const SimilarityMatrix& sim,
                     const std::vector<std::size_t>& members);

/// Minimum edge similarity on the unique tree path between u and v,
/// found by traversal.
double tree_path_min_sim(const SpanningTree& t, std::size_t u, std::size_t v);

}  // namespace meancut::oracle
