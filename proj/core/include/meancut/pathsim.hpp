#pragma once

#include <cstddef>

#include "meancut/graph.hpp"
#include "meancut/mst.hpp"

namespace meancut {

inline constexpr std::size_t kDefaultOracleCap = 1000;

/// Maximin similarity of every pair by iterating transition vertices:
/// w[r][s] <- max(w[r][s], min(w[r][t], w[t][s])). Cubic; the reference
/// route for the tree-based computation.
SimilarityMatrix floyd_warshall_maximin(const SimilarityMatrix& s,
                                        std::size_t oracle_cap = kDefaultOracleCap);

/// Maximin similarity from a spanning tree: edges are replayed in
/// descending similarity, and each merge assigns the edge similarity to
/// every pair it newly connects.
SimilarityMatrix tree_pathsim(const SpanningTree& t, std::size_t n);

/// tree_pathsim(fast_mst(d, k, ratio)).
SimilarityMatrix pathsim_pipeline(const Dataset& d, const Kernel& k,
                                  double ratio);

}  // namespace meancut
