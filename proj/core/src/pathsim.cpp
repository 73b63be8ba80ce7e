#include "meancut/pathsim.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace meancut {

SimilarityMatrix floyd_warshall_maximin(const SimilarityMatrix& s,
                                        std::size_t oracle_cap) {
  if (s.pathbased)
    throw std::invalid_argument("floyd_warshall_maximin: input already path-based");
  if (s.n > oracle_cap) {
    std::ostringstream msg;
    msg << "floyd_warshall_maximin: n = " << s.n << " exceeds oracle cap "
        << oracle_cap;
    throw std::runtime_error(msg.str());
  }
  SimilarityMatrix out = s;
  out.pathbased = true;
  const std::size_t n = s.n;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t r = 0; r < n; ++r) {
      double wrt = out.at(r, t);
      for (std::size_t c = 0; c < n; ++c) {
        double via = std::min(wrt, out.at(t, c));
        if (via > out.at(r, c)) out.at(r, c) = via;
      }
    }
  }
  return out;
}

SimilarityMatrix tree_pathsim(const SpanningTree& t, std::size_t n) {
  if (t.n != n || !((n <= 1 && t.edges.empty()) || is_spanning_tree(t)))
    throw std::invalid_argument("tree_pathsim: tree does not span n points");

  SimilarityMatrix out;
  out.n = n;
  out.pathbased = true;
  out.w.assign(n * n, 1.0);
  if (n <= 1) return out;

  // Descending similarity = ascending distance under a decreasing kernel.
  std::vector<const TreeEdge*> order;
  order.reserve(t.edges.size());
  for (const auto& e : t.edges) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const TreeEdge* a, const TreeEdge* b) {
              if (a->sim != b->sim) return a->sim > b->sim;
              if (a->u != b->u) return a->u < b->u;
              return a->v < b->v;
            });

  std::vector<std::size_t> root(n);
  std::vector<std::vector<std::uint32_t>> group(n);
  for (std::size_t i = 0; i < n; ++i) {
    root[i] = i;
    group[i] = {static_cast<std::uint32_t>(i)};
  }
  auto find = [&](std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };

  for (const TreeEdge* e : order) {
    std::size_t a = find(e->u);
    std::size_t b = find(e->v);
    if (a == b) continue;  // unreachable for a valid tree
    if (group[a].size() < group[b].size()) std::swap(a, b);
    for (std::uint32_t small : group[b]) {
      for (std::uint32_t big : group[a]) {
        out.at(small, big) = e->sim;
        out.at(big, small) = e->sim;
      }
    }
    group[a].insert(group[a].end(), group[b].begin(), group[b].end());
    group[b].clear();
    group[b].shrink_to_fit();
    root[b] = a;
  }
  return out;
}

SimilarityMatrix pathsim_pipeline(const Dataset& d, const Kernel& k,
                                  double ratio) {
  if (d.n == 1) {
    SimilarityMatrix out;
    out.n = 1;
    out.pathbased = true;
    out.w = {1.0};
    return out;
  }
  return tree_pathsim(fast_mst(d, k, ratio), d.n);
}

}  // namespace meancut
