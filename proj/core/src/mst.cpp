#include "meancut/mst.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace meancut {

namespace {

struct CandidateEdge {
  double dist;
  std::uint32_t u, v;  // u < v
  bool operator<(const CandidateEdge& o) const {
    if (dist != o.dist) return dist < o.dist;
    if (u != o.u) return u < o.u;
    return v < o.v;
  }
};

void kruskal_pass(std::vector<CandidateEdge>& candidates, DisjointSet& dsu,
                  const Kernel& k, SpanningTree& tree) {
  std::sort(candidates.begin(), candidates.end());
  for (const auto& e : candidates) {
    if (tree.edges.size() + 1 == tree.n) break;
    if (dsu.unite(e.u, e.v))
      tree.edges.push_back({e.u, e.v, e.dist, k.weight(e.dist)});
  }
}

}  // namespace

SpanningTree kruskal_full(const Dataset& d, const Kernel& k,
                          std::size_t dense_cap) {
  if (d.n > dense_cap) {
    std::ostringstream msg;
    msg << "kruskal_full: n = " << d.n << " exceeds dense cap " << dense_cap;
    throw std::runtime_error(msg.str());
  }
  SpanningTree tree;
  tree.n = d.n;
  if (d.n <= 1) return tree;

  std::vector<CandidateEdge> edges;
  edges.reserve(d.n * (d.n - 1) / 2);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i + 1; j < d.n; ++j)
      edges.push_back({euclidean(d.row(i), d.row(j)),
                       static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j)});
  DisjointSet dsu(d.n);
  kruskal_pass(edges, dsu, k, tree);
  return tree;
}

ComponentLabels eps_components(const Dataset& d, double eps) {
  if (eps < 0.0) throw std::invalid_argument("eps_components: eps < 0");
  DisjointSet dsu(d.n);

  if (d.dim <= 3 && eps > 0.0) {
    // Uniform grid with cell size eps; neighbors live in adjacent cells.
    auto cell_key = [&](std::size_t i) {
      std::int64_t key = 0;
      for (std::size_t j = 0; j < d.dim; ++j) {
        auto c = static_cast<std::int64_t>(std::floor(d.at(i, j) / eps));
        key = key * 0x9E3779B1LL + c * 2654435761LL + 0x85EBCA77LL;
      }
      return key;
    };
    auto coord = [&](std::size_t i, std::size_t j) {
      return static_cast<std::int64_t>(std::floor(d.at(i, j) / eps));
    };
    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> grid;
    grid.reserve(d.n * 2);
    for (std::size_t i = 0; i < d.n; ++i)
      grid[cell_key(i)].push_back(static_cast<std::uint32_t>(i));

    std::vector<std::int64_t> base(3, 0);
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = 0; j < d.dim; ++j) base[j] = coord(i, j);
      std::int64_t off[3] = {0, 0, 0};
      std::size_t span = 1;
      for (std::size_t j = 0; j < d.dim; ++j) span *= 3;
      for (std::size_t s = 0; s < span; ++s) {
        std::size_t rem = s;
        std::int64_t key = 0;
        for (std::size_t j = 0; j < d.dim; ++j) {
          off[j] = static_cast<std::int64_t>(rem % 3) - 1;
          rem /= 3;
          std::int64_t c = base[j] + off[j];
          key = key * 0x9E3779B1LL + c * 2654435761LL + 0x85EBCA77LL;
        }
        auto it = grid.find(key);
        if (it == grid.end()) continue;
        for (std::uint32_t other : it->second) {
          if (other <= i) continue;
          if (euclidean(d.row(i), d.row(other)) <= eps)
            dsu.unite(i, other);
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = i + 1; j < d.n; ++j)
        if (euclidean(d.row(i), d.row(j)) <= eps) dsu.unite(i, j);
  }

  ComponentLabels labels;
  labels.comp.resize(d.n);
  std::unordered_map<std::size_t, std::size_t> id_of_root;
  for (std::size_t i = 0; i < d.n; ++i) {
    std::size_t root = dsu.find(i);
    auto [it, inserted] = id_of_root.try_emplace(root, id_of_root.size());
    labels.comp[i] = it->second;
    if (inserted) labels.sizes.push_back(0);
    ++labels.sizes[it->second];
  }
  return labels;
}

SpanningTree fast_mst(const Dataset& d, const Kernel& k, double ratio,
                      FastMstInfo* info) {
  if (ratio <= 0.0 || ratio >= 1.0)
    throw std::invalid_argument("fast_mst: ratio must be in (0, 1)");
  SpanningTree tree;
  tree.n = d.n;
  if (info) *info = {};
  if (d.n == 0) return tree;

  double eps = mbr_diagonal(d) * ratio;
  ComponentLabels comps = eps_components(d, eps);
  std::size_t m = comps.sizes.size();
  if (info) info->subtrees = m;
  if (d.n == 1) return tree;

  DisjointSet dsu(d.n);

  // Phase 1: Kruskal inside each component, edges of length <= Eps only.
  std::vector<std::vector<std::uint32_t>> members(m);
  for (std::size_t i = 0; i < d.n; ++i)
    members[comps.comp[i]].push_back(static_cast<std::uint32_t>(i));
  std::vector<CandidateEdge> candidates;
  for (const auto& group : members) {
    candidates.clear();
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        std::uint32_t u = group[a], v = group[b];
        double dist = euclidean(d.row(u), d.row(v));
        if (dist <= eps) candidates.push_back({dist, u, v});
      }
    }
    kruskal_pass(candidates, dsu, k, tree);
  }

  // Phase 2: Kruskal over the cross-component pairs.
  if (m > 1) {
    candidates.clear();
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = i + 1; j < d.n; ++j) {
        if (comps.comp[i] == comps.comp[j]) continue;
        candidates.push_back({euclidean(d.row(i), d.row(j)),
                              static_cast<std::uint32_t>(i),
                              static_cast<std::uint32_t>(j)});
      }
    }
    // Candidate count identity: (n^2 - sum a_i^2) / 2.
    std::size_t expected = d.n * d.n;
    for (std::size_t size : comps.sizes) expected -= size * size;
    expected /= 2;
    assert(candidates.size() == expected);
    if (candidates.size() != expected)
      throw std::logic_error("fast_mst: cross-edge count mismatch");
    if (info) info->cross_candidates = candidates.size();
    kruskal_pass(candidates, dsu, k, tree);
  }

  if (tree.edges.size() + 1 != d.n)
    throw std::logic_error("fast_mst: result does not span the point set");
  return tree;
}

std::pair<double, double> tree_total(const SpanningTree& t) {
  double dist = 0.0, sim = 0.0;
  for (const auto& e : t.edges) {
    dist += e.dist;
    sim += e.sim;
  }
  return {dist, sim};
}

bool is_spanning_tree(const SpanningTree& t) {
  if (t.n == 0) return false;
  if (t.edges.size() + 1 != t.n) return false;
  DisjointSet dsu(t.n);
  for (const auto& e : t.edges) {
    if (e.u >= t.n || e.v >= t.n || e.u == e.v) return false;
    if (!dsu.unite(e.u, e.v)) return false;  // cycle
  }
  return true;
}

void write_tree(const SpanningTree& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  for (const auto& e : t.edges)
    out << e.u << ',' << e.v << ',' << e.dist << ',' << e.sim << '\n';
}

}  // namespace meancut
