#include "meancut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace meancut::oracle {

double prim_total_distance(const Dataset& d) {
  if (d.n <= 1) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(d.n, inf);
  std::vector<char> done(d.n, 0);
  best[0] = 0.0;
  double total = 0.0;
  for (std::size_t step = 0; step < d.n; ++step) {
    std::size_t pick = d.n;
    for (std::size_t i = 0; i < d.n; ++i)
      if (!done[i] && (pick == d.n || best[i] < best[pick])) pick = i;
    done[pick] = 1;
    total += best[pick];
    for (std::size_t i = 0; i < d.n; ++i) {
      if (done[i]) continue;
      double dist = euclidean(d.row(pick), d.row(i));
      if (dist < best[i]) best[i] = dist;
    }
  }
  return total;
}

double hungarian_brute(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double meancut_dense(const SimilarityMatrix& sim,
                     const std::vector<std::size_t>& members) {
  const std::size_t n = sim.n;
  if (members.empty())
    throw std::invalid_argument("meancut_dense: empty cluster");

  std::vector<double> x(n, 0.0);
  for (std::size_t i : members) x[i] = 1.0;

  // Dense D and L = D - W, then the quadratic forms.
  std::vector<double> deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += sim.at(i, j);

  double xdx = 0.0, xlx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    xdx += deg[i];
    for (std::size_t j = 0; j < n; ++j) {
      double lij = (i == j ? deg[i] : 0.0) - sim.at(i, j);
      xlx += x[j] * lij;
    }
  }
  if (members.size() == n) return 0.0;
  return static_cast<double>(n) /
         static_cast<double>(n - members.size()) * xlx / xdx;
}

double tree_path_min_sim(const SpanningTree& t, std::size_t u, std::size_t v) {
  if (u == v) return 1.0;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(t.n);
  for (const auto& e : t.edges) {
    adj[e.u].push_back({e.v, e.sim});
    adj[e.v].push_back({e.u, e.sim});
  }
  // DFS from u carrying the running path minimum.
  std::vector<char> seen(t.n, 0);
  std::vector<std::pair<std::size_t, double>> stack{{u, 1.0}};
  seen[u] = 1;
  while (!stack.empty()) {
    auto [node, carry] = stack.back();
    stack.pop_back();
    if (node == v) return carry;
    for (auto [next, sim] : adj[node]) {
      if (seen[next]) continue;
      seen[next] = 1;
      stack.push_back({next, std::min(carry, sim)});
    }
  }
  throw std::invalid_argument("tree_path_min_sim: vertices not connected");
}

}  // namespace meancut::oracle
