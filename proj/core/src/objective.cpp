#include "meancut/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace meancut {

ClusterState ClusterState::seed(std::size_t point, const SimilarityMatrix& sim,
                                const std::vector<double>& deg) {
  ClusterState st;
  st.n = sim.n;
  st.in_cluster.assign(sim.n, 0);
  st.members = {point};
  st.in_cluster[point] = 1;
  st.m = 1;
  st.sum_deg = deg[point];
  st.sum_intra = sim.at(point, point);
  return st;
}

void ClusterState::add(std::size_t point, const SimilarityMatrix& sim,
                       const std::vector<double>& deg) {
  if (in_cluster[point])
    throw std::invalid_argument("ClusterState::add: point already a member");
  double cross = 0.0;
  for (std::size_t i : members) cross += sim.at(i, point);
  members.push_back(point);
  in_cluster[point] = 1;
  ++m;
  sum_deg += deg[point];
  sum_intra += 2.0 * cross + sim.at(point, point);
}

double meancut_value(const ClusterState& st) {
  if (st.m == 0) throw std::invalid_argument("meancut_value: empty cluster");
  if (st.m == st.n) return 0.0;  // all-ones indicator annihilates L
  double cut = st.sum_deg - st.sum_intra;
  return static_cast<double>(st.n) / static_cast<double>(st.n - st.m) * cut /
         st.sum_deg;
}

TryAddResult try_add(const ClusterState& st, std::size_t point,
                     const SimilarityMatrix& sim,
                     const std::vector<double>& deg) {
  if (st.in_cluster[point])
    throw std::invalid_argument("try_add: point already a member");
  double cross = 0.0;
  for (std::size_t i : st.members) cross += sim.at(i, point);
  ClusterState probe;  // value-only; reuse the closed form
  probe.n = st.n;
  probe.m = st.m + 1;
  probe.sum_deg = st.sum_deg + deg[point];
  probe.sum_intra = st.sum_intra + 2.0 * cross + sim.at(point, point);
  TryAddResult r;
  r.delta_deg = deg[point];
  r.delta_intra = 2.0 * cross + sim.at(point, point);
  r.value = probe.m == probe.n
                ? 0.0
                : static_cast<double>(probe.n) /
                      static_cast<double>(probe.n - probe.m) *
                      (probe.sum_deg - probe.sum_intra) / probe.sum_deg;
  return r;
}

namespace {

std::vector<std::size_t> degree_descending_order(const std::vector<double>& deg) {
  std::vector<std::size_t> order(deg.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (deg[a] != deg[b]) return deg[a] > deg[b];
                     return a < b;
                   });
  return order;
}

}  // namespace

Labeling greedy_cluster(const SimilarityMatrix& sim,
                        const std::vector<double>& deg) {
  if (!sim.pathbased)
    throw std::invalid_argument("greedy_cluster: similarity must be path-based");
  if (deg.size() != sim.n)
    throw std::invalid_argument("greedy_cluster: degree/matrix size mismatch");
  const std::size_t n = sim.n;
  Labeling out;
  out.label.assign(n, -1);
  if (n == 0) return out;

  std::vector<std::size_t> order = degree_descending_order(deg);
  std::vector<char> assigned(n, 0);
  // cross[j] = sum over current members i of sim(i, j), accumulated in
  // member join order so it matches try_add bit for bit.
  std::vector<double> cross(n);
  std::size_t done = 0;
  int cluster_id = 0;

  for (std::size_t start = 0; start < n && done < n; ++start) {
    std::size_t seed = order[start];
    if (assigned[seed]) continue;

    assigned[seed] = 1;
    out.label[seed] = cluster_id;
    ++done;
    std::size_t m = 1;
    double sum_deg = deg[seed];
    double sum_intra = sim.at(seed, seed);
    for (std::size_t j = 0; j < n; ++j) cross[j] = sim.at(seed, j);
    double value = m == n ? 0.0
                          : static_cast<double>(n) /
                                static_cast<double>(n - m) *
                                (sum_deg - sum_intra) / sum_deg;

    for (std::size_t pos = start + 1; pos < n; ++pos) {
      std::size_t j = order[pos];
      if (assigned[j]) continue;
      std::size_t m2 = m + 1;
      double deg2 = sum_deg + deg[j];
      double intra2 = sum_intra + 2.0 * cross[j] + sim.at(j, j);
      double value2 = m2 == n ? 0.0
                              : static_cast<double>(n) /
                                    static_cast<double>(n - m2) *
                                    (deg2 - intra2) / deg2;
      if (value2 <= value) {
        assigned[j] = 1;
        out.label[j] = cluster_id;
        ++done;
        m = m2;
        sum_deg = deg2;
        sum_intra = intra2;
        value = value2;
        for (std::size_t t = 0; t < n; ++t) cross[t] += sim.at(j, t);
      }
    }
    ++cluster_id;
  }
  out.k = cluster_id;
  return out;
}

Labeling apply_noise_threshold(const Labeling& l, std::size_t min_size) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(l.k, 0)), 0);
  for (int lab : l.label)
    if (lab >= 0) ++sizes[static_cast<std::size_t>(lab)];

  std::vector<int> remap(sizes.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c)
    if (sizes[c] >= min_size) remap[c] = next++;

  Labeling out;
  out.k = next;
  out.label.resize(l.label.size());
  for (std::size_t i = 0; i < l.label.size(); ++i)
    out.label[i] = l.label[i] >= 0 ? remap[static_cast<std::size_t>(l.label[i])]
                                   : -1;
  return out;
}

AssumptionReport check_assumptions(const SimilarityMatrix& sim,
                                   const std::vector<double>& deg,
                                   const Labeling& truth) {
  const std::size_t n = sim.n;
  if (truth.label.size() != n || deg.size() != n)
    throw std::invalid_argument("check_assumptions: size mismatch");
  for (int lab : truth.label)
    if (lab < 0)
      throw std::invalid_argument("check_assumptions: truth contains noise");

  std::vector<std::vector<std::size_t>> clusters(
      static_cast<std::size_t>(truth.k));
  for (std::size_t i = 0; i < n; ++i)
    clusters[static_cast<std::size_t>(truth.label[i])].push_back(i);

  const double inf = std::numeric_limits<double>::infinity();
  AssumptionReport rep;
  rep.a1_margin = rep.a2_margin = rep.a3_margin = inf;
  const double nd = static_cast<double>(n);

  for (const auto& cluster : clusters) {
    for (std::size_t a = 0; a < cluster.size(); ++a) {
      std::size_t r = cluster[a];
      for (std::size_t b = a + 1; b < cluster.size(); ++b) {
        std::size_t s = cluster[b];
        double w_rs = sim.at(r, s);
        // A2: intra similarity beats both average similarities.
        rep.a2_margin = std::min(
            rep.a2_margin, w_rs - std::max(deg[r], deg[s]) / nd);
        // A1: quantified over every outside point t.
        for (std::size_t t = 0; t < n; ++t) {
          if (truth.label[t] == truth.label[r]) continue;
          rep.a1_margin = std::min(
              rep.a1_margin, w_rs - std::max(sim.at(r, t), sim.at(s, t)));
        }
      }
      // A3: ordered intra pairs (r, s) against a third intra point t.
      for (std::size_t b = 0; b < cluster.size(); ++b) {
        if (a == b) continue;
        std::size_t s = cluster[b];
        double lhs = sim.at(r, s) - deg[r] / nd;
        for (std::size_t c = 0; c < cluster.size(); ++c) {
          if (c == a || c == b) continue;
          std::size_t t = cluster[c];
          rep.a3_margin =
              std::min(rep.a3_margin, lhs - (sim.at(r, t) - sim.at(s, t)));
        }
      }
    }
  }
  rep.a1_holds = rep.a1_margin >= 0.0;
  rep.a2_holds = rep.a2_margin >= 0.0;
  rep.a3_holds = rep.a3_margin >= 0.0;
  return rep;
}

std::vector<double> monotone_trace(const SimilarityMatrix& sim,
                                   const std::vector<double>& deg,
                                   const Labeling& truth, int cluster_id) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < truth.label.size(); ++i)
    if (truth.label[i] == cluster_id) members.push_back(i);
  if (members.empty())
    throw std::invalid_argument("monotone_trace: cluster id absent");
  std::stable_sort(members.begin(), members.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (deg[a] != deg[b]) return deg[a] > deg[b];
                     return a < b;
                   });

  std::vector<double> trace;
  trace.reserve(members.size());
  ClusterState st = ClusterState::seed(members.front(), sim, deg);
  trace.push_back(meancut_value(st));
  for (std::size_t i = 1; i < members.size(); ++i) {
    st.add(members[i], sim, deg);
    trace.push_back(meancut_value(st));
  }
  return trace;
}

}  // namespace meancut
