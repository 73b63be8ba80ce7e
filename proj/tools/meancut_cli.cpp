// Command-line front end: cluster, sweep, gen, oracle, bench.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "meancut/dataset.hpp"
#include "meancut/dgf.hpp"
#include "meancut/graph.hpp"
#include "meancut/metrics.hpp"
#include "meancut/mst.hpp"
#include "meancut/objective.hpp"
#include "meancut/oracle.hpp"
#include "meancut/pathsim.hpp"

namespace {

using namespace meancut;

struct CommonOpts {
  std::string input;
  std::string truth_col;
  std::string kernel = "laplacian";
  double sigma = 1.0;
  double ratio = 0.2;
  std::size_t knn_k = 15;
  double percentile = 0.7;
  std::size_t noise_threshold = 0;
  std::uint64_t seed = 0;
  bool no_normalize = false;
  std::string out_labels;
  std::string out_metrics;
  std::string out_scores;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "input CSV")->required();
  cmd->add_option("--truth-col", o.truth_col,
                  "truth column: last, first or 0-based index");
  cmd->add_option("--kernel", o.kernel, "gaussian|laplacian");
  cmd->add_option("--sigma", o.sigma, "kernel bandwidth");
  cmd->add_option("--ratio", o.ratio, "FastMST Eps ratio");
  cmd->add_option("--k", o.knn_k, "K of KNN for the DGF split");
  cmd->add_option("--percentile", o.percentile, "junction percentile in [0,1)");
  cmd->add_option("--noise-threshold", o.noise_threshold,
                  "minimum surviving cluster size");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--no-normalize", o.no_normalize,
                "skip min-max normalization");
}

MeanCutParams to_params(const CommonOpts& o) {
  MeanCutParams p;
  p.kernel = {parse_kernel(o.kernel), o.sigma};
  p.ratio = o.ratio;
  p.knn_k = o.knn_k;
  p.percentile = o.percentile;
  p.noise_threshold = o.noise_threshold;
  return p;
}

void validate(const CommonOpts& o) {
  if (o.sigma <= 0.0) throw std::invalid_argument("--sigma must be > 0");
  if (o.ratio <= 0.0 || o.ratio >= 1.0)
    throw std::invalid_argument("--ratio must be in (0, 1)");
  if (o.percentile < 0.0 || o.percentile >= 1.0)
    throw std::invalid_argument("--percentile must be in [0, 1)");
  if (o.knn_k < 1) throw std::invalid_argument("--k must be >= 1");
}

Dataset load_input(const CommonOpts& o) {
  TruthSelector sel = o.truth_col.empty() ? TruthSelector::none()
                                          : TruthSelector::parse(o.truth_col);
  Dataset d = load_csv(o.input, sel);
  return o.no_normalize ? d : minmax_normalize(d);
}

void write_labels(const std::vector<int>& labels, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int lab : labels) out << lab << '\n';
}

void write_metrics_json(const MetricsReport& r, const std::string& path) {
  nlohmann::ordered_json j{{"acc", r.acc},
                           {"nmi", r.nmi},
                           {"ari", r.ari},
                           {"k_pred", r.k_pred},
                           {"n_noise", r.n_noise}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_scores_csv(const Dataset& d, const MeanCutParams& p,
                      const std::string& path) {
  auto [unique, map] = dedup(d);
  KnnIndex index = knn(unique, p.knn_k);
  DgfScores scores = dgf_scores(index, density_scores(index));
  PointSplit split = split_junction(scores, p.percentile);
  std::vector<char> junction(unique.n, 0);
  for (std::size_t j : split.junction_points) junction[j] = 1;

  std::vector<std::size_t> rep_pos(d.n);
  {
    std::vector<std::size_t> pos_of(d.n, 0);
    for (std::size_t i = 0; i < map.kept.size(); ++i) pos_of[map.kept[i]] = i;
    for (std::size_t i = 0; i < d.n; ++i) rep_pos[i] = pos_of[map.owner[i]];
  }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  out << "point_index,density,dgf,is_junction\n";
  for (std::size_t i = 0; i < d.n; ++i) {
    std::size_t r = rep_pos[i];
    out << i << ',' << scores.density[r] << ',' << scores.dgf[r] << ','
        << static_cast<int>(junction[r]) << '\n';
  }
}

int cmd_cluster(const CommonOpts& o) {
  validate(o);
  if (o.out_labels.empty())
    throw std::invalid_argument("cluster requires --out-labels");
  Dataset d = load_input(o);
  if (!o.out_metrics.empty() && !d.has_truth())
    throw std::invalid_argument("--out-metrics requires a truth column");
  MeanCutParams p = to_params(o);
  Labeling result = improved_meancut(d, p);

  write_labels(result.label, o.out_labels);
  if (!o.out_metrics.empty())
    write_metrics_json(evaluate(d.truth, result.label), o.out_metrics);
  if (!o.out_scores.empty()) write_scores_csv(d, p, o.out_scores);
  return 0;
}

struct SweepOpts {
  std::size_t k_min = 10, k_max = 40, k_step = 1;
  double p_min = 0.6, p_max = 0.99, p_step = 0.01;
  std::string rank_by = "acc";
  std::string out;
};

int cmd_sweep(const CommonOpts& o, const SweepOpts& s) {
  validate(o);
  if (s.out.empty()) throw std::invalid_argument("sweep requires --out");
  if (s.k_step == 0 || s.p_step <= 0.0)
    throw std::invalid_argument("sweep steps must be positive");
  if (s.k_min > s.k_max || s.p_min > s.p_max)
    throw std::invalid_argument("sweep ranges must be non-empty");
  if (s.rank_by != "acc" && s.rank_by != "nmi" && s.rank_by != "ari")
    throw std::invalid_argument("--rank-by must be acc, nmi or ari");

  Dataset d = load_input(o);
  if (!d.has_truth())
    throw std::invalid_argument("sweep requires a truth column for ranking");

  struct Row {
    std::size_t k;
    double percentile;
    MetricsReport r;
  };
  std::vector<Row> rows;
  MeanCutParams p = to_params(o);
  auto [unique, map] = dedup(d);
  (void)map;
  for (std::size_t k = s.k_min; k <= s.k_max; k += s.k_step) {
    if (k + 1 > unique.n) continue;  // K out of range for this dataset
    for (double pct = s.p_min; pct <= s.p_max + 1e-12; pct += s.p_step) {
      p.knn_k = k;
      p.percentile = std::min(pct, std::nextafter(1.0, 0.0));
      Labeling result;
      try {
        result = improved_meancut(d, p);
      } catch (const std::exception&) {
        continue;  // grid point invalid (e.g. internal set too small)
      }
      rows.push_back({k, pct, evaluate(d.truth, result.label)});
    }
  }
  if (rows.empty()) throw std::runtime_error("sweep grid produced no results");

  auto score = [&](const Row& r) {
    if (s.rank_by == "nmi") return r.r.nmi;
    if (s.rank_by == "ari") return r.r.ari;
    return r.r.acc;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (score(a) != score(b)) return score(a) > score(b);
    if (a.k != b.k) return a.k < b.k;
    return a.percentile < b.percentile;
  });

  std::ofstream out(s.out);
  if (!out) throw std::runtime_error("cannot write " + s.out);
  out << "K,percentile,acc,nmi,ari,k_pred\n";
  out << std::fixed;
  out.precision(6);
  for (const Row& r : rows)
    out << r.k << ',' << r.percentile << ',' << r.r.acc << ',' << r.r.nmi
        << ',' << r.r.ari << ',' << r.r.k_pred << '\n';

  const Row& best = rows.front();
  std::cout << "best " << s.rank_by << ": K=" << best.k
            << " percentile=" << best.percentile << " acc=" << best.r.acc
            << " nmi=" << best.r.nmi << " ari=" << best.r.ari
            << " k_pred=" << best.r.k_pred << '\n';
  return 0;
}

struct GenOpts {
  std::string preset;
  std::size_t n = 200;
  std::uint64_t seed = 0;
  std::string out;
  SyntheticParams params;
};

int cmd_gen(const GenOpts& g) {
  if (g.out.empty()) throw std::invalid_argument("gen requires --out");
  Dataset d = gen_synthetic(parse_preset(g.preset), g.n, g.seed, g.params);
  write_csv(d, g.out);
  return 0;
}

// --- oracle harness ---------------------------------------------------

Dataset random_points(std::size_t n, std::size_t dim, std::mt19937_64& gen) {
  Dataset d;
  d.n = n;
  d.dim = dim;
  d.values.resize(n * dim);
  for (double& v : d.values)
    v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_set(
    const SpanningTree& t) {
  std::vector<std::pair<std::size_t, std::size_t>> set;
  set.reserve(t.edges.size());
  for (const auto& e : t.edges)
    set.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(set.begin(), set.end());
  return set;
}

int oracle_pathsim(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Kernel kernel{KernelKind::laplacian, 1.0};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 gen(seed + t);
    Dataset d = random_points(n, 2 + 6 * (t % 2), gen);
    SimilarityMatrix direct =
        floyd_warshall_maximin(similarity_matrix(d, kernel));
    SimilarityMatrix via_tree = tree_pathsim(kruskal_full(d, kernel), d.n);
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = 0; j < d.n; ++j) {
        if (direct.at(i, j) != via_tree.at(i, j)) {
          std::cout << "pathsim mismatch: trial " << t << " pair (" << i
                    << ',' << j << ") floyd=" << direct.at(i, j)
                    << " tree=" << via_tree.at(i, j) << '\n';
          return 2;
        }
      }
    }
  }
  std::cout << "pathsim oracle: " << trials << " trials passed\n";
  return 0;
}

int oracle_mst(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Kernel kernel{KernelKind::laplacian, 1.0};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 gen(seed + t);
    Dataset d = random_points(n, 2, gen);
    double ratio = 0.05 + 0.9 * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
    SpanningTree full = kruskal_full(d, kernel);
    SpanningTree fast = fast_mst(d, kernel, ratio);
    if (edge_set(full) != edge_set(fast)) {
      std::cout << "mst mismatch: trial " << t << " ratio " << ratio
                << ": fast_mst edge set differs from kruskal_full\n";
      return 2;
    }
    double prim = oracle::prim_total_distance(d);
    double kruskal = tree_total(full).first;
    if (std::abs(prim - kruskal) > 1e-9 * std::max(1.0, prim)) {
      std::cout << "mst mismatch: trial " << t << " total " << kruskal
                << " vs prim " << prim << '\n';
      return 2;
    }
  }
  std::cout << "mst oracle: " << trials << " trials passed\n";
  return 0;
}

int oracle_hungarian(std::size_t n, std::size_t trials, std::uint64_t seed) {
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 gen(seed + t);
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost)
      for (double& c : row) c = static_cast<double>(gen() % 41);
    double fast = hungarian(cost).total;
    double brute = oracle::hungarian_brute(cost);
    if (fast != brute) {
      std::cout << "hungarian mismatch: trial " << t << " fast=" << fast
                << " brute=" << brute << '\n';
      return 2;
    }
  }
  std::cout << "hungarian oracle: " << trials << " trials passed\n";
  return 0;
}

int oracle_meancut(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Kernel kernel{KernelKind::laplacian, 1.0};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 gen(seed + t);
    Dataset d = random_points(n, 2, gen);
    SimilarityMatrix sim = tree_pathsim(kruskal_full(d, kernel), d.n);
    std::vector<double> deg = degrees(sim);
    ClusterState st = ClusterState::seed(gen() % d.n, sim, deg);
    for (std::size_t step = 0; step + 1 < d.n; ++step) {
      double fast = meancut_value(st);
      double dense = oracle::meancut_dense(sim, st.members);
      if (std::abs(fast - dense) > 1e-12 * std::max(1.0, std::abs(dense))) {
        std::cout << "meancut mismatch: trial " << t << " m=" << st.m
                  << " incremental=" << fast << " dense=" << dense << '\n';
        return 2;
      }
      std::size_t next = gen() % d.n;
      while (st.in_cluster[next]) next = (next + 1) % d.n;
      st.add(next, sim, deg);
    }
  }
  std::cout << "meancut oracle: " << trials << " trials passed\n";
  return 0;
}

// --- bench ------------------------------------------------------------

struct BenchOpts {
  std::size_t n = 5000;
  double ratio_min = 0.05, ratio_max = 0.95, ratio_step = 0.05;
  std::size_t repeats = 3;
  std::uint64_t seed = 0;
  std::string out;
};

double median_ms(std::vector<double>& samples) {
  std::sort(samples.begin(), samples.end());
  std::size_t mid = samples.size() / 2;
  if (samples.size() % 2) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

int cmd_bench(const BenchOpts& b) {
  if (b.repeats < 1) throw std::invalid_argument("--repeats must be >= 1");
  SyntheticParams params;
  params.clusters = 8;
  Dataset d = gen_synthetic(Preset::blobs, b.n, b.seed, params);
  Kernel kernel{KernelKind::laplacian, 1.0};

  std::ostringstream csv;
  csv << "ratio,subtree_count,median_runtime_ms\n";
  csv.precision(6);
  if (b.repeats == 1)
    std::cout << "note: repeats=1, runtimes are single samples\n";

  for (double ratio = b.ratio_min; ratio <= b.ratio_max + 1e-12;
       ratio += b.ratio_step) {
    FastMstInfo info;
    std::vector<double> samples;
    for (std::size_t r = 0; r < b.repeats; ++r) {
      auto start = std::chrono::steady_clock::now();
      SpanningTree t = fast_mst(d, kernel, ratio, &info);
      auto stop = std::chrono::steady_clock::now();
      (void)t;
      samples.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
    }
    csv << ratio << ',' << info.subtrees << ',' << median_ms(samples) << '\n';
  }

  std::vector<double> samples;
  for (std::size_t r = 0; r < b.repeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    SpanningTree t = kruskal_full(d, kernel);
    auto stop = std::chrono::steady_clock::now();
    (void)t;
    samples.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
  }
  csv << "full,1," << median_ms(samples) << '\n';

  if (b.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(b.out);
    if (!out) throw std::runtime_error("cannot write " + b.out);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MeanCut graph clustering"};
  app.require_subcommand(1);

  CommonOpts cluster_opts;
  auto* cluster = app.add_subcommand("cluster", "cluster one dataset");
  add_common_flags(cluster, cluster_opts);
  cluster->add_option("--out-labels", cluster_opts.out_labels,
                      "labels CSV path");
  cluster->add_option("--out-metrics", cluster_opts.out_metrics,
                      "metrics JSON path");
  cluster->add_option("--out-scores", cluster_opts.out_scores,
                      "DGF scores CSV path");

  CommonOpts sweep_common;
  SweepOpts sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "grid over K and percentile");
  add_common_flags(sweep, sweep_common);
  sweep->add_option("--k-min", sweep_opts.k_min);
  sweep->add_option("--k-max", sweep_opts.k_max);
  sweep->add_option("--k-step", sweep_opts.k_step);
  sweep->add_option("--p-min", sweep_opts.p_min);
  sweep->add_option("--p-max", sweep_opts.p_max);
  sweep->add_option("--p-step", sweep_opts.p_step);
  sweep->add_option("--rank-by", sweep_opts.rank_by, "acc|nmi|ari");
  sweep->add_option("--out", sweep_opts.out, "results CSV path");

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a synthetic dataset");
  gen->add_option("--preset", gen_opts.preset)->required();
  gen->add_option("--n", gen_opts.n);
  gen->add_option("--seed", gen_opts.seed);
  gen->add_option("--out", gen_opts.out)->required();
  gen->add_option("--clusters", gen_opts.params.clusters);
  gen->add_option("--spread", gen_opts.params.spread);
  gen->add_option("--separation", gen_opts.params.separation);
  gen->add_option("--noise-frac", gen_opts.params.noise_frac);
  gen->add_option("--bridge-frac", gen_opts.params.bridge_frac);

  std::string oracle_kind;
  std::size_t oracle_n = 64, oracle_trials = 100;
  std::uint64_t oracle_seed = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "run an oracle check");
  oracle_cmd->add_option("kind", oracle_kind, "pathsim|mst|hungarian|meancut")
      ->required();
  oracle_cmd->add_option("--n", oracle_n);
  oracle_cmd->add_option("--trials", oracle_trials);
  oracle_cmd->add_option("--seed", oracle_seed);

  BenchOpts bench_opts;
  auto* bench = app.add_subcommand("bench", "FastMST ratio sweep timings");
  bench->add_option("--n", bench_opts.n);
  bench->add_option("--ratio-min", bench_opts.ratio_min);
  bench->add_option("--ratio-max", bench_opts.ratio_max);
  bench->add_option("--ratio-step", bench_opts.ratio_step);
  bench->add_option("--repeats", bench_opts.repeats);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--out", bench_opts.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cluster->parsed()) return cmd_cluster(cluster_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_common, sweep_opts);
    if (gen->parsed()) return cmd_gen(gen_opts);
    if (bench->parsed()) return cmd_bench(bench_opts);
    if (oracle_cmd->parsed()) {
      if (oracle_kind == "pathsim")
        return oracle_pathsim(oracle_n, oracle_trials, oracle_seed);
      if (oracle_kind == "mst")
        return oracle_mst(oracle_n, oracle_trials, oracle_seed);
      if (oracle_kind == "hungarian")
        return oracle_hungarian(std::min<std::size_t>(oracle_n, 7),
                                oracle_trials, oracle_seed);
      if (oracle_kind == "meancut")
        return oracle_meancut(oracle_n, oracle_trials, oracle_seed);
      throw std::invalid_argument("unknown oracle kind '" + oracle_kind + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
