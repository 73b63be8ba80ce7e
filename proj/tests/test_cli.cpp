#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "meancut/dataset.hpp"

#ifndef MEANCUT_CLI
#error "MEANCUT_CLI must point at the built binary"
#endif

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(MEANCUT_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("cli gen writes a loadable CSV and is deterministic") {
  testutil::TempDir tmp;
  auto a = tmp.file("a.csv");
  auto b = tmp.file("b.csv");
  CHECK(run("gen --preset blobs --n 90 --seed 4 --out " + a.string()) == 0);
  CHECK(run("gen --preset blobs --n 90 --seed 4 --out " + b.string()) == 0);
  CHECK(testutil::read_text(a) == testutil::read_text(b));

  meancut::Dataset d =
      meancut::load_csv(a, meancut::TruthSelector::parse("last"));
  CHECK(d.n == 90);
  CHECK(d.dim == 2);

  SUBCASE("unknown preset fails with exit 1") {
    CHECK(run("gen --preset swirl --n 10 --seed 1 --out " + a.string()) == 1);
  }
}

TEST_CASE("cli cluster end to end") {
  testutil::TempDir tmp;
  auto data = tmp.file("blobs.csv");
  REQUIRE(run("gen --preset blobs --n 120 --seed 9 --out " + data.string()) ==
          0);

  auto labels = tmp.file("labels.csv");
  auto metrics = tmp.file("metrics.json");
  auto scores = tmp.file("scores.csv");
  std::string flags = "cluster --input " + data.string() +
                      " --truth-col last --k 8 --percentile 0.2" +
                      " --out-labels " + labels.string() + " --out-metrics " +
                      metrics.string() + " --out-scores " + scores.string();
  REQUIRE(run(flags) == 0);

  SUBCASE("labels CSV has one row per input point") {
    std::string text = testutil::read_text(labels);
    CHECK(std::count(text.begin(), text.end(), '\n') == 120);
  }
  SUBCASE("metrics JSON carries the fixed field names") {
    std::string text = testutil::read_text(metrics);
    for (const char* key : {"\"acc\"", "\"nmi\"", "\"ari\"", "\"k_pred\"",
                            "\"n_noise\""})
      CHECK(text.find(key) != std::string::npos);
  }
  SUBCASE("scores CSV has a header plus one row per point") {
    std::string text = testutil::read_text(scores);
    CHECK(text.rfind("point_index,density,dgf,is_junction\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 121);
  }
  SUBCASE("rerun is byte-identical") {
    std::string first_labels = testutil::read_text(labels);
    std::string first_metrics = testutil::read_text(metrics);
    REQUIRE(run(flags) == 0);
    CHECK(testutil::read_text(labels) == first_labels);
    CHECK(testutil::read_text(metrics) == first_metrics);
  }
}

TEST_CASE("cli validation failures exit 1 without partial outputs") {
  testutil::TempDir tmp;
  auto labels = tmp.file("labels.csv");

  SUBCASE("missing input file") {
    CHECK(run("cluster --input " + tmp.file("absent.csv").string() +
              " --out-labels " + labels.string()) == 1);
    CHECK_FALSE(std::filesystem::exists(labels));
  }
  SUBCASE("bad parameter ranges") {
    auto data = tmp.file("d.csv");
    REQUIRE(run("gen --preset blobs --n 30 --seed 1 --out " + data.string()) ==
            0);
    std::string base = "cluster --input " + data.string() + " --out-labels " +
                       labels.string();
    CHECK(run(base + " --ratio 1.5") == 1);
    CHECK(run(base + " --percentile 1.0") == 1);
    CHECK(run(base + " --sigma 0") == 1);
    CHECK_FALSE(std::filesystem::exists(labels));
  }
  SUBCASE("metrics requested without truth") {
    auto data = tmp.file("nt.csv");
    REQUIRE(run("gen --preset blobs --n 30 --seed 1 --out " + data.string()) ==
            0);
    // load drops nothing: the generated truth column is treated as a feature
    // unless --truth-col is given, so request metrics without selecting it
    CHECK(run("cluster --input " + data.string() + " --out-labels " +
              labels.string() + " --out-metrics " + tmp.file("m.json").string()) ==
          1);
  }
}

TEST_CASE("cli sweep emits a ranked CSV") {
  testutil::TempDir tmp;
  auto data = tmp.file("blobs.csv");
  REQUIRE(run("gen --preset blobs --n 90 --seed 2 --out " + data.string()) ==
          0);
  auto out = tmp.file("sweep.csv");
  std::string flags = "sweep --input " + data.string() +
                      " --truth-col last --k-min 5 --k-max 7 --k-step 1" +
                      " --p-min 0.1 --p-max 0.3 --p-step 0.1 --out " +
                      out.string();
  REQUIRE(run(flags) == 0);
  std::string text = testutil::read_text(out);
  CHECK(text.rfind("K,percentile,acc,nmi,ari,k_pred\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 2);

  SUBCASE("rerun is byte-identical") {
    REQUIRE(run(flags) == 0);
    CHECK(testutil::read_text(out) == text);
  }
}

TEST_CASE("cli oracle commands pass quickly") {
  CHECK(run("oracle pathsim --n 24 --trials 5 --seed 3") == 0);
  CHECK(run("oracle mst --n 60 --trials 5 --seed 3") == 0);
  CHECK(run("oracle hungarian --n 5 --trials 20 --seed 3") == 0);
  CHECK(run("oracle meancut --n 16 --trials 5 --seed 3") == 0);
  CHECK(run("oracle nonsense") == 1);
}

TEST_CASE("cli bench emits the documented CSV header") {
  testutil::TempDir tmp;
  auto out = tmp.file("bench.csv");
  REQUIRE(run("bench --n 400 --ratio-min 0.2 --ratio-max 0.4 --ratio-step 0.2"
              " --repeats 1 --seed 1 --out " +
              out.string()) == 0);
  std::string text = testutil::read_text(out);
  CHECK(text.rfind("ratio,subtree_count,median_runtime_ms\n", 0) == 0);
  CHECK(text.find("full,1,") != std::string::npos);
}
