#include <cmath>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "meancut/oracle.hpp"
#include "meancut/pathsim.hpp"

using namespace meancut;

namespace {

const Kernel kLap{KernelKind::laplacian, 1.0};

SimilarityMatrix raw3(double w01, double w12, double w02) {
  SimilarityMatrix s;
  s.n = 3;
  s.w = {1.0, w01, w02, w01, 1.0, w12, w02, w12, 1.0};
  return s;
}

}  // namespace

TEST_CASE("floyd_warshall_maximin") {
  SUBCASE("3-node chain routes around the weak direct edge") {
    SimilarityMatrix hat = floyd_warshall_maximin(raw3(0.9, 0.8, 0.2));
    CHECK(hat.pathbased);
    CHECK(hat.at(0, 2) == 0.8);
    CHECK(hat.at(0, 1) == 0.9);
    CHECK(hat.at(1, 2) == 0.8);
    for (std::size_t i = 0; i < 3; ++i) CHECK(hat.at(i, i) == 1.0);
  }
  SUBCASE("elementwise no smaller than the input") {
    SimilarityMatrix s =
        similarity_matrix(testutil::random_points(30, 2, 4), kLap);
    SimilarityMatrix hat = floyd_warshall_maximin(s);
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j) CHECK(hat.at(i, j) >= s.at(i, j));
  }
  SUBCASE("constant off-diagonal weights are a fixed point") {
    SimilarityMatrix hat = floyd_warshall_maximin(raw3(0.4, 0.4, 0.4));
    CHECK(hat.at(0, 1) == 0.4);
    CHECK(hat.at(0, 2) == 0.4);
    CHECK(hat.at(1, 2) == 0.4);
  }
  SUBCASE("rejects already path-based input and oversize input") {
    SimilarityMatrix hat = floyd_warshall_maximin(raw3(0.9, 0.8, 0.2));
    CHECK_THROWS(floyd_warshall_maximin(hat));
    SimilarityMatrix big =
        similarity_matrix(testutil::random_points(12, 2, 1), kLap);
    CHECK_THROWS(floyd_warshall_maximin(big, /*oracle_cap=*/10));
  }
}

TEST_CASE("tree_pathsim") {
  SUBCASE("path tree minimum") {
    SpanningTree t;
    t.n = 3;
    t.edges = {{0, 1, 0.0, 0.9}, {1, 2, 0.0, 0.8}};
    SimilarityMatrix hat = tree_pathsim(t, 3);
    CHECK(hat.at(0, 2) == 0.8);
    CHECK(hat.at(0, 1) == 0.9);
    CHECK(hat.pathbased);
  }
  SUBCASE("star tree with equal sims") {
    SpanningTree t;
    t.n = 4;
    t.edges = {{0, 1, 0.0, 0.5}, {0, 2, 0.0, 0.5}, {0, 3, 0.0, 0.5}};
    SimilarityMatrix hat = tree_pathsim(t, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(hat.at(i, j) == (i == j ? 1.0 : 0.5));
  }
  SUBCASE("rejects non-spanning input") {
    SpanningTree t;
    t.n = 3;
    t.edges = {{0, 1, 0.0, 0.9}};
    CHECK_THROWS(tree_pathsim(t, 3));
  }
  SUBCASE("matches the brute DFS path minimum") {
    Dataset d = testutil::random_points(60, 2, 21);
    SpanningTree t = kruskal_full(d, kLap);
    SimilarityMatrix hat = tree_pathsim(t, d.n);
    for (std::size_t i = 0; i < d.n; i += 7)
      for (std::size_t j = 0; j < d.n; ++j)
        CHECK(hat.at(i, j) == oracle::tree_path_min_sim(t, i, j));
  }
  SUBCASE("theorem-2 equivalence with the Floyd-Warshall oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Dataset d = testutil::random_points(48, 2 + (seed % 2) * 6, 500 + seed);
      SimilarityMatrix via_fw =
          floyd_warshall_maximin(similarity_matrix(d, kLap));
      SimilarityMatrix via_tree = tree_pathsim(kruskal_full(d, kLap), d.n);
      CHECK(via_fw.w == via_tree.w);
    }
  }
  SUBCASE("at most n-1 distinct off-diagonal values") {
    Dataset d = testutil::random_points(40, 2, 3);
    SimilarityMatrix hat = tree_pathsim(kruskal_full(d, kLap), d.n);
    std::set<double> distinct;
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = i + 1; j < d.n; ++j) distinct.insert(hat.at(i, j));
    CHECK(distinct.size() <= d.n - 1);
  }
}

TEST_CASE("pathsim_pipeline") {
  SUBCASE("n=1") {
    SimilarityMatrix hat =
        pathsim_pipeline(testutil::from_rows({{3, 4}}), kLap, 0.2);
    CHECK(hat.n == 1);
    CHECK(hat.at(0, 0) == 1.0);
    CHECK(hat.pathbased);
  }
  SUBCASE("two identical points have maximin similarity 1") {
    SimilarityMatrix hat =
        pathsim_pipeline(testutil::from_rows({{1, 1}, {1, 1}}), kLap, 0.2);
    CHECK(hat.at(0, 1) == 1.0);
  }
  SUBCASE("equals the Floyd-Warshall route on random data") {
    Dataset d = testutil::random_points(100, 2, 55);
    SimilarityMatrix fast = pathsim_pipeline(d, kLap, 0.2);
    SimilarityMatrix slow =
        floyd_warshall_maximin(similarity_matrix(d, kLap));
    CHECK(fast.w == slow.w);
  }
  SUBCASE("maximin triangle law") {
    Dataset d = testutil::random_points(35, 2, 8);
    SimilarityMatrix hat = pathsim_pipeline(d, kLap, 0.3);
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = 0; j < d.n; ++j)
        for (std::size_t k = 0; k < d.n; ++k)
          CHECK(hat.at(i, k) >= std::min(hat.at(i, j), hat.at(j, k)));
  }
}
