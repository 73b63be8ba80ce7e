#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "meancut/graph.hpp"

using namespace meancut;

TEST_CASE("euclidean") {
  std::vector<double> a{0, 0}, b{3, 4}, c{1}, d{-1};
  CHECK(euclidean(a, b) == 5.0);
  CHECK(euclidean(b, b) == 0.0);
  CHECK(euclidean(c, d) == 2.0);
  CHECK_THROWS(euclidean(a, c));
}

TEST_CASE("kernel weight") {
  Kernel gauss{KernelKind::gaussian, 1.0};
  Kernel lap{KernelKind::laplacian, 1.0};
  CHECK(gauss.weight(0.0) == 1.0);
  CHECK(lap.weight(0.0) == 1.0);
  CHECK(lap.weight(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(gauss.weight(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK_THROWS(lap.weight(-0.5));
  CHECK_THROWS(Kernel{KernelKind::gaussian, 0.0}.weight(1.0));

  SUBCASE("strictly decreasing in distance") {
    for (Kernel k : {gauss, lap}) {
      double prev = k.weight(0.0);
      for (double dist = 0.1; dist < 10.0; dist += 0.1) {
        double cur = k.weight(dist);
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
  SUBCASE("parse_kernel") {
    CHECK(parse_kernel("gaussian") == KernelKind::gaussian);
    CHECK(parse_kernel("laplacian") == KernelKind::laplacian);
    CHECK_THROWS(parse_kernel("cosine"));
  }
}

TEST_CASE("similarity_matrix") {
  Kernel lap{KernelKind::laplacian, 1.0};

  SUBCASE("n=1 is the 1x1 unit matrix") {
    SimilarityMatrix s = similarity_matrix(testutil::from_rows({{4, 2}}), lap);
    CHECK(s.n == 1);
    CHECK_FALSE(s.pathbased);
    CHECK(s.at(0, 0) == 1.0);
  }
  SUBCASE("two identical points give all ones") {
    SimilarityMatrix s =
        similarity_matrix(testutil::from_rows({{1, 1}, {1, 1}}), lap);
    CHECK(s.at(0, 1) == 1.0);
    CHECK(s.at(1, 0) == 1.0);
  }
  SUBCASE("three collinear points, laplacian sigma=1") {
    SimilarityMatrix s =
        similarity_matrix(testutil::from_rows({{0.0}, {1.0}, {2.0}}), lap);
    CHECK(s.at(0, 1) == std::exp(-0.5));
    CHECK(s.at(1, 2) == std::exp(-0.5));
    CHECK(s.at(0, 2) == std::exp(-1.0));
  }
  SUBCASE("invariants: symmetric, unit diagonal, entries in (0,1]") {
    SimilarityMatrix s =
        similarity_matrix(testutil::random_points(40, 4, 2), lap);
    for (std::size_t i = 0; i < s.n; ++i) {
      CHECK(s.at(i, i) == 1.0);
      for (std::size_t j = 0; j < s.n; ++j) {
        CHECK(s.at(i, j) == s.at(j, i));
        CHECK(s.at(i, j) > 0.0);
        CHECK(s.at(i, j) <= 1.0);
      }
    }
  }
  SUBCASE("dense cap refusal") {
    CHECK_THROWS(similarity_matrix(testutil::random_points(11, 2, 1), lap,
                                   /*dense_cap=*/10));
  }
  SUBCASE("similarity rank order reverses distance rank order") {
    Dataset d = testutil::random_points(15, 3, 9);
    for (Kernel k : {Kernel{KernelKind::gaussian, 0.7},
                     Kernel{KernelKind::laplacian, 2.5}}) {
      SimilarityMatrix s = similarity_matrix(d, k);
      for (std::size_t i = 1; i < d.n; ++i) {
        for (std::size_t j = i + 1; j < d.n; ++j) {
          double di = euclidean(d.row(0), d.row(i));
          double dj = euclidean(d.row(0), d.row(j));
          if (di < dj) CHECK(s.at(0, i) > s.at(0, j));
          if (di > dj) CHECK(s.at(0, i) < s.at(0, j));
        }
      }
    }
  }
}

TEST_CASE("degrees") {
  SUBCASE("hand cases") {
    SimilarityMatrix s;
    s.n = 2;
    s.w = {1.0, 0.5, 0.5, 1.0};
    CHECK(degrees(s) == std::vector<double>{1.5, 1.5});

    SimilarityMatrix ones;
    ones.n = 3;
    ones.w.assign(9, 1.0);
    CHECK(degrees(ones) == std::vector<double>{3, 3, 3});
  }
  SUBCASE("chain example includes the diagonal") {
    SimilarityMatrix s = similarity_matrix(
        testutil::from_rows({{0.0}, {1.0}, {2.0}}),
        Kernel{KernelKind::laplacian, 1.0});
    std::vector<double> d = degrees(s);
    CHECK(d[0] == doctest::Approx(1.0 + std::exp(-0.5) + std::exp(-1.0))
                      .epsilon(1e-15));
  }
  SUBCASE("entries lie in [1, n]") {
    SimilarityMatrix s = similarity_matrix(
        testutil::random_points(25, 2, 5), Kernel{KernelKind::gaussian, 1.0});
    for (double v : degrees(s)) {
      CHECK(v >= 1.0);
      CHECK(v <= 25.0);
    }
  }
}
