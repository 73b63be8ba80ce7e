#include "meancut/graph.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace meancut {

KernelKind parse_kernel(const std::string& name) {
  if (name == "gaussian") return KernelKind::gaussian;
  if (name == "laplacian") return KernelKind::laplacian;
  throw std::invalid_argument("unknown kernel '" + name + "'");
}

double Kernel::weight(double dist) const {
  if (sigma <= 0.0) throw std::invalid_argument("kernel sigma must be > 0");
  if (dist < 0.0) throw std::invalid_argument("kernel distance must be >= 0");
  double denom = 2.0 * sigma * sigma;
  switch (kind) {
    case KernelKind::gaussian: return std::exp(-dist * dist / denom);
    case KernelKind::laplacian: return std::exp(-dist / denom);
  }
  return 0.0;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("euclidean: dimension mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double diff = a[j] - b[j];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

SimilarityMatrix similarity_matrix(const Dataset& d, const Kernel& k,
                                   std::size_t dense_cap) {
  if (d.n > dense_cap) {
    std::ostringstream msg;
    msg << "similarity_matrix: n = " << d.n << " exceeds dense cap "
        << dense_cap;
    throw std::runtime_error(msg.str());
  }
  SimilarityMatrix s;
  s.n = d.n;
  s.pathbased = false;
  s.w.assign(d.n * d.n, 1.0);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = i + 1; j < d.n; ++j) {
      double w = k.weight(euclidean(d.row(i), d.row(j)));
      s.at(i, j) = w;
      s.at(j, i) = w;
    }
  }
  return s;
}

std::vector<double> degrees(const SimilarityMatrix& s) {
  std::vector<double> d(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < s.n; ++j) sum += s.at(i, j);
    d[i] = sum;
  }
  return d;
}

}  // namespace meancut
