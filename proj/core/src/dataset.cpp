#include "meancut/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace meancut {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(trim(cur));
  return cells;
}

bool parse_real(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* begin = cell.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end != begin + cell.size() || errno == ERANGE) return false;
  if (!std::isfinite(v)) return false;
  out = v;
  return true;
}

}  // namespace

std::vector<int> DedupMap::expand(const std::vector<int>& rep_labels) const {
  if (rep_labels.size() != kept.size())
    throw std::invalid_argument("DedupMap::expand: label count != kept count");
  std::unordered_map<std::size_t, std::size_t> pos;
  pos.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) pos[kept[i]] = i;
  std::vector<int> full(owner.size());
  for (std::size_t i = 0; i < owner.size(); ++i)
    full[i] = rep_labels[pos.at(owner[i])];
  return full;
}

TruthSelector TruthSelector::parse(const std::string& text) {
  if (text == "last") return {Kind::last, 0};
  if (text == "first") return {Kind::first, 0};
  try {
    std::size_t consumed = 0;
    long v = std::stol(text, &consumed);
    if (consumed == text.size() && v >= 0)
      return {Kind::index, static_cast<std::size_t>(v)};
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("truth column selector must be 'last', 'first' "
                              "or a 0-based index, got '" + text + "'");
}

Dataset load_csv(const std::filesystem::path& path, TruthSelector truth) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw std::runtime_error(path.string() + ": empty file");

  // A first row with any non-numeric feature cell is a header. The truth
  // column is exempt: class labels are allowed to be arbitrary strings.
  auto truth_col_for = [&](std::size_t width) -> std::size_t {
    switch (truth.kind) {
      case TruthSelector::Kind::first: return 0;
      case TruthSelector::Kind::last: return width - 1;
      case TruthSelector::Kind::index: return truth.index;
      case TruthSelector::Kind::none: break;
    }
    return width;  // out of range = no truth column
  };
  bool header = false;
  {
    const auto& front = rows.front();
    std::size_t skip = truth_col_for(front.size());
    for (std::size_t c = 0; c < front.size(); ++c) {
      double v;
      if (c != skip && !parse_real(front[c], v)) {
        header = true;
        break;
      }
    }
  }
  std::size_t first = header ? 1 : 0;
  if (first == rows.size())
    throw std::runtime_error(path.string() + ": no data rows after header");

  std::size_t width = rows[first].size();
  for (std::size_t r = first; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      std::ostringstream msg;
      msg << path.string() << ": row " << r + 1 << " has " << rows[r].size()
          << " cells, expected " << width;
      throw std::runtime_error(msg.str());
    }
  }

  std::size_t truth_col = truth_col_for(width);
  if (truth.kind == TruthSelector::Kind::index && truth.index >= width) {
    std::ostringstream msg;
    msg << path.string() << ": truth column " << truth.index
        << " out of range, file has " << width << " columns";
    throw std::runtime_error(msg.str());
  }
  std::size_t dim = truth_col < width ? width - 1 : width;
  if (dim == 0)
    throw std::runtime_error(path.string() + ": no feature columns left");

  Dataset d;
  d.n = rows.size() - first;
  d.dim = dim;
  d.values.reserve(d.n * dim);
  std::unordered_map<std::string, int> label_of;
  if (truth_col < width) d.truth.reserve(d.n);

  for (std::size_t r = first; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c == truth_col) {
        auto [it, inserted] = label_of.try_emplace(
            rows[r][c], static_cast<int>(label_of.size()));
        d.truth.push_back(it->second);
        continue;
      }
      double v;
      if (!parse_real(rows[r][c], v)) {
        std::ostringstream msg;
        msg << path.string() << ": row " << r + 1 << ", column " << c + 1
            << ": cannot parse '" << rows[r][c] << "' as a finite real";
        throw std::runtime_error(msg.str());
      }
      d.values.push_back(v);
    }
  }
  return d;
}

void write_csv(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.dim; ++j) {
      if (j) out << ',';
      out << d.at(i, j);
    }
    if (d.has_truth()) out << ',' << d.truth[i];
    out << '\n';
  }
}

Dataset minmax_normalize(const Dataset& d) {
  Dataset out = d;
  for (std::size_t j = 0; j < d.dim; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < d.n; ++i) {
      lo = std::min(lo, d.at(i, j));
      hi = std::max(hi, d.at(i, j));
    }
    double range = hi - lo;
    for (std::size_t i = 0; i < d.n; ++i)
      out.at(i, j) = range > 0.0 ? (d.at(i, j) - lo) / range : 0.0;
  }
  return out;
}

std::pair<Dataset, DedupMap> dedup(const Dataset& d) {
  DedupMap map;
  map.owner.resize(d.n);
  std::unordered_map<std::string, std::size_t> seen;  // row bytes -> owner row
  seen.reserve(d.n);
  Dataset out;
  out.dim = d.dim;
  if (d.has_truth()) out.truth.reserve(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    std::string key(reinterpret_cast<const char*>(d.values.data() + i * d.dim),
                    d.dim * sizeof(double));
    auto [it, inserted] = seen.try_emplace(std::move(key), i);
    if (inserted) {
      map.kept.push_back(i);
      auto r = d.row(i);
      out.values.insert(out.values.end(), r.begin(), r.end());
      if (d.has_truth()) out.truth.push_back(d.truth[i]);
    }
    map.owner[i] = it->second;
  }
  out.n = map.kept.size();
  return {std::move(out), std::move(map)};
}

double mbr_diagonal(const Dataset& d) {
  if (d.n == 0) throw std::invalid_argument("mbr_diagonal: empty dataset");
  double sum = 0.0;
  for (std::size_t j = 0; j < d.dim; ++j) {
    double lo = d.at(0, j), hi = d.at(0, j);
    for (std::size_t i = 1; i < d.n; ++i) {
      lo = std::min(lo, d.at(i, j));
      hi = std::max(hi, d.at(i, j));
    }
    sum += (hi - lo) * (hi - lo);
  }
  return std::sqrt(sum);
}

Preset parse_preset(const std::string& name) {
  if (name == "blobs") return Preset::blobs;
  if (name == "ring_island") return Preset::ring_island;
  if (name == "path_chain") return Preset::path_chain;
  if (name == "weak_bridge") return Preset::weak_bridge;
  if (name == "noisy_blobs") return Preset::noisy_blobs;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::blobs: return "blobs";
    case Preset::ring_island: return "ring_island";
    case Preset::path_chain: return "path_chain";
    case Preset::weak_bridge: return "weak_bridge";
    case Preset::noisy_blobs: return "noisy_blobs";
  }
  return "?";
}

namespace {

// Explicit draws so output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double normal() {  // Box-Muller, one value per two draws
    double u1 = uniform01(), u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 gen_;
};

void append_point(Dataset& d, double x, double y, int label) {
  d.values.push_back(x);
  d.values.push_back(y);
  d.truth.push_back(label);
  ++d.n;
}

void append_blob(Dataset& d, Rng& rng, std::size_t count, double cx, double cy,
                 double spread, int label) {
  for (std::size_t i = 0; i < count; ++i)
    append_point(d, cx + spread * rng.normal(), cy + spread * rng.normal(),
                 label);
}

std::vector<std::size_t> share(std::size_t total, std::size_t parts) {
  std::vector<std::size_t> counts(parts, total / parts);
  for (std::size_t i = 0; i < total % parts; ++i) ++counts[i];
  return counts;
}

}  // namespace

Dataset gen_synthetic(Preset preset, std::size_t n, std::uint64_t seed,
                      const SyntheticParams& params,
                      std::vector<std::size_t>* tagged) {
  if (params.clusters < 1) throw std::invalid_argument("clusters must be >= 1");
  Rng rng(seed);
  Dataset d;
  d.dim = 2;
  if (tagged) tagged->clear();

  auto require = [&](std::size_t minimum) {
    if (n < minimum) {
      std::ostringstream msg;
      msg << "preset " << preset_name(preset) << " needs n >= " << minimum
          << ", got " << n;
      throw std::invalid_argument(msg.str());
    }
  };

  const double sep = params.separation;
  const std::size_t k = params.clusters;

  switch (preset) {
    case Preset::blobs: {
      require(2 * k);
      auto counts = share(n, k);
      for (std::size_t c = 0; c < k; ++c) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(c) /
                       static_cast<double>(std::max<std::size_t>(k, 2));
        double cx = k == 1 ? 0.0 : sep * std::cos(angle);
        double cy = k == 1 ? 0.0 : sep * std::sin(angle);
        append_blob(d, rng, counts[c], cx, cy, params.spread,
                    static_cast<int>(c));
      }
      break;
    }
    case Preset::ring_island: {
      require(2 * k + 8);
      std::size_t inner = k > 1 ? k - 1 : 1;
      std::size_t ring_count = n / 2;
      auto counts = share(n - ring_count, inner);
      for (std::size_t c = 0; c < inner; ++c) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(c) /
                       static_cast<double>(std::max<std::size_t>(inner, 2));
        double r = inner == 1 ? 0.0 : sep * 0.25;
        append_blob(d, rng, counts[c], r * std::cos(angle), r * std::sin(angle),
                    params.spread, static_cast<int>(c));
      }
      for (std::size_t i = 0; i < ring_count; ++i) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(ring_count);
        double radius = sep + params.spread * rng.normal();
        append_point(d, radius * std::cos(angle), radius * std::sin(angle),
                     static_cast<int>(inner));
      }
      break;
    }
    case Preset::path_chain: {
      require(2 * k + 8);
      std::size_t blob_k = k > 1 ? k - 1 : 1;
      std::size_t path_count = n / 3;
      auto counts = share(n - path_count, blob_k);
      for (std::size_t c = 0; c < blob_k; ++c) {
        double cx = (static_cast<double>(c) -
                     static_cast<double>(blob_k - 1) / 2.0) * sep;
        append_blob(d, rng, counts[c], cx, sep, params.spread,
                    static_cast<int>(c));
      }
      // Path-shaped cluster below the blobs.
      double half = sep * static_cast<double>(blob_k) * 0.75;
      for (std::size_t i = 0; i < path_count; ++i) {
        double t = path_count == 1
                       ? 0.0
                       : static_cast<double>(i) /
                             static_cast<double>(path_count - 1);
        double x = -half + 2.0 * half * t;
        double y = -sep + params.spread * 0.5 * rng.normal() +
                   0.5 * sep * std::sin(3.0 * t * std::numbers::pi) * 0.2;
        append_point(d, x, y, static_cast<int>(blob_k));
      }
      break;
    }
    case Preset::weak_bridge: {
      require(20);
      std::size_t bridge =
          std::max<std::size_t>(1, static_cast<std::size_t>(
                                       params.bridge_frac *
                                       static_cast<double>(n)));
      auto counts = share(n - bridge, 2);
      append_blob(d, rng, counts[0], -sep / 2.0, 0.0, params.spread, 0);
      append_blob(d, rng, counts[1], sep / 2.0, 0.0, params.spread, 1);
      double lo = -sep / 2.0 + 2.5 * params.spread;
      double hi = sep / 2.0 - 2.5 * params.spread;
      for (std::size_t i = 0; i < bridge; ++i) {
        double t = bridge == 1 ? 0.5
                               : static_cast<double>(i) /
                                     static_cast<double>(bridge - 1);
        double x = lo + (hi - lo) * t;
        double y = 0.3 * params.spread * rng.normal();
        if (tagged) tagged->push_back(d.n);
        append_point(d, x, y, x < 0.0 ? 0 : 1);
      }
      break;
    }
    case Preset::noisy_blobs: {
      require(2 * k + 4);
      std::size_t noise = static_cast<std::size_t>(
          params.noise_frac * static_cast<double>(n));
      auto counts = share(n - noise, k);
      for (std::size_t c = 0; c < k; ++c) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(c) /
                       static_cast<double>(std::max<std::size_t>(k, 2));
        double cx = k == 1 ? 0.0 : sep * std::cos(angle);
        double cy = k == 1 ? 0.0 : sep * std::sin(angle);
        append_blob(d, rng, counts[c], cx, cy, params.spread,
                    static_cast<int>(c));
      }
      double extent = sep * 1.6;
      for (std::size_t i = 0; i < noise; ++i) {
        if (tagged) tagged->push_back(d.n);
        append_point(d, rng.uniform(-extent, extent),
                     rng.uniform(-extent, extent), -1);
      }
      break;
    }
  }
  return d;
}

}  // namespace meancut
