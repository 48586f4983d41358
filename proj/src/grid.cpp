#include "enosr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace enosr {

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw TooFewNodes("grid needs at least 2 nodes");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1]))
      throw NonMonotonicNodes("grid nodes must be strictly increasing at index " +
                              std::to_string(i));
  }
}

double Grid::min_spacing() const {
  double m = spacing(0);
  for (std::size_t i = 1; i < interval_count(); ++i) m = std::min(m, spacing(i));
  return m;
}

double Grid::max_spacing() const {
  double m = spacing(0);
  for (std::size_t i = 1; i < interval_count(); ++i) m = std::max(m, spacing(i));
  return m;
}

std::size_t Grid::interval_containing(double x) const {
  if (x < front() || x > back()) throw OutOfDomain();
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  if (it == nodes_.begin()) return 0;
  std::size_t j = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  return std::min(j, interval_count() - 1);
}

Grid build_grid(std::vector<double> nodes) { return Grid(std::move(nodes)); }

Grid refine_dyadic(const Grid& g) {
  std::vector<double> out;
  out.reserve(2 * g.node_count() - 1);
  for (std::size_t i = 0; i + 1 < g.node_count(); ++i) {
    out.push_back(g.node(i));
    out.push_back(g.node(i) + 0.5 * g.spacing(i));
  }
  out.push_back(g.back());
  return Grid(std::move(out));
}

namespace {

// Uniform double in [0, 1) from the raw engine stream; avoids the
// implementation-defined behavior of std::uniform_real_distribution so the
// generated grids are identical across platforms.
double unit_draw(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace

Grid generate_quasi_uniform(std::size_t n_intervals, double a, double b, double sigma_target,
                            std::uint64_t seed) {
  if (n_intervals < 1) throw TooFewNodes("need at least one interval");
  if (!(sigma_target >= 1.0)) throw InvalidSigma();
  if (!(a < b)) throw NonMonotonicNodes("domain endpoints must satisfy a < b");

  std::mt19937_64 eng(seed);
  std::vector<double> weights(n_intervals);
  double total = 0.0;
  for (double& w : weights) {
    w = 1.0 + unit_draw(eng) * (sigma_target - 1.0);
    total += w;
  }

  std::vector<double> nodes(n_intervals + 1);
  nodes.front() = a;
  double cumulative = 0.0;
  for (std::size_t i = 1; i < n_intervals; ++i) {
    cumulative += weights[i - 1];
    nodes[i] = a + (b - a) * (cumulative / total);
  }
  nodes.back() = b;
  return Grid(std::move(nodes));
}

bool is_n_local_sigma(const Grid& g, std::size_t n, double sigma) {
  if (n < 1) throw IndexOutOfRange("window length must be >= 1");
  const std::size_t count = g.interval_count();
  const std::size_t window = std::min(n, count);
  for (std::size_t i = 0; i + window <= count; ++i) {
    double lo = g.spacing(i), hi = lo;
    for (std::size_t k = 1; k < window; ++k) {
      lo = std::min(lo, g.spacing(i + k));
      hi = std::max(hi, g.spacing(i + k));
    }
    if (hi > sigma * lo) return false;
  }
  return true;
}

}  // namespace enosr
