#ifndef ENOSR_GRID_HPP
#define ENOSR_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "enosr/errors.hpp"

namespace enosr {

/// Strictly increasing node sequence x_0 < x_1 < ... < x_N.
/// Spacing statistics are always recomputed from the nodes.
class Grid {
 public:
  /// Validates and takes ownership of the node sequence.
  /// Throws TooFewNodes (fewer than 2 nodes) or NonMonotonicNodes.
  explicit Grid(std::vector<double> nodes);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t interval_count() const { return nodes_.size() - 1; }

  double node(std::size_t i) const { return nodes_[i]; }
  std::span<const double> nodes() const { return nodes_; }

  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }

  /// Width of interval i, i.e. x_{i+1} - x_i for i in [0, interval_count).
  double spacing(std::size_t i) const { return nodes_[i + 1] - nodes_[i]; }

  double min_spacing() const;
  double max_spacing() const;

  /// max_spacing / min_spacing; >= 1 by construction.
  double spacing_ratio() const { return max_spacing() / min_spacing(); }

  /// Index j of the interval [x_j, x_{j+1}] containing x; ties between
  /// adjacent intervals resolve to the left one. Throws OutOfDomain.
  std::size_t interval_containing(double x) const;

 private:
  std::vector<double> nodes_;
};

/// Builds a grid from raw abscissae (validating constructor wrapper).
Grid build_grid(std::vector<double> nodes);

/// Inserts the midpoint of every interval: 2N+1 nodes, even-indexed ones
/// equal to the input nodes. Preserves the spacing ratio and halves the
/// maximum spacing up to floating rounding.
Grid refine_dyadic(const Grid& g);

/// Deterministic quasi-uniform grid on [a, b] with n_intervals intervals and
/// spacing ratio bounded by sigma_target (up to floating roundoff). Spacing
/// factors are drawn from a seeded mt19937_64 stream mapped into
/// [1, sigma_target], then rescaled so the endpoints land exactly on a and b.
/// Throws InvalidSigma (sigma_target < 1) or TooFewNodes (n_intervals < 1).
Grid generate_quasi_uniform(std::size_t n_intervals, double a, double b, double sigma_target,
                            std::uint64_t seed);

/// True iff every window of n consecutive spacings has max/min <= sigma.
/// Windows longer than the grid degenerate to the single full window.
bool is_n_local_sigma(const Grid& g, std::size_t n, double sigma);

}  // namespace enosr

#endif
