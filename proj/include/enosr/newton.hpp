#ifndef ENOSR_NEWTON_HPP
#define ENOSR_NEWTON_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "enosr/samples.hpp"

namespace enosr {

/// Interpolating polynomial of degree <= m-1 in Newton divided-difference
/// form over an m-point stencil. coefficient k is f[x_s, ..., x_{s+k}].
class NewtonPoly {
 public:
  NewtonPoly(std::vector<double> stencil_nodes, std::vector<double> coeffs);

  /// Horner-style nested evaluation; extrapolation outside the stencil hull
  /// is permitted (subcell resolution relies on it).
  double operator()(double x) const;

  std::span<const double> stencil_nodes() const { return nodes_; }
  std::span<const double> coefficients() const { return coeffs_; }
  std::size_t point_count() const { return nodes_.size(); }

 private:
  std::vector<double> nodes_;
  std::vector<double> coeffs_;
};

/// Newton divided difference f[x_start, ..., x_{start+order}].
/// Throws StencilOutOfRange if the node range does not exist.
double divided_difference(const Samples& s, std::size_t start, std::size_t order);

/// Unique polynomial of degree <= length-1 matching the samples on the
/// contiguous stencil [start, start+length).
NewtonPoly fit_newton(const Samples& s, std::size_t start, std::size_t length);

/// Root of p_right - p_left on [lo, hi] if that difference has exactly one
/// sign change over a 64-point probe of the interval; the root is polished by
/// bisection to width <= 2^-48 (hi - lo). Probe values within 1e-13 of the
/// difference's magnitude scale count as zero. Absence (no change, several
/// changes, or effectively identical polynomials) is a value: the caller
/// falls back to treating the interval as smooth.
std::optional<double> intersect_on_interval(const NewtonPoly& p_left, const NewtonPoly& p_right,
                                            double lo, double hi);

}  // namespace enosr

#endif
