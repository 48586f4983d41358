#ifndef ENOSR_CONVERGENCE_HPP
#define ENOSR_CONVERGENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "enosr/corner_function.hpp"
#include "enosr/interpolant.hpp"

namespace enosr {

/// Sup-norm interpolation error estimated over an equispaced probe of each
/// piece (boundaries included), so a split point is probed from both sides.
double sup_error(const CornerFunction& f, const Interpolant& interp,
                 std::size_t probes_per_piece);

/// Empirical orders p_k = log2(e_{k-1} / e_k) for k = 1..n-1 (the first level
/// has no order). Throws NonpositiveError on any error <= 0.
std::vector<double> order_sequence(std::span<const double> errors);

/// One dyadic refinement level of a study.
struct ConvergenceRow {
  std::size_t level;
  double h_max;
  std::optional<double> detect_error;  // |mu - psi|; absent when no split
  std::optional<double> detect_order;
  double interp_error;                 // sup-norm error
  std::optional<double> interp_order;
};

/// Runs `levels` dyadic refinements of base_grid (level 0 = base_grid),
/// building the interpolant at each level and recording corner-location and
/// sup-norm errors with their level-to-level orders. Order cells stay empty
/// where either neighboring error is absent or nonpositive.
std::vector<ConvergenceRow> convergence_study(const CornerFunction& f, const Grid& base_grid,
                                              std::size_t levels, std::size_t m, Mode mode);

}  // namespace enosr

#endif
