#include "enosr/convergence.hpp"

#include <cmath>

#include "enosr/samples.hpp"

namespace enosr {

double sup_error(const CornerFunction& f, const Interpolant& interp,
                 std::size_t probes_per_piece) {
  if (probes_per_piece < 2) throw IndexOutOfRange("need at least 2 probes per piece");
  double worst = 0.0;
  for (const Piece& piece : interp.pieces()) {
    for (std::size_t k = 0; k < probes_per_piece; ++k) {
      const double t = piece.lo + (piece.hi - piece.lo) *
                                      (static_cast<double>(k) / (probes_per_piece - 1));
      worst = std::max(worst, std::abs(f.evaluate(t) - piece.poly(t)));
    }
  }
  return worst;
}

std::vector<double> order_sequence(std::span<const double> errors) {
  for (double e : errors)
    if (!(e > 0.0)) throw NonpositiveError();
  std::vector<double> orders;
  orders.reserve(errors.size() > 0 ? errors.size() - 1 : 0);
  for (std::size_t k = 1; k < errors.size(); ++k)
    orders.push_back(std::log2(errors[k - 1] / errors[k]));
  return orders;
}

namespace {

std::optional<double> ratio_order(const std::optional<double>& prev,
                                  const std::optional<double>& cur) {
  if (!prev || !cur || !(*prev > 0.0) || !(*cur > 0.0)) return std::nullopt;
  return std::log2(*prev / *cur);
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const CornerFunction& f, const Grid& base_grid,
                                              std::size_t levels, std::size_t m, Mode mode) {
  if (levels < 1) throw IndexOutOfRange("need at least one level");
  constexpr std::size_t kProbesPerPiece = 64;

  std::vector<ConvergenceRow> rows;
  rows.reserve(levels);
  Grid grid = base_grid;
  for (std::size_t k = 0; k < levels; ++k) {
    if (k > 0) grid = refine_dyadic(grid);
    const Samples samples = sample_function(grid, f.evaluate);
    const Interpolant interp = build_interpolant(samples, m, mode);

    ConvergenceRow row;
    row.level = k;
    row.h_max = grid.max_spacing();
    if (mode == Mode::EnoSr) {
      if (const std::optional<double> psi = interp.corner_estimate())
        row.detect_error = std::abs(f.corner - *psi);
    }
    row.interp_error = sup_error(f, interp, kProbesPerPiece);
    rows.push_back(std::move(row));
  }

  for (std::size_t k = 1; k < rows.size(); ++k) {
    rows[k].detect_order = ratio_order(rows[k - 1].detect_error, rows[k].detect_error);
    rows[k].interp_order = ratio_order(rows[k - 1].interp_error, rows[k].interp_error);
  }
  return rows;
}

}  // namespace enosr
