#ifndef ENOSR_INTERPOLANT_HPP
#define ENOSR_INTERPOLANT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "enosr/detection.hpp"
#include "enosr/newton.hpp"

namespace enosr {

enum class Mode { FixedLagrange, Eno, EnoSr };

/// Half-open node index range [begin, end) of an interpolation stencil.
struct IndexRange {
  std::size_t begin;
  std::size_t end;
  std::size_t length() const { return end - begin; }
  bool operator==(const IndexRange&) const = default;
};

/// One polynomial piece over [lo, hi].
struct Piece {
  double lo;
  double hi;
  NewtonPoly poly;
};

/// Location where two one-sided polynomials were joined inside a B interval
/// or B-pair. strength is the largest second-difference magnitude touching
/// the run, the detector's own response size.
struct SplitPoint {
  double psi;
  std::size_t left_piece;
  std::size_t right_piece;
  double strength;
};

/// Piecewise polynomial over the grid hull. Pieces tile [x_0, x_N] exactly;
/// in ENO-SR mode a detected corner replaces the suspect interval (or pair)
/// by two one-sided extrapolating polynomials split at psi.
class Interpolant {
 public:
  Interpolant(Mode mode, std::vector<Piece> pieces, std::vector<SplitPoint> splits,
              LabelSequence labels, std::vector<std::size_t> fallbacks);

  /// Value of the piece containing x; at a shared piece boundary the left
  /// piece wins. Throws OutOfDomain outside [x_0, x_N].
  double operator()(double x) const;

  /// Estimated corner location psi when an ENO-SR split was made, absent on
  /// smooth data. With several splits (false positives away from the corner
  /// can survive the intersection step) the strongest one wins: below the
  /// critical spacing the corner's second difference dominates every smooth
  /// one, so this picks the true corner. Throws WrongMode for other modes.
  std::optional<double> corner_estimate() const;

  Mode mode() const { return mode_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<SplitPoint>& splits() const { return splits_; }

  /// Detection labels the build started from (ENO-SR mode; empty otherwise).
  const LabelSequence& labels_used() const { return labels_; }

  /// Intervals relabeled G at build time (failed intersection, stencil out of
  /// range, or an overlong B-run).
  const std::vector<std::size_t>& fallback_intervals() const { return fallbacks_; }

  double domain_lo() const { return pieces_.front().lo; }
  double domain_hi() const { return pieces_.back().hi; }

 private:
  Mode mode_;
  std::vector<Piece> pieces_;
  std::vector<SplitPoint> splits_;
  LabelSequence labels_;
  std::vector<std::size_t> fallbacks_;
};

/// Hierarchical ENO stencil of m nodes for interval i: starting from
/// {x_i, x_{i+1}}, each step keeps whichever one-node extension (left or
/// right) has the smaller absolute divided difference at the grown order,
/// extending left on ties and clamping at the array ends.
IndexRange eno_stencil(const Samples& s, std::size_t interval, std::size_t m);

/// Assembles the interpolant for the requested mode:
///  - FixedLagrange: the centered fixed stencil with ceil(m/2) points at or
///    left of x_i, clamped at the boundaries;
///  - Eno: the ENO stencil per interval;
///  - EnoSr: ENO plus subcell resolution on every detected B interval or
///    B-pair, falling back to G where the one-sided polynomials do not
///    intersect uniquely or would need nodes outside the grid.
Interpolant build_interpolant(const Samples& s, std::size_t m, Mode mode);

}  // namespace enosr

#endif
