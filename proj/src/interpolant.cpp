#include "enosr/interpolant.hpp"

#include <algorithm>
#include <cmath>

namespace enosr {

Interpolant::Interpolant(Mode mode, std::vector<Piece> pieces, std::vector<SplitPoint> splits,
                         LabelSequence labels, std::vector<std::size_t> fallbacks)
    : mode_(mode),
      pieces_(std::move(pieces)),
      splits_(std::move(splits)),
      labels_(std::move(labels)),
      fallbacks_(std::move(fallbacks)) {
  if (pieces_.empty()) throw TooFewNodes("interpolant needs at least one piece");
}

double Interpolant::operator()(double x) const {
  if (x < domain_lo() || x > domain_hi()) throw OutOfDomain();
  // First piece whose upper bound reaches x: boundary points go to the left
  // piece.
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Piece& p, double v) { return p.hi < v; });
  return it->poly(x);
}

std::optional<double> Interpolant::corner_estimate() const {
  if (mode_ != Mode::EnoSr) throw WrongMode("corner estimates exist only in ENO-SR mode");
  if (splits_.empty()) return std::nullopt;
  const SplitPoint* best = &splits_.front();
  for (const SplitPoint& s : splits_)
    if (s.strength > best->strength) best = &s;
  return best->psi;
}

IndexRange eno_stencil(const Samples& s, std::size_t interval, std::size_t m) {
  const std::size_t nodes = s.grid.node_count();
  if (m < 2) throw StencilOutOfRange("ENO stencil needs m >= 2");
  if (interval + 1 >= nodes) throw IndexOutOfRange("interval index out of range");
  if (nodes < m) throw StencilOutOfRange("fewer nodes than stencil points");

  std::size_t begin = interval;
  std::size_t end = interval + 2;  // current stencil [begin, end)
  for (std::size_t grown = 2; grown < m; ++grown) {
    const bool can_left = begin > 0;
    const bool can_right = end < nodes;
    bool go_left;
    if (can_left && can_right) {
      const double left_dd = std::abs(divided_difference(s, begin - 1, grown));
      const double right_dd = std::abs(divided_difference(s, begin, grown));
      go_left = left_dd <= right_dd;  // ties extend left
    } else {
      go_left = can_left;
    }
    if (go_left)
      --begin;
    else
      ++end;
  }
  return {begin, end};
}

namespace {

IndexRange fixed_stencil(std::size_t interval, std::size_t m, std::size_t nodes) {
  const std::size_t left_points = (m + 1) / 2;  // ceil(m/2) points at or left of x_i
  std::ptrdiff_t begin = static_cast<std::ptrdiff_t>(interval) + 1 -
                         static_cast<std::ptrdiff_t>(left_points);
  begin = std::clamp<std::ptrdiff_t>(begin, 0,
                                     static_cast<std::ptrdiff_t>(nodes - m));
  return {static_cast<std::size_t>(begin), static_cast<std::size_t>(begin) + m};
}

struct SrPlan {
  NewtonPoly left;
  NewtonPoly right;
  double psi;
};

// Attempts the subcell-resolution construction for a maximal B-run
// [first, last]. Absence means the caller must fall back to G.
std::optional<SrPlan> plan_subcell(const Samples& s, std::size_t first, std::size_t last,
                                   std::size_t m) {
  const std::size_t run = last - first + 1;
  if (run > 2) return std::nullopt;
  const std::size_t nodes = s.grid.node_count();

  // Left polynomial ends at x_first; right polynomial starts just past the
  // run (x_{first+1} for an isolated B, x_{first+2} for a pair).
  if (first + 1 < m) return std::nullopt;
  const std::size_t left_begin = first + 1 - m;
  const std::size_t right_begin = last + 1;
  if (right_begin + m > nodes) return std::nullopt;

  NewtonPoly left = fit_newton(s, left_begin, m);
  NewtonPoly right = fit_newton(s, right_begin, m);

  const double lo = s.grid.node(first);
  const double hi = s.grid.node(last + 1);
  const std::optional<double> psi = intersect_on_interval(left, right, lo, hi);
  if (!psi || !(*psi > lo && *psi < hi)) return std::nullopt;
  return SrPlan{std::move(left), std::move(right), *psi};
}

}  // namespace

Interpolant build_interpolant(const Samples& s, std::size_t m, Mode mode) {
  const std::size_t nodes = s.grid.node_count();
  const std::size_t intervals = s.grid.interval_count();
  if (m < 2) throw StencilOutOfRange("interpolation needs m >= 2");
  if (mode != Mode::FixedLagrange && mode != Mode::Eno && mode != Mode::EnoSr)
    throw InvalidMode();
  if (nodes < m) throw TooFewNodes("need at least m nodes");
  if (mode == Mode::EnoSr && nodes < 2 * m + 2)
    throw TooFewNodes("ENO-SR needs at least 2m+2 nodes");

  const auto smooth_piece = [&](std::size_t i) -> Piece {
    const IndexRange r = mode == Mode::FixedLagrange ? fixed_stencil(i, m, nodes)
                                                     : eno_stencil(s, i, m);
    return Piece{s.grid.node(i), s.grid.node(i + 1), fit_newton(s, r.begin, r.length())};
  };

  std::vector<Piece> pieces;
  std::vector<SplitPoint> splits;
  std::vector<std::size_t> fallbacks;
  LabelSequence labels;

  if (mode != Mode::EnoSr) {
    pieces.reserve(intervals);
    for (std::size_t i = 0; i < intervals; ++i) pieces.push_back(smooth_piece(i));
    return Interpolant(mode, std::move(pieces), {}, {}, {});
  }

  labels = label_intervals(s, m);
  const std::vector<double> dd = second_differences(s).d;
  const auto run_strength = [&](std::size_t first, std::size_t last) {
    double strongest = 0.0;
    for (std::size_t j = first > 0 ? first - 1 : 0; j <= last && j < dd.size(); ++j)
      strongest = std::max(strongest, std::abs(dd[j]));
    return strongest;
  };

  std::size_t i = 0;
  while (i < intervals) {
    if (labels[i] != Label::B) {
      pieces.push_back(smooth_piece(i));
      ++i;
      continue;
    }
    std::size_t last = i;
    while (last + 1 < intervals && labels[last + 1] == Label::B) ++last;

    if (auto plan = plan_subcell(s, i, last, m)) {
      const double lo = s.grid.node(i);
      const double hi = s.grid.node(last + 1);
      pieces.push_back(Piece{lo, plan->psi, std::move(plan->left)});
      pieces.push_back(Piece{plan->psi, hi, std::move(plan->right)});
      splits.push_back({plan->psi, pieces.size() - 2, pieces.size() - 1, run_strength(i, last)});
    } else {
      for (std::size_t k = i; k <= last; ++k) {
        fallbacks.push_back(k);
        pieces.push_back(smooth_piece(k));
      }
    }
    i = last + 1;
  }
  return Interpolant(mode, std::move(pieces), std::move(splits), std::move(labels),
                     std::move(fallbacks));
}

}  // namespace enosr
