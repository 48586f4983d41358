#include "enosr/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace enosr {

NewtonPoly::NewtonPoly(std::vector<double> stencil_nodes, std::vector<double> coeffs)
    : nodes_(std::move(stencil_nodes)), coeffs_(std::move(coeffs)) {
  if (nodes_.empty() || nodes_.size() != coeffs_.size())
    throw StencilOutOfRange("stencil nodes and coefficients must match and be nonempty");
}

double NewtonPoly::operator()(double x) const {
  const std::size_t m = coeffs_.size();
  double v = coeffs_[m - 1];
  for (std::size_t k = m - 1; k-- > 0;) v = v * (x - nodes_[k]) + coeffs_[k];
  return v;
}

namespace {

// Full divided-difference tableau over [start, start+length); returns the
// top row f[x_start], f[x_start,x_{start+1}], ...
std::vector<double> dd_coefficients(const Samples& s, std::size_t start, std::size_t length) {
  std::vector<double> t(s.values.begin() + static_cast<std::ptrdiff_t>(start),
                        s.values.begin() + static_cast<std::ptrdiff_t>(start + length));
  std::vector<double> out(length);
  out[0] = t[0];
  for (std::size_t level = 1; level < length; ++level) {
    for (std::size_t j = 0; j + level < length; ++j)
      t[j] = (t[j + 1] - t[j]) / (s.grid.node(start + j + level) - s.grid.node(start + j));
    out[level] = t[0];
  }
  return out;
}

}  // namespace

double divided_difference(const Samples& s, std::size_t start, std::size_t order) {
  if (start + order >= s.grid.node_count())
    throw StencilOutOfRange("divided difference needs nodes up to index " +
                            std::to_string(start + order));
  return dd_coefficients(s, start, order + 1).back();
}

NewtonPoly fit_newton(const Samples& s, std::size_t start, std::size_t length) {
  if (length < 1 || start + length > s.grid.node_count())
    throw StencilOutOfRange("stencil [" + std::to_string(start) + ", " +
                            std::to_string(start + length) + ") exceeds node range");
  std::vector<double> nodes(s.grid.nodes().begin() + static_cast<std::ptrdiff_t>(start),
                            s.grid.nodes().begin() + static_cast<std::ptrdiff_t>(start + length));
  return NewtonPoly(std::move(nodes), dd_coefficients(s, start, length));
}

namespace {

constexpr int kIntersectProbes = 64;
constexpr double kZeroTolerance = 1e-13;

int probe_sign(double q, double scale) {
  if (std::abs(q) <= kZeroTolerance * scale) return 0;
  return q > 0.0 ? 1 : -1;
}

}  // namespace

std::optional<double> intersect_on_interval(const NewtonPoly& p_left, const NewtonPoly& p_right,
                                            double lo, double hi) {
  if (!(lo < hi)) return std::nullopt;
  const auto q = [&](double x) { return p_right(x) - p_left(x); };

  double t[kIntersectProbes];
  double v[kIntersectProbes];
  double scale = std::numeric_limits<double>::min();
  for (int i = 0; i < kIntersectProbes; ++i) {
    t[i] = lo + (hi - lo) * (static_cast<double>(i) / (kIntersectProbes - 1));
    v[i] = q(t[i]);
    scale = std::max(scale, std::abs(v[i]));
  }

  // Count sign changes among the nonzero probe values; exactly one change
  // identifies the bracket, anything else is ambiguous and reported absent.
  int changes = 0;
  int prev_sign = 0, prev_idx = -1;
  int bracket_lo = -1, bracket_hi = -1;
  for (int i = 0; i < kIntersectProbes; ++i) {
    const int s = probe_sign(v[i], scale);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      ++changes;
      bracket_lo = prev_idx;
      bracket_hi = i;
    }
    prev_sign = s;
    prev_idx = i;
  }
  if (changes != 1) return std::nullopt;

  double a = t[bracket_lo], b = t[bracket_hi];
  double fa = v[bracket_lo];
  const double width_tol = std::ldexp(hi - lo, -48);
  while (b - a > width_tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket is already one ulp wide
    const double fm = q(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace enosr
