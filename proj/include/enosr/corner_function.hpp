#ifndef ENOSR_CORNER_FUNCTION_HPP
#define ENOSR_CORNER_FUNCTION_HPP

#include <cstddef>
#include <functional>

namespace enosr {

/// Continuous test function with (at most) one corner: a finite jump in the
/// first derivative at `corner`, smooth with bounded derivatives elsewhere.
struct CornerFunction {
  std::function<double(double)> evaluate;
  double corner;                // mu
  double derivative_jump;       // f'(mu+) - f'(mu-)
  double second_derivative_sup; // bound on |f''| away from the corner
  std::size_t smooth_order;     // highest derivative bounded away from the corner
};

/// The parametrized experiment family on [-1, 1]:
///   (x - pi/8)^2 + d (x - pi/8) + cos(pi x / 2)   for x <= pi/8,
///   cos(pi x / 2)                                 for x >  pi/8.
/// Corner at pi/8 with derivative jump -d; the reference |f''| bound is 2,
/// giving the critical spacing d/8.
CornerFunction make_fd(double d);

}  // namespace enosr

#endif
