#include "enosr/corner_function.hpp"

#include <cmath>
#include <numbers>

namespace enosr {

CornerFunction make_fd(double d) {
  const double mu = std::numbers::pi / 8.0;
  auto eval = [d, mu](double x) {
    const double smooth = std::cos(std::numbers::pi * x / 2.0);
    if (x <= mu) return (x - mu) * (x - mu) + d * (x - mu) + smooth;
    return smooth;
  };
  return CornerFunction{std::move(eval), mu, -d, 2.0, 4};
}

}  // namespace enosr
