#ifndef ENOSR_SAMPLES_HPP
#define ENOSR_SAMPLES_HPP

#include <functional>
#include <utility>
#include <vector>

#include "enosr/grid.hpp"

namespace enosr {

/// A grid paired with one function value per node.
struct Samples {
  Grid grid;
  std::vector<double> values;

  Samples(Grid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.node_count())
      throw IndexOutOfRange("one value per grid node required");
  }
};

inline Samples sample_function(const Grid& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) v[i] = f(g.node(i));
  return Samples(g, std::move(v));
}

}  // namespace enosr

#endif
