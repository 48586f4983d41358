#include <doctest.h>

#include <cmath>
#include <limits>

#include "enosr/grid.hpp"
#include "support.hpp"

using namespace enosr;

TEST_CASE("build_grid computes spacing statistics") {
  const Grid g({0.0, 1.0, 2.0, 3.0});
  CHECK(g.min_spacing() == 1.0);
  CHECK(g.max_spacing() == 1.0);
  CHECK(g.spacing_ratio() == 1.0);
  CHECK(g.interval_count() == 3);

  const Grid q({0.0, 0.1, 0.3});
  CHECK(q.min_spacing() == doctest::Approx(0.1));
  CHECK(q.max_spacing() == doctest::Approx(0.2));
  CHECK(q.spacing_ratio() == doctest::Approx(2.0));
}

TEST_CASE("build_grid rejects degenerate node sequences") {
  CHECK_THROWS_AS(build_grid({0.0, 0.0, 1.0}), NonMonotonicNodes);
  CHECK_THROWS_AS(build_grid({0.0, -1.0}), NonMonotonicNodes);
  CHECK_THROWS_AS(build_grid({0.5}), TooFewNodes);
  CHECK_THROWS_AS(build_grid({}), TooFewNodes);
}

TEST_CASE("refine_dyadic inserts midpoints") {
  const Grid g = refine_dyadic(Grid({0.0, 1.0}));
  REQUIRE(g.node_count() == 3);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(1) == 0.5);
  CHECK(g.node(2) == 1.0);

  const Grid q = refine_dyadic(Grid({0.0, 0.1, 0.3}));
  REQUIRE(q.node_count() == 5);
  CHECK(q.node(1) == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(q.node(3) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("refine_dyadic keeps input nodes and halves the spacing") {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g = generate_quasi_uniform(5 + static_cast<std::size_t>(eng() % 30), -1.0, 1.0,
                                          1.0 + 2.0 * testsupport::unit(eng), eng());
    const Grid r = refine_dyadic(g);
    REQUIRE(r.node_count() == 2 * g.node_count() - 1);
    for (std::size_t i = 0; i < g.node_count(); ++i) CHECK(r.node(2 * i) == g.node(i));

    // midpoints are exact to a couple of roundings of node-sized quantities
    const double mid_tol = std::ldexp(1.0, -50);
    for (std::size_t i = 0; i + 1 < g.node_count(); ++i) {
      const double exact = 0.5 * g.node(i) + 0.5 * g.node(i + 1);
      CHECK(std::abs(r.node(2 * i + 1) - exact) <=
            mid_tol * std::max(std::abs(exact), g.spacing(i)));
    }

    // the node-magnitude rounding of each midpoint enters the spacings as an
    // absolute eps*|x| term, so the statistics carry eps*|x|/h relatively
    const double eps = std::numeric_limits<double>::epsilon();
    const double node_scale = std::max(std::abs(g.front()), std::abs(g.back()));
    const double stat_tol = 4.0 * eps * (node_scale / g.min_spacing() + 1.0);
    CHECK(std::abs(r.max_spacing() - 0.5 * g.max_spacing()) <=
          stat_tol * (0.5 * g.max_spacing()));
    CHECK(std::abs(r.spacing_ratio() - g.spacing_ratio()) <= stat_tol * g.spacing_ratio());
  }
}

TEST_CASE("generate_quasi_uniform hits the endpoints and the ratio bound") {
  const Grid single = generate_quasi_uniform(1, 0.0, 1.0, 3.0, 42);
  REQUIRE(single.node_count() == 2);
  CHECK(single.front() == 0.0);
  CHECK(single.back() == 1.0);

  const Grid g = generate_quasi_uniform(21, -1.0, 1.0, 2.0, 7);
  REQUIRE(g.node_count() == 22);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 1.0);
  CHECK(g.spacing_ratio() <= 2.0 * (1.0 + 1e-12));

  const Grid uniform = generate_quasi_uniform(10, -1.0, 1.0, 1.0, 123);
  for (std::size_t i = 0; i < uniform.interval_count(); ++i)
    CHECK(uniform.spacing(i) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(uniform.spacing_ratio() <= 1.0 + 1e-14);
}

TEST_CASE("generate_quasi_uniform is reproducible and validates sigma") {
  const Grid a = generate_quasi_uniform(17, 0.0, 2.0, 1.3, 99);
  const Grid b = generate_quasi_uniform(17, 0.0, 2.0, 1.3, 99);
  REQUIRE(a.node_count() == b.node_count());
  for (std::size_t i = 0; i < a.node_count(); ++i) CHECK(a.node(i) == b.node(i));

  const Grid c = generate_quasi_uniform(17, 0.0, 2.0, 1.3, 100);
  bool any_differ = false;
  for (std::size_t i = 0; i < c.node_count(); ++i) any_differ |= c.node(i) != a.node(i);
  CHECK(any_differ);

  CHECK_THROWS_AS(generate_quasi_uniform(5, 0.0, 1.0, 0.9, 1), InvalidSigma);
  CHECK_THROWS_AS(generate_quasi_uniform(0, 0.0, 1.0, 1.5, 1), TooFewNodes);
}

TEST_CASE("is_n_local_sigma windows") {
  const Grid uniform = generate_quasi_uniform(8, 0.0, 1.0, 1.0, 5);
  CHECK(is_n_local_sigma(uniform, 3, 1.0 + 1e-12));

  const Grid g({0.0, 1.0, 1.1, 2.1});
  CHECK_FALSE(is_n_local_sigma(g, 2, 1.5));
  CHECK(is_n_local_sigma(g, 1, 1.0));  // single-spacing windows always pass

  // window of all spacings is equivalent to the global ratio bound
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Grid r = generate_quasi_uniform(6 + eng() % 20, 0.0, 1.0, 1.8, eng());
    const double ratio = r.spacing_ratio();
    CHECK(is_n_local_sigma(r, r.interval_count(), ratio * (1 + 1e-13)));
    CHECK_FALSE(is_n_local_sigma(r, r.interval_count(), ratio * (1 - 1e-6)));
  }
}

TEST_CASE("interval_containing locates points") {
  const Grid g({0.0, 0.5, 2.0});
  CHECK(g.interval_containing(0.0) == 0);
  CHECK(g.interval_containing(0.25) == 0);
  CHECK(g.interval_containing(0.5) == 0);  // ties go left
  CHECK(g.interval_containing(1.0) == 1);
  CHECK(g.interval_containing(2.0) == 1);
  CHECK_THROWS_AS(g.interval_containing(2.5), OutOfDomain);
}
