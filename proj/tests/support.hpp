#ifndef ENOSR_TESTS_SUPPORT_HPP
#define ENOSR_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "enosr/corner_function.hpp"
#include "enosr/samples.hpp"

namespace testsupport {

// Engine-direct uniform draws keep test data identical across platforms.
inline double unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * unit(eng);
}

// Monomial-basis evaluation, independent of the Newton-form code under test.
inline double eval_monomial(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
  return v;
}

inline std::vector<double> random_coeffs(std::mt19937_64& eng, std::size_t count) {
  std::vector<double> c(count);
  for (double& v : c) v = uniform(eng, -1.0, 1.0);
  return c;
}

// One-corner fuzz family: a sine plus a derivative kink of size `jump` at mu.
// The reported |f''| bound uses amp * freq^2, which dominates the true sup,
// so spacings below the resulting critical value stay below the true one.
struct CornerInstance {
  enosr::CornerFunction f;
  double critical_spacing;
};

inline CornerInstance make_corner_instance(double amp, double freq, double phase, double jump,
                                           double mu) {
  const double sup_f2 = amp * freq * freq;
  auto eval = [=](double x) {
    const double kink = x > mu ? jump * (x - mu) : 0.0;
    return amp * std::sin(freq * x + phase) + kink;
  };
  return {enosr::CornerFunction{std::move(eval), mu, jump, sup_f2, 4},
          std::abs(jump) / (4.0 * sup_f2)};
}

// Literal transcription of the two labeling rules, used as an independent
// oracle against the production labeler. Second differences come from the
// recursive definition rather than the closed form.
inline std::vector<char> brute_force_labels(const enosr::Samples& s, std::size_t m) {
  const std::ptrdiff_t n_int = static_cast<std::ptrdiff_t>(s.grid.interval_count());
  const std::ptrdiff_t n_dd = n_int - 1;
  std::vector<double> dd(static_cast<std::size_t>(n_dd));
  for (std::ptrdiff_t i = 0; i < n_dd; ++i) {
    const double f01 = (s.values[i + 1] - s.values[i]) / (s.grid.node(i + 1) - s.grid.node(i));
    const double f12 =
        (s.values[i + 2] - s.values[i + 1]) / (s.grid.node(i + 2) - s.grid.node(i + 1));
    dd[static_cast<std::size_t>(i)] = (f12 - f01) / (s.grid.node(i + 2) - s.grid.node(i));
  }
  const auto D = [&](std::ptrdiff_t i) { return std::abs(dd[static_cast<std::size_t>(i)]); };
  const auto in_range = [&](std::ptrdiff_t i) { return i >= 0 && i < n_dd; };

  std::vector<char> labels(static_cast<std::size_t>(n_int), 'G');
  const std::ptrdiff_t M = static_cast<std::ptrdiff_t>(m);
  for (std::ptrdiff_t i = 0; i < n_int; ++i) {
    // rule 1 fires on the difference index i-1
    bool ok = in_range(i - 1 - M) && in_range(i - 1 + M) && i < n_int;
    for (std::ptrdiff_t n = 1; ok && n <= M; ++n)
      ok = D(i - 1) > D(i - 1 - n) && D(i - 1) > D(i - 1 + n);
    if (ok) {
      labels[static_cast<std::size_t>(i - 1)] = 'B';
      labels[static_cast<std::size_t>(i)] = 'B';
    }
    // rule 2
    ok = in_range(i - 1 - (M - 1)) && in_range(i + (M - 1)) && in_range(i) && in_range(i - 1);
    for (std::ptrdiff_t n = 1; ok && n <= M - 1; ++n)
      ok = D(i) > D(i + n) && D(i - 1) > D(i - 1 - n);
    if (ok) labels[static_cast<std::size_t>(i)] = 'B';
  }
  return labels;
}

}  // namespace testsupport

#endif
