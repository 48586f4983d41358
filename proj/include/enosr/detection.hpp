#ifndef ENOSR_DETECTION_HPP
#define ENOSR_DETECTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "enosr/samples.hpp"

namespace enosr {

enum class Label : char { G = 'G', B = 'B' };

/// Per-interval G/B classification. B marks an interval suspected of
/// containing a corner singularity.
struct LabelSequence {
  std::vector<Label> labels;

  std::size_t size() const { return labels.size(); }
  Label operator[](std::size_t i) const { return labels[i]; }

  /// One character per interval, e.g. "GGBBG".
  std::string to_string() const;

  /// Maximal runs of consecutive B intervals as inclusive [first, last] pairs.
  std::vector<std::pair<std::size_t, std::size_t>> b_runs() const;
};

/// Second-order divided differences d_i = f[x_i, x_{i+1}, x_{i+2}],
/// i = 0 .. node_count-3, computed by the nonuniform closed form.
struct SecondDifferences {
  std::vector<double> d;
};

/// Throws TooFewNodes below 3 nodes.
SecondDifferences second_differences(const Samples& s);

/// Two-rule corner detector. With d_i the second differences:
///   rule 1: |d_c| > |d_{c+-n}| for n = 1..m  ->  intervals c and c+1 are B;
///   rule 2: |d_i| > |d_{i+n}| for n = 1..m-1 and
///           |d_{i-1}| > |d_{i-1-n}| for n = 1..m-1  ->  interval i is B.
/// All comparisons are strict and untolerated; a rule is evaluated only where
/// every difference it references exists, so intervals near the boundary
/// default to G. B labels from both rules accumulate.
LabelSequence label_intervals(const Samples& s, std::size_t m);

/// Structural check: B-runs of more than 2 intervals, or G-gaps between
/// consecutive B-runs shorter than m-1 intervals, are reported as violations.
struct BRunViolation {
  enum class Kind { RunTooLong, GapTooShort };
  Kind kind;
  std::size_t begin;   // first interval of the offending run or gap
  std::size_t length;
};

struct BRunReport {
  std::vector<BRunViolation> violations;
  bool consistent() const { return violations.empty(); }
};

BRunReport validate_b_runs(const LabelSequence& l, std::size_t m);

/// Critical spacing |[f']| / (4 sup|f''|); below it, detection of the corner
/// interval is guaranteed. Throws NonpositiveSup.
double critical_spacing(double derivative_jump, double second_derivative_sup);

/// Diagnostic for when a corner at mu inside interval j forces the adjacent
/// interval to be marked B as well:
///   (x_{j+1}-mu)/(h_j+h_{j+1}) - (mu-x_j)/(h_{j+1}+h_{j+2}) > 1/4
/// or the mirrored inequality. Requires both neighbor spacings to exist.
bool adjacency_condition(const Grid& g, std::size_t j, double mu);

}  // namespace enosr

#endif
