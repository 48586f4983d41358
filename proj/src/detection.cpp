#include "enosr/detection.hpp"

#include <cmath>

namespace enosr {

std::string LabelSequence::to_string() const {
  std::string out(labels.size(), 'G');
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = static_cast<char>(labels[i]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> LabelSequence::b_runs() const {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i] == Label::B) {
      std::size_t first = i;
      while (i + 1 < labels.size() && labels[i + 1] == Label::B) ++i;
      runs.emplace_back(first, i);
    }
    ++i;
  }
  return runs;
}

SecondDifferences second_differences(const Samples& s) {
  const std::size_t nodes = s.grid.node_count();
  if (nodes < 3) throw TooFewNodes("second differences need at least 3 nodes");
  SecondDifferences out;
  out.d.resize(nodes - 2);
  for (std::size_t i = 0; i + 2 < nodes; ++i) {
    const double w0 = s.grid.spacing(i);
    const double w1 = s.grid.spacing(i + 1);
    out.d[i] = s.values[i] / (w0 * (w0 + w1)) - s.values[i + 1] / (w0 * w1) +
               s.values[i + 2] / (w1 * (w0 + w1));
  }
  return out;
}

LabelSequence label_intervals(const Samples& s, std::size_t m) {
  if (m < 2) throw IndexOutOfRange("detection order m must be >= 2");
  const std::size_t intervals = s.grid.interval_count();
  if (s.grid.node_count() < 3) throw TooFewNodes();

  const std::vector<double>& d = second_differences(s).d;
  const std::size_t M = d.size();

  LabelSequence seq;
  seq.labels.assign(intervals, Label::G);

  // Rule 1: a strict local maximum of |d| over the +-m window marks the two
  // intervals spanned by that difference.
  for (std::size_t c = m; c + m < M; ++c) {
    const double dc = std::abs(d[c]);
    bool dominant = true;
    for (std::size_t n = 1; n <= m && dominant; ++n)
      dominant = dc > std::abs(d[c - n]) && dc > std::abs(d[c + n]);
    if (dominant) {
      seq.labels[c] = Label::B;
      seq.labels[c + 1] = Label::B;
    }
  }

  // Rule 2: one-sided dominance from the two differences flanking interval i.
  for (std::size_t i = m; i + m <= M; ++i) {
    const double right = std::abs(d[i]);
    const double left = std::abs(d[i - 1]);
    bool dominant = true;
    for (std::size_t n = 1; n + 1 <= m && dominant; ++n)
      dominant = right > std::abs(d[i + n]) && left > std::abs(d[i - 1 - n]);
    if (dominant) seq.labels[i] = Label::B;
  }

  return seq;
}

BRunReport validate_b_runs(const LabelSequence& l, std::size_t m) {
  BRunReport report;
  const auto runs = l.b_runs();
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const std::size_t length = runs[r].second - runs[r].first + 1;
    if (length > 2)
      report.violations.push_back({BRunViolation::Kind::RunTooLong, runs[r].first, length});
    if (r > 0) {
      const std::size_t gap_begin = runs[r - 1].second + 1;
      const std::size_t gap = runs[r].first - gap_begin;
      if (gap + 1 < m)
        report.violations.push_back({BRunViolation::Kind::GapTooShort, gap_begin, gap});
    }
  }
  return report;
}

double critical_spacing(double derivative_jump, double second_derivative_sup) {
  if (!(second_derivative_sup > 0.0)) throw NonpositiveSup();
  return std::abs(derivative_jump) / (4.0 * second_derivative_sup);
}

bool adjacency_condition(const Grid& g, std::size_t j, double mu) {
  if (j < 1 || j + 2 > g.interval_count())
    throw IndexOutOfRange("adjacency condition needs both neighbor spacings");
  if (!(g.node(j) <= mu && mu <= g.node(j + 1)))
    throw OutOfDomain("mu must lie inside interval j");
  const double left_part = (g.node(j + 1) - mu) / (g.spacing(j - 1) + g.spacing(j));
  const double right_part = (mu - g.node(j)) / (g.spacing(j) + g.spacing(j + 1));
  return left_part - right_part > 0.25 || right_part - left_part > 0.25;
}

}  // namespace enosr
