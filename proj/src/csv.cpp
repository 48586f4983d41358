#include "enosr/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace enosr {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_field(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw CsvError("line " + std::to_string(line_no) + ": cannot parse number '" + field + "'");
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void expect_header(std::istream& in, const std::string& expected) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty input");
  if (strip_cr(line) != expected)
    throw CsvError("expected header '" + expected + "', got '" + strip_cr(line) + "'");
}

}  // namespace

Grid read_grid_csv(std::istream& in) {
  expect_header(in, "x");
  std::vector<double> nodes;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    nodes.push_back(parse_field(line, line_no));
  }
  try {
    return Grid(std::move(nodes));
  } catch (const TooFewNodes&) {
    throw CsvError("grid file needs at least 2 nodes");
  }
}

void write_grid_csv(std::ostream& out, const Grid& g) {
  out << "x\n";
  for (double x : g.nodes()) out << format_double(x) << "\n";
}

Samples read_samples_csv(std::istream& in) {
  expect_header(in, "x,f");
  std::vector<double> nodes, values;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2)
      throw CsvError("line " + std::to_string(line_no) + ": expected two fields");
    nodes.push_back(parse_field(fields[0], line_no));
    values.push_back(parse_field(fields[1], line_no));
  }
  try {
    return Samples(Grid(std::move(nodes)), std::move(values));
  } catch (const TooFewNodes&) {
    throw CsvError("samples file needs at least 2 rows");
  }
}

void write_samples_csv(std::ostream& out, const Samples& s) {
  out << "x,f\n";
  for (std::size_t i = 0; i < s.grid.node_count(); ++i)
    out << format_double(s.grid.node(i)) << "," << format_double(s.values[i]) << "\n";
}

void write_xy_csv(std::ostream& out, std::span<const double> x, std::span<const double> y) {
  out << "x,y\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    out << format_double(x[i]) << "," << format_double(y[i]) << "\n";
}

void write_convergence_header(std::ostream& out) { out << "d,k,h_max,e_k,p_k,E_k,P_k\n"; }

void write_convergence_rows(std::ostream& out, double d, std::span<const ConvergenceRow> rows) {
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const ConvergenceRow& r : rows) {
    out << format_double(d) << "," << r.level << "," << format_double(r.h_max) << ","
        << cell(r.detect_error) << "," << cell(r.detect_order) << ","
        << format_double(r.interp_error) << "," << cell(r.interp_order) << "\n";
  }
}

}  // namespace enosr
