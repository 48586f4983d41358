#ifndef ENOSR_CSV_HPP
#define ENOSR_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "enosr/convergence.hpp"
#include "enosr/samples.hpp"

namespace enosr {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Node file: header "x", one node per row. Rejects non-monotone input.
Grid read_grid_csv(std::istream& in);
void write_grid_csv(std::ostream& out, const Grid& g);

/// Samples file: header "x,f", strictly increasing x.
Samples read_samples_csv(std::istream& in);
void write_samples_csv(std::ostream& out, const Samples& s);

/// Evaluation output: header "x,y".
void write_xy_csv(std::ostream& out, std::span<const double> x, std::span<const double> y);

/// Study output: header "d,k,h_max,e_k,p_k,E_k,P_k"; undefined cells are
/// left empty.
void write_convergence_header(std::ostream& out);
void write_convergence_rows(std::ostream& out, double d, std::span<const ConvergenceRow> rows);

}  // namespace enosr

#endif
