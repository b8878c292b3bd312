#pragma once

#include <Eigen/Core>

#include <iosfwd>

namespace qftlm {

/// Plain-text complex matrix format: a "rows cols" line followed by one
/// line per row of whitespace-separated "re,im" pairs, full double
/// precision.
void write_complex_matrix(std::ostream& out, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_complex_matrix(std::istream& in);

} // namespace qftlm
