#include "qftlm/matrix_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qftlm {

void write_complex_matrix(std::ostream& out, const Eigen::MatrixXcd& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto v = m(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
            if (j > 0) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

Eigen::MatrixXcd read_complex_matrix(std::istream& in) {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
        throw std::runtime_error("read_complex_matrix: bad header");
    }
    Eigen::MatrixXcd m(rows, cols);
    std::string cell;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> cell)) {
                throw std::runtime_error("read_complex_matrix: truncated data");
            }
            const auto comma = cell.find(',');
            if (comma == std::string::npos) {
                throw std::runtime_error("read_complex_matrix: entry is not re,im");
            }
            m(i, j) = {std::stod(cell.substr(0, comma)), std::stod(cell.substr(comma + 1))};
        }
    }
    return m;
}

} // namespace qftlm
