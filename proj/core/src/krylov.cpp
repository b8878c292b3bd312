#include "qftlm/krylov.hpp"

#include "qftlm/matrix_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qftlm {

OverlapSequence compute_overlaps(const StateVector& psi0, const Propagator& prop,
                                 int half_width) {
    if (half_width < 0) {
        throw std::invalid_argument("compute_overlaps: negative half width");
    }
    OverlapSequence seq;
    seq.half_width = half_width;
    seq.dt = prop.dt();
    seq.evolution = prop.descriptor();
    seq.values.reserve(static_cast<std::size_t>(2 * half_width + 2));
    seq.values.push_back(inner(psi0, psi0));
    StateVector running = psi0;
    for (int m = 1; m <= 2 * half_width + 1; ++m) {
        prop.forward(running);
        seq.values.push_back(inner(psi0, running));
    }
    return seq;
}

OverlapSequence compute_overlaps(const StateVector& psi0, const PauliHamiltonian& h, double dt,
                                 int half_width, const EvolutionSpec& evolution) {
    const auto prop = make_propagator(h, dt, evolution);
    return compute_overlaps(psi0, *prop, half_width);
}

KrylovPair assemble(const OverlapSequence& s) {
    const int dim = s.krylov_dim();
    if (s.values.size() != static_cast<std::size_t>(2 * s.half_width + 2)) {
        throw std::invalid_argument("assemble: sequence does not cover m = 0 .. 2d+1");
    }
    auto lag = [&s](int m) {
        return m >= 0 ? s.values[static_cast<std::size_t>(m)]
                      : std::conj(s.values[static_cast<std::size_t>(-m)]);
    };
    KrylovPair pair;
    pair.half_width = s.half_width;
    pair.dt = s.dt;
    pair.S.resize(dim, dim);
    pair.U.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            pair.S(i, j) = lag(j - i);
            pair.U(i, j) = lag(j - i + 1);
        }
    }
    return pair;
}

Eigen::VectorXcd observable_column(const StateVector& psi0, const Propagator& prop,
                                   int half_width, const PauliHamiltonian& observable) {
    if (half_width < 0) {
        throw std::invalid_argument("observable_column: negative half width");
    }
    const StateVector obs_psi0 = apply(observable, psi0);
    const int dim = 2 * half_width + 1;
    Eigen::VectorXcd column(dim);
    column(half_width) = inner(psi0, obs_psi0);
    StateVector running = psi0;
    for (int j = 1; j <= half_width; ++j) {
        prop.forward(running);
        column(half_width + j) = inner(running, obs_psi0);
    }
    running = psi0;
    for (int j = 1; j <= half_width; ++j) {
        prop.backward(running);
        column(half_width - j) = inner(running, obs_psi0);
    }
    return column;
}

void save_krylov_pair(std::ostream& out, const KrylovPair& pair) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", pair.dt);
    out << "krylov-pair 1\n";
    out << "half_width " << pair.half_width << '\n';
    out << "dt " << buf << '\n';
    write_complex_matrix(out, pair.S);
    write_complex_matrix(out, pair.U);
}

KrylovPair load_krylov_pair(std::istream& in) {
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "krylov-pair" || version != 1) {
        throw std::runtime_error("load_krylov_pair: unrecognized header");
    }
    KrylovPair pair;
    std::string key;
    if (!(in >> key >> pair.half_width) || key != "half_width") {
        throw std::runtime_error("load_krylov_pair: missing half_width");
    }
    if (!(in >> key >> pair.dt) || key != "dt") {
        throw std::runtime_error("load_krylov_pair: missing dt");
    }
    pair.S = read_complex_matrix(in);
    pair.U = read_complex_matrix(in);
    const int dim = pair.dim();
    if (pair.S.rows() != dim || pair.S.cols() != dim || pair.U.rows() != dim ||
        pair.U.cols() != dim) {
        throw std::runtime_error("load_krylov_pair: matrix dimensions disagree with half_width");
    }
    return pair;
}

} // namespace qftlm
