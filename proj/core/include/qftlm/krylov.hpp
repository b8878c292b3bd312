#pragma once

#include "qftlm/evolution.hpp"
#include "qftlm/pauli.hpp"
#include "qftlm/statevector.hpp"

#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace qftlm {

/// Distinct time overlaps s_m = <psi0| E(dt)^m |psi0> for m = 0 .. 2d+1.
/// Because the backward circuit is the exact adjoint of the forward one,
/// these 2d+2 values determine the whole Gram matrix and projected
/// time-evolution operator of the D = 2d+1 Krylov basis.
struct OverlapSequence {
    std::vector<std::complex<double>> values; // s_0 .. s_{2d+1}
    int half_width = 0;                       // d
    double dt = 0.0;
    std::string evolution;

    int krylov_dim() const { return 2 * half_width + 1; }
};

/// Gram matrix S and projected single-step evolution U of the Krylov basis
/// |psi^j> = E(dt)^j |psi0>, j = -d .. d. Row/column index 0 corresponds to
/// j = -d; the seed state sits at center().
struct KrylovPair {
    Eigen::MatrixXcd S;
    Eigen::MatrixXcd U;
    int half_width = 0;
    double dt = 0.0;

    int dim() const { return 2 * half_width + 1; }
    int center() const { return half_width; }
};

/// Computes the overlap sequence with a single running state: one forward
/// application of E(dt) per m, 2d+1 applications in total.
OverlapSequence compute_overlaps(const StateVector& psi0, const Propagator& prop,
                                 int half_width);

/// Convenience overload that builds the propagator itself; validates
/// dt <= pi / ||H|| (coefficient-sum bound, or the exact norm when the
/// evolution spec carries a spectrum).
OverlapSequence compute_overlaps(const StateVector& psi0, const PauliHamiltonian& h, double dt,
                                 int half_width, const EvolutionSpec& evolution);

/// Fills S[i][j] = s_{j-i} and U[i][j] = s_{j-i+1}, with s_{-m} = conj(s_m).
/// S is Hermitian Toeplitz by construction and U its unit-shifted copy.
KrylovPair assemble(const OverlapSequence& s);

/// Column <psi^j| O |psi0> for j = -d .. d (entry index j + d). O is applied
/// to psi0 once; psi0 is evolved to each psi^j.
Eigen::VectorXcd observable_column(const StateVector& psi0, const Propagator& prop,
                                   int half_width, const PauliHamiltonian& observable);

/// Text serialization of a KrylovPair (header, then S and U in the
/// complex-matrix format) for offline inspection and noise replays.
void save_krylov_pair(std::ostream& out, const KrylovPair& pair);
KrylovPair load_krylov_pair(std::istream& in);

} // namespace qftlm
