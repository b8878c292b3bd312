#pragma once

#include <Eigen/Core>

namespace qftlm {

/// Dense eigendecomposition of a Hamiltonian: energies ascending,
/// eigenvectors as columns of a unitary matrix.
struct Spectrum {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd eigenvectors;

    Eigen::Index dim() const { return energies.size(); }
    double ground_energy() const { return energies(0); }
    double spectral_norm() const {
        return std::max(std::abs(energies(0)), std::abs(energies(energies.size() - 1)));
    }
};

} // namespace qftlm
