#pragma once

#include "qftlm/pauli.hpp"
#include "qftlm/random.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <span>

namespace qftlm {

/// Dense complex amplitude vector over the 2^L computational basis states.
/// Operations taking a StateVector by const reference never mutate it;
/// in-place evolution routines take it by mutable reference and are
/// single-owner.
class StateVector {
public:
    /// |0...0>.
    explicit StateVector(int qubits);
    StateVector(int qubits, Eigen::VectorXcd amplitudes);

    static StateVector basis_state(int qubits, std::uint64_t index);

    int qubits() const { return qubits_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Eigen::VectorXcd& amplitudes() { return amps_; }

    double norm() const { return amps_.norm(); }

private:
    int qubits_;
    Eigen::VectorXcd amps_;
};

/// <a|b>, conjugate-linear in a. Throws std::invalid_argument on dimension
/// mismatch.
std::complex<double> inner(const StateVector& a, const StateVector& b);

/// Equal-magnitude superposition with independent uniform random phases:
/// amplitudes e^{-i phi_k} / sqrt(2^L), phi_k ~ U[0, 2pi). An unbiased
/// trace estimator for any fixed operator: E[<psi|A|psi>] = Tr(A)/2^L.
StateVector sample_hutchinson(int qubits, RandomSource& rng);

/// Deterministic variant taking explicit phases (one per basis state);
/// sample_hutchinson draws the phases and defers to this.
StateVector hutchinson_from_phases(int qubits, std::span<const double> phases);

/// H|psi> without forming the dense matrix; O(terms * 2^L).
StateVector apply(const PauliHamiltonian& h, const StateVector& psi);

} // namespace qftlm
