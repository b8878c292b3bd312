#include "qftlm/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qftlm {

namespace {

void check_qubits(int qubits) {
    if (qubits < 1 || qubits > 30) {
        throw std::invalid_argument("StateVector: qubit count out of range [1, 30]");
    }
}

} // namespace

StateVector::StateVector(int qubits) : qubits_(qubits) {
    check_qubits(qubits);
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << qubits);
    amps_(0) = 1.0;
}

StateVector::StateVector(int qubits, Eigen::VectorXcd amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
    check_qubits(qubits);
    if (amps_.size() != (Eigen::Index{1} << qubits)) {
        throw std::invalid_argument("StateVector: amplitude count is not 2^qubits");
    }
}

StateVector StateVector::basis_state(int qubits, std::uint64_t index) {
    check_qubits(qubits);
    if (index >= (std::uint64_t{1} << qubits)) {
        throw std::invalid_argument("StateVector: basis index out of range");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << qubits);
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(qubits, std::move(amps));
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    return a.amplitudes().dot(b.amplitudes()); // Eigen conjugates the left factor
}

StateVector hutchinson_from_phases(int qubits, std::span<const double> phases) {
    check_qubits(qubits);
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (std::cmp_not_equal(phases.size(), dim)) {
        throw std::invalid_argument("hutchinson_from_phases: need one phase per basis state");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double phi = phases[static_cast<std::size_t>(k)];
        amps(k) = std::complex<double>(std::cos(phi) * scale, -std::sin(phi) * scale);
    }
    return StateVector(qubits, std::move(amps));
}

StateVector sample_hutchinson(int qubits, RandomSource& rng) {
    check_qubits(qubits);
    const std::size_t dim = std::size_t{1} << qubits;
    std::vector<double> phases(dim);
    for (auto& phi : phases) phi = rng.phase();
    return hutchinson_from_phases(qubits, phases);
}

StateVector apply(const PauliHamiltonian& h, const StateVector& psi) {
    if (h.sites() != psi.qubits()) {
        throw std::invalid_argument("apply: Hamiltonian and state dimensions differ");
    }
    const Eigen::VectorXcd& in = psi.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    const std::uint64_t dim = static_cast<std::uint64_t>(in.size());
    constexpr std::complex<double> iu(0.0, 1.0);
    for (const auto& term : h.terms()) {
        const std::uint64_t flips = term.string.flip_mask();
        const std::uint64_t phases = term.string.phase_mask();
        std::complex<double> prefactor = term.coefficient;
        for (int y = 0; y < term.string.y_count(); ++y) prefactor *= iu;
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(b & phases) % 2 == 0) ? 1.0 : -1.0;
            out(static_cast<Eigen::Index>(b ^ flips)) +=
                prefactor * sign * in(static_cast<Eigen::Index>(b));
        }
    }
    return StateVector(psi.qubits(), std::move(out));
}

} // namespace qftlm
