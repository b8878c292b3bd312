#pragma once

#include "qftlm/pauli.hpp"
#include "qftlm/spectrum.hpp"
#include "qftlm/statevector.hpp"

#include <memory>
#include <string>

namespace qftlm {

/// One first-order Trotter step: applies exp(-i sign dt H_layer) for each
/// group of mutually commuting terms, diagonal layer first (for the TFIM:
/// the ZZ layer, then the X layer). sign = -1 applies the exact adjoint
/// circuit (reversed layers, negated angles), so a forward step followed by
/// a backward step is the identity to machine precision.
void trotter_step(StateVector& psi, const PauliHamiltonian& h, double dt, int sign);

/// Applies the n_steps-step first-order circuit for one interval of length
/// dt_total, repeated |j| times; j < 0 uses the adjoint circuit, j = 0 is a
/// no-op.
void evolve_trotter(StateVector& psi, const PauliHamiltonian& h, double dt_total,
                    int n_steps, int j);

/// exp(-i H t)|psi> through the dense eigendecomposition of H.
void evolve_exact(StateVector& psi, const Spectrum& spectrum, double t);

/// Single-step time evolution operator E(dt), applied forward or backward.
/// The backward direction is always the exact adjoint of the forward
/// circuit, so overlap sequences keep their Toeplitz structure even under
/// Trotterization.
class Propagator {
public:
    virtual ~Propagator() = default;
    virtual void forward(StateVector& psi) const = 0;
    virtual void backward(StateVector& psi) const = 0;
    virtual double dt() const = 0;
    virtual std::string descriptor() const = 0;
};

class TrotterPropagator final : public Propagator {
public:
    TrotterPropagator(PauliHamiltonian h, double dt, int n_steps);
    void forward(StateVector& psi) const override;
    void backward(StateVector& psi) const override;
    double dt() const override { return dt_; }
    std::string descriptor() const override;
    int steps() const { return steps_; }

private:
    PauliHamiltonian h_;
    double dt_;
    int steps_;
};

class ExactPropagator final : public Propagator {
public:
    ExactPropagator(std::shared_ptr<const Spectrum> spectrum, double dt);
    void forward(StateVector& psi) const override;
    void backward(StateVector& psi) const override;
    double dt() const override { return dt_; }
    std::string descriptor() const override { return "exact"; }

private:
    std::shared_ptr<const Spectrum> spectrum_;
    double dt_;
};

/// How the single-step evolution operator is realized.
struct EvolutionSpec {
    enum class Kind { exact, trotter };
    Kind kind = Kind::trotter;
    int trotter_steps = 4;
    /// Required for Kind::exact; also used to validate dt against the true
    /// spectral norm when available.
    std::shared_ptr<const Spectrum> spectrum;
};

/// Builds the propagator and validates dt > 0 and dt <= pi / ||H||, where
/// ||H|| is the coefficient-sum bound or, when a spectrum is supplied, the
/// exact spectral norm. Throws ConfigError on violation.
std::unique_ptr<Propagator> make_propagator(const PauliHamiltonian& h, double dt,
                                            const EvolutionSpec& spec);

/// Default time step pi / norm_bound(H). Throws ConfigError when the bound
/// is zero (empty Hamiltonian).
double default_time_step(const PauliHamiltonian& h);

} // namespace qftlm
