#include "qftlm/evolution.hpp"

#include "qftlm/errors.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qftlm {

namespace {

struct CompiledTerm {
    std::uint64_t flips = 0;
    std::uint64_t phases = 0;
    std::complex<double> prefactor{1.0, 0.0}; // i^{#Y}
    double coefficient = 0.0;
};

// Terms in application order: diagonal strings first, then the rest, each
// group in Hamiltonian storage order. For the TFIM this realizes the
// ZZ-then-X layer ordering.
std::vector<CompiledTerm> compile_terms(const PauliHamiltonian& h) {
    constexpr std::complex<double> iu(0.0, 1.0);
    std::vector<CompiledTerm> compiled;
    compiled.reserve(h.terms().size());
    for (bool diagonal_pass : {true, false}) {
        for (const auto& term : h.terms()) {
            if (term.string.is_diagonal() != diagonal_pass) continue;
            CompiledTerm c;
            c.flips = term.string.flip_mask();
            c.phases = term.string.phase_mask();
            c.coefficient = term.coefficient;
            for (int y = 0; y < term.string.y_count(); ++y) c.prefactor *= iu;
            compiled.push_back(c);
        }
    }
    return compiled;
}

// exp(-i theta P) on the amplitude vector, for a single Pauli string P.
void apply_pauli_exponential(Eigen::VectorXcd& amps, const CompiledTerm& term, double theta) {
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    if (term.flips == 0) {
        // Diagonal string: pure phases exp(-i theta s(b)), s(b) = +/-1.
        const std::complex<double> plus = std::polar(1.0, -theta);
        const std::complex<double> minus = std::polar(1.0, +theta);
        for (std::uint64_t b = 0; b < dim; ++b) {
            amps(static_cast<Eigen::Index>(b)) *=
                (std::popcount(b & term.phases) % 2 == 0) ? plus : minus;
        }
        return;
    }
    const double c = std::cos(theta);
    const std::complex<double> ms(0.0, -std::sin(theta));
    // Visit each coupled pair (b, b ^ flips) once by fixing the highest
    // flipped bit to zero in b.
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(term.flips));
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & pivot) continue;
        const std::uint64_t partner = b ^ term.flips;
        // P|b> = p(b)|b ^ flips>, with p(partner) = conj(p(b)).
        const double sign = (std::popcount(b & term.phases) % 2 == 0) ? 1.0 : -1.0;
        const std::complex<double> pb = term.prefactor * sign;
        const std::complex<double> a0 = amps(static_cast<Eigen::Index>(b));
        const std::complex<double> a1 = amps(static_cast<Eigen::Index>(partner));
        amps(static_cast<Eigen::Index>(b)) = c * a0 + ms * std::conj(pb) * a1;
        amps(static_cast<Eigen::Index>(partner)) = c * a1 + ms * pb * a0;
    }
}

void run_trotter_step(StateVector& psi, const std::vector<CompiledTerm>& compiled, double dt,
                      int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("trotter_step: sign must be +1 or -1");
    }
    auto& amps = psi.amplitudes();
    if (sign > 0) {
        for (const auto& term : compiled) {
            apply_pauli_exponential(amps, term, dt * term.coefficient);
        }
    } else {
        for (auto it = compiled.rbegin(); it != compiled.rend(); ++it) {
            apply_pauli_exponential(amps, *it, -dt * it->coefficient);
        }
    }
}

} // namespace

void trotter_step(StateVector& psi, const PauliHamiltonian& h, double dt, int sign) {
    if (h.sites() != psi.qubits()) {
        throw std::invalid_argument("trotter_step: dimension mismatch");
    }
    if (!std::isfinite(dt)) {
        throw std::invalid_argument("trotter_step: non-finite time step");
    }
    const auto compiled = compile_terms(h);
    run_trotter_step(psi, compiled, dt, sign);
}

void evolve_trotter(StateVector& psi, const PauliHamiltonian& h, double dt_total, int n_steps,
                    int j) {
    if (n_steps < 1) {
        throw std::invalid_argument("evolve_trotter: need at least one Trotter step");
    }
    if (j == 0) return;
    const auto compiled = compile_terms(h);
    const double dt = dt_total / n_steps;
    const int sign = j > 0 ? 1 : -1;
    const long reps = std::abs(static_cast<long>(j));
    for (long r = 0; r < reps; ++r) {
        for (int s = 0; s < n_steps; ++s) {
            run_trotter_step(psi, compiled, dt, sign);
        }
    }
}

void evolve_exact(StateVector& psi, const Spectrum& spectrum, double t) {
    if (psi.dim() != spectrum.dim()) {
        throw std::invalid_argument("evolve_exact: dimension mismatch");
    }
    Eigen::VectorXcd coeffs = spectrum.eigenvectors.adjoint() * psi.amplitudes();
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
        coeffs(j) *= std::polar(1.0, -spectrum.energies(j) * t);
    }
    psi.amplitudes() = spectrum.eigenvectors * coeffs;
}

TrotterPropagator::TrotterPropagator(PauliHamiltonian h, double dt, int n_steps)
    : h_(std::move(h)), dt_(dt), steps_(n_steps) {
    if (n_steps < 1) {
        throw std::invalid_argument("TrotterPropagator: need at least one Trotter step");
    }
}

void TrotterPropagator::forward(StateVector& psi) const {
    evolve_trotter(psi, h_, dt_, steps_, +1);
}

void TrotterPropagator::backward(StateVector& psi) const {
    evolve_trotter(psi, h_, dt_, steps_, -1);
}

std::string TrotterPropagator::descriptor() const {
    return "trotter(" + std::to_string(steps_) + ")";
}

ExactPropagator::ExactPropagator(std::shared_ptr<const Spectrum> spectrum, double dt)
    : spectrum_(std::move(spectrum)), dt_(dt) {
    if (!spectrum_) {
        throw std::invalid_argument("ExactPropagator: null spectrum");
    }
}

void ExactPropagator::forward(StateVector& psi) const { evolve_exact(psi, *spectrum_, dt_); }

void ExactPropagator::backward(StateVector& psi) const { evolve_exact(psi, *spectrum_, -dt_); }

double default_time_step(const PauliHamiltonian& h) {
    const double bound = h.norm_bound();
    if (bound <= 0.0) {
        throw ConfigError("cannot pick a time step: Hamiltonian norm bound is zero");
    }
    return std::numbers::pi / bound;
}

std::unique_ptr<Propagator> make_propagator(const PauliHamiltonian& h, double dt,
                                            const EvolutionSpec& spec) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("time step must be positive and finite");
    }
    // dt must keep every E_j dt inside [-pi, pi). The coefficient-sum bound
    // guarantees that; the exact spectral norm admits slightly larger steps.
    constexpr double slack = 1.0 + 1e-12;
    const double coeff_bound = h.norm_bound();
    bool ok = coeff_bound > 0.0 && dt <= slack * std::numbers::pi / coeff_bound;
    if (!ok && spec.spectrum) {
        const double exact_norm = spec.spectrum->spectral_norm();
        ok = exact_norm > 0.0 && dt <= slack * std::numbers::pi / exact_norm;
    }
    if (!ok) {
        throw ConfigError("time step violates dt <= pi / ||H||");
    }
    if (spec.kind == EvolutionSpec::Kind::exact) {
        if (!spec.spectrum) {
            throw ConfigError("exact evolution requires a dense spectrum");
        }
        return std::make_unique<ExactPropagator>(spec.spectrum, dt);
    }
    return std::make_unique<TrotterPropagator>(h, dt, spec.trotter_steps);
}

} // namespace qftlm
