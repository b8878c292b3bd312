#include "qftlm/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

namespace qftlm {

PauliString::PauliString(std::string word) : word_(std::move(word)) {
    if (word_.empty()) {
        throw std::invalid_argument("PauliString: empty word");
    }
    if (word_.size() > 64) {
        throw std::invalid_argument("PauliString: more than 64 sites");
    }
    for (char c : word_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument(std::string("PauliString: invalid operator '") + c + "'");
        }
    }
}

PauliString PauliString::identity(int sites) {
    return PauliString(std::string(static_cast<std::size_t>(sites), 'I'));
}

bool PauliString::is_identity() const {
    return word_.find_first_not_of('I') == std::string::npos;
}

bool PauliString::is_diagonal() const {
    return word_.find_first_of("XY") == std::string::npos;
}

std::uint64_t PauliString::flip_mask() const {
    std::uint64_t mask = 0;
    for (int s = 0; s < sites(); ++s) {
        const char c = op(s);
        if (c == 'X' || c == 'Y') mask |= site_bit(s);
    }
    return mask;
}

std::uint64_t PauliString::phase_mask() const {
    std::uint64_t mask = 0;
    for (int s = 0; s < sites(); ++s) {
        const char c = op(s);
        if (c == 'Y' || c == 'Z') mask |= site_bit(s);
    }
    return mask;
}

int PauliString::y_count() const {
    int n = 0;
    for (char c : word_) n += (c == 'Y');
    return n;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (sites() != other.sites()) {
        throw std::invalid_argument("PauliString: size mismatch in commutes_with");
    }
    // Two Pauli strings commute iff they anticommute on an even number of
    // sites.
    int anticommuting = 0;
    for (int s = 0; s < sites(); ++s) {
        const char a = op(s);
        const char b = other.op(s);
        if (a != 'I' && b != 'I' && a != b) ++anticommuting;
    }
    return anticommuting % 2 == 0;
}

PauliHamiltonian::PauliHamiltonian(int sites, std::vector<PauliTerm> terms) : sites_(sites) {
    if (sites_ < 1) {
        throw std::invalid_argument("PauliHamiltonian: need at least one site");
    }
    // Merge duplicate strings, keeping first-appearance order.
    std::map<std::string, std::size_t> index;
    for (auto& term : terms) {
        if (!std::isfinite(term.coefficient)) {
            throw std::invalid_argument("PauliHamiltonian: non-finite coefficient");
        }
        if (term.string.sites() != sites_) {
            throw std::invalid_argument("PauliHamiltonian: term length does not match system size");
        }
        auto [it, inserted] = index.try_emplace(term.string.word(), terms_.size());
        if (inserted) {
            terms_.push_back(std::move(term));
        } else {
            terms_[it->second].coefficient += term.coefficient;
        }
    }
    std::erase_if(terms_, [](const PauliTerm& t) { return t.coefficient == 0.0; });
}

double PauliHamiltonian::norm_bound() const {
    double sum = 0.0;
    for (const auto& term : terms_) sum += std::abs(term.coefficient);
    return sum;
}

Eigen::MatrixXcd PauliHamiltonian::to_dense(int dense_limit) const {
    if (sites_ > dense_limit) {
        throw std::invalid_argument("PauliHamiltonian::to_dense: system size above dense limit");
    }
    const std::uint64_t dim = std::uint64_t{1} << sites_;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
    constexpr std::complex<double> iu(0.0, 1.0);
    for (const auto& term : terms_) {
        const std::uint64_t flips = term.string.flip_mask();
        const std::uint64_t phases = term.string.phase_mask();
        std::complex<double> prefactor = term.coefficient;
        for (int y = 0; y < term.string.y_count(); ++y) prefactor *= iu;
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & phases) % 2 == 0) ? 1.0 : -1.0;
            mat(static_cast<Eigen::Index>(col ^ flips), static_cast<Eigen::Index>(col)) +=
                prefactor * sign;
        }
    }
    return mat;
}

PauliHamiltonian build_tfim(int sites) {
    if (sites < 2) {
        throw std::invalid_argument("build_tfim: need at least 2 sites");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(static_cast<std::size_t>(2 * sites - 1));
    for (int i = 0; i < sites; ++i) {
        std::string word(static_cast<std::size_t>(sites), 'I');
        word[static_cast<std::size_t>(i)] = 'X';
        terms.push_back({+1.0, PauliString(word)});
    }
    for (int i = 0; i + 1 < sites; ++i) {
        std::string word(static_cast<std::size_t>(sites), 'I');
        word[static_cast<std::size_t>(i)] = 'Z';
        word[static_cast<std::size_t>(i + 1)] = 'Z';
        terms.push_back({-1.0, PauliString(word)});
    }
    return PauliHamiltonian(sites, std::move(terms));
}

} // namespace qftlm
