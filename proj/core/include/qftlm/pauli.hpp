#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace qftlm {

/// Tensor product of single-site Pauli operators, one of I, X, Y, Z per
/// site. Site 0 is the leftmost character of the word and maps to the most
/// significant bit of a computational-basis index; this convention is fixed
/// so that serialized outputs are reproducible.
class PauliString {
public:
    /// Builds from a word such as "XIZ". Throws std::invalid_argument on
    /// characters outside {I, X, Y, Z} or an empty word.
    explicit PauliString(std::string word);

    static PauliString identity(int sites);

    int sites() const { return static_cast<int>(word_.size()); }
    char op(int site) const { return word_[static_cast<std::size_t>(site)]; }
    const std::string& word() const { return word_; }

    bool is_identity() const;
    /// True when the string contains only I and Z, i.e. it is diagonal in
    /// the computational basis.
    bool is_diagonal() const;

    /// Bit mask of sites carrying X or Y (the sites whose basis bit flips).
    std::uint64_t flip_mask() const;
    /// Bit mask of sites carrying Y or Z (the sites contributing a sign
    /// that depends on the basis bit).
    std::uint64_t phase_mask() const;
    int y_count() const;

    bool commutes_with(const PauliString& other) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString&, const PauliString&) = default;

private:
    std::uint64_t site_bit(int site) const {
        return std::uint64_t{1} << (sites() - 1 - site);
    }

    std::string word_;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// Weighted sum of Pauli strings with real coefficients (Hermitian by
/// construction). Duplicate strings are merged at construction and exact
/// zero coefficients dropped. Immutable after construction and safe to
/// share across threads.
class PauliHamiltonian {
public:
    static constexpr int kDefaultDenseLimit = 12;

    /// Throws std::invalid_argument on non-finite coefficients or strings
    /// whose length differs from `sites`.
    PauliHamiltonian(int sites, std::vector<PauliTerm> terms);

    int sites() const { return sites_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    /// Sum of absolute coefficients: an upper bound on the spectral norm,
    /// used to pick the Krylov time step dt = pi / norm_bound().
    double norm_bound() const;

    /// Full matrix in the computational basis; Hermitian to machine
    /// precision. Rejects systems above `dense_limit` sites.
    Eigen::MatrixXcd to_dense(int dense_limit = kDefaultDenseLimit) const;

private:
    int sites_;
    std::vector<PauliTerm> terms_;
};

/// Transverse-field Ising chain on `sites` >= 2 spins with open boundaries:
/// +1 on every X_i and -1 on every Z_i Z_{i+1} nearest-neighbor pair.
PauliHamiltonian build_tfim(int sites);

} // namespace qftlm
