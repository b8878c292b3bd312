#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace qftlm {

/// Seedable pseudo-random stream. The same seed reproduces the same sample
/// sequence bit for bit: uniform and Gaussian variates are generated from
/// raw 64-bit draws rather than std:: distributions, whose output is
/// implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_raw() { return gen_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
    }

    /// Uniform phase in [0, 2*pi).
    double phase() { return 2.0 * std::numbers::pi * uniform(); }

    /// Standard normal variate (Box-Muller).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - uniform(); // (0, 1], keeps log() finite
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace detail {
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
} // namespace detail

/// Derives a child seed from a master seed and a path of stream
/// identifiers, e.g. (repetition, trace-state index, purpose). Children for
/// distinct paths are decorrelated, so per-worker streams do not depend on
/// scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = detail::splitmix64(master);
    for (std::uint64_t p : path) {
        s = detail::splitmix64(s ^ detail::splitmix64(p + 0x632BE59BD9B4E019ULL));
    }
    return s;
}

/// Stream purposes used by the experiment runner when splitting the master
/// seed. Part of the reproducibility contract: sweeps reuse identical trace
/// states and noise draws across sweep points.
enum class StreamPurpose : std::uint64_t {
    trace_state = 1,
    noise = 2,
};

} // namespace qftlm
