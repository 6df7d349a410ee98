#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "capsim/util.hpp"

namespace capsim::mc {

/// splitmix64 step; also used as a 64->64 mixing finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }
};

/// Per-trial random stream derived from (base_seed, trial index) alone, so a
/// trial produces the same numbers no matter which thread runs it.
class TrialRng {
public:
    TrialRng(std::uint64_t base_seed, std::uint64_t trial)
        : gen_{mix64(base_seed ^ mix64(trial + 0x2545F4914F6CDD1Dull))} {}

    /// Uniform on (0, 1].
    double uniform() {
        return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (hand-rolled so the stream does not
    /// depend on the standard library's distribution internals).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = kTwoPi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly-symmetric complex normal with E|z|^2 = 1.
    std::complex<double> complex_normal() {
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-std::log(u1));  // includes the 1/sqrt(2) scaling
        double a = kTwoPi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    SplitMix64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace capsim::mc
