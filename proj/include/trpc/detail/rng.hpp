// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace trpc::detail {

/// Deterministic standard-normal generator (Box-Muller over mt19937_64).
/// std::normal_distribution is implementation-defined, so Monte Carlo
/// reproducibility across toolchains uses this instead.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        constexpr double two_pi = 2.0 * 3.14159265358979323846;
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 1e-300);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    int bit() { return static_cast<int>(engine_() & 1u); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Derive an independent stream seed for a Monte Carlo block.
inline std::uint64_t block_seed(std::uint64_t master, std::uint64_t block) {
    // splitmix64 step over (master, block)
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (block + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace trpc::detail
