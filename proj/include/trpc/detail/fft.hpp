// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "trpc/errors.hpp"

namespace trpc::detail {

/// In-place iterative radix-2 FFT. Length must be a power of two.
inline void fft_pow2(std::vector<std::complex<double>> &x) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw parameter_error("fft_pow2: length must be a power of two");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(x[i], x[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * 3.14159265358979323846 / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t s = 0; s < n; s += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = x[s + k];
                const std::complex<double> v = x[s + k + len / 2] * w;
                x[s + k] = u + v;
                x[s + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

} // namespace trpc::detail
