// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "trpc/errors.hpp"

namespace trpc::detail {

/// Second-order IIR section, direct form II transposed.
struct Biquad {
    double b0, b1, b2, a1, a2;

    void process(std::vector<double> &x) const {
        double z1 = 0.0, z2 = 0.0;
        for (double &v : x) {
            const double in = v;
            const double out = b0 * in + z1;
            z1 = b1 * in - a1 * out + z2;
            z2 = b2 * in - a2 * out;
            v = out;
        }
    }
};

/// Bilinear-transform Butterworth low-pass biquad with quality factor q.
inline Biquad butterworth_section(double cutoff, double sample_rate, double q) {
    constexpr double pi = 3.14159265358979323846;
    const double w0 = 2.0 * pi * cutoff / sample_rate;
    const double alpha = std::sin(w0) / (2.0 * q);
    const double c = std::cos(w0);
    const double a0 = 1.0 + alpha;
    Biquad s{};
    s.b0 = (1.0 - c) / 2.0 / a0;
    s.b1 = (1.0 - c) / a0;
    s.b2 = s.b0;
    s.a1 = -2.0 * c / a0;
    s.a2 = (1.0 - alpha) / a0;
    return s;
}

/// 4th-order Butterworth low-pass as a cascade of two biquads.
inline std::array<Biquad, 2> butterworth4(double cutoff, double sample_rate) {
    if (!(cutoff > 0.0) || cutoff >= sample_rate / 2.0)
        throw parameter_error("butterworth4: cutoff must be in (0, fs/2)");
    constexpr double pi = 3.14159265358979323846;
    // pole quality factors of the 4th-order Butterworth prototype
    const double q1 = 1.0 / (2.0 * std::cos(pi / 8.0));
    const double q2 = 1.0 / (2.0 * std::cos(3.0 * pi / 8.0));
    return {butterworth_section(cutoff, sample_rate, q1),
            butterworth_section(cutoff, sample_rate, q2)};
}

/// Zero-phase low-pass: the Butterworth cascade applied forward and
/// backward, so the passband is delay-free and pulse positions are
/// preserved for the correlation windows downstream.
inline void lowpass_zero_phase(std::vector<double> &x, double cutoff, double sample_rate) {
    const auto sections = butterworth4(cutoff, sample_rate);
    for (const Biquad &s : sections)
        s.process(x);
    std::reverse(x.begin(), x.end());
    for (const Biquad &s : sections)
        s.process(x);
    std::reverse(x.begin(), x.end());
}

} // namespace trpc::detail
