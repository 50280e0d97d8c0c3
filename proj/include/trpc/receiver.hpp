// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "trpc/cluster.hpp"
#include "trpc/detail/filters.hpp"
#include "trpc/errors.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// Quadrature down-conversion followed by 4th-order Butterworth low-pass
/// filtering (applied zero-phase so pulse timing is preserved). The
/// receiver LO phase need not match the transmitter: a constant offset
/// theta rotates the recovered pair, (i' + jq') = e^{-j theta} (i + jq),
/// which the lag-T_d autocorrelation detector cancels exactly.
inline std::pair<SampledWaveform, SampledWaveform>
demodulate_iq(const SampledWaveform &rf, const LoConfig &lo, double lpf_cutoff) {
    lo.validate();
    if (rf.is_quadrature())
        throw parameter_error("demodulate_iq: expects a real-valued RF waveform");
    if (!(lpf_cutoff > 0.0) || lpf_cutoff >= lo.frequency)
        throw parameter_error("demodulate_iq: LPF cutoff must be in (0, f_LO)");
    if (lpf_cutoff >= rf.sample_rate / 2.0)
        throw parameter_error("demodulate_iq: LPF cutoff violates Nyquist");

    const double fs = rf.sample_rate;
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<double> i_bb(rf.size()), q_bb(rf.size());
    for (std::size_t n = 0; n < rf.size(); ++n) {
        const double t = rf.start_time + static_cast<double>(n) / fs;
        const double arg = two_pi * lo.frequency * t + lo.phase;
        i_bb[n] = 2.0 * rf.i[n] * std::cos(arg);
        q_bb[n] = -2.0 * rf.i[n] * std::sin(arg);
    }
    detail::lowpass_zero_phase(i_bb, lpf_cutoff, fs);
    detail::lowpass_zero_phase(q_bb, lpf_cutoff, fs);
    return {SampledWaveform(fs, std::move(i_bb), rf.start_time),
            SampledWaveform(fs, std::move(q_bb), rf.start_time)};
}

/// Receiver LPF cutoff for a mode: 1.5x the cluster 3 dB bandwidth.
inline double receiver_lpf_cutoff(const ClusterSpec &spec) {
    // baseband one-sided 3 dB bandwidth of the component pulse is
    // 0.956/T_p for the beta = 0.25 RRC
    return 1.5 * 0.956 / spec.pulse_width;
}

/// Non-coherent lag-T_d autocorrelation detection. Per symbol m the
/// statistic
///   Z_m = sum_i integral over data-pulse window i of
///         [ i(t) i(t - T_d) + q(t) q(t - T_d) ] dt
/// pairs each data pulse with its reference pulse; bit = 1 if Z_m > 0,
/// otherwise 0 (ties decide 0). The I*I + Q*Q combining makes decisions
/// exactly invariant to any constant receiver LO phase offset.
inline std::vector<int> autocorr_detect(const SampledWaveform &i, const SampledWaveform &q,
                                        const ClusterSpec &spec) {
    spec.validate();
    if (i.sample_rate != q.sample_rate || i.size() != q.size())
        throw parameter_error("autocorr_detect: rails must share rate and length");
    const double fs = i.sample_rate;
    const double duration = i.duration();
    const auto n_symbols = static_cast<std::size_t>(std::llround(duration / spec.symbol_duration));
    if (n_symbols == 0 ||
        std::fabs(duration - static_cast<double>(n_symbols) * spec.symbol_duration) >
            spec.symbol_duration / 2.0 + 2.0 / fs)
        throw parameter_error("autocorr_detect: record does not span a whole number of symbols");

    const auto lag = static_cast<std::size_t>(std::llround(spec.pulse_delay * fs));
    if (lag == 0)
        throw parameter_error("autocorr_detect: pulse delay not resolvable at this sample rate");

    std::vector<int> bits(n_symbols);
    for (std::size_t m = 0; m < n_symbols; ++m) {
        double z = 0.0;
        const double sym_start = static_cast<double>(m) * spec.symbol_duration;
        for (std::size_t p = 0; p < spec.n_pulses; ++p) {
            const double w_start =
                sym_start + (2.0 * static_cast<double>(p) + 1.0) * spec.pulse_delay;
            const auto n0 = static_cast<std::size_t>(std::llround(w_start * fs));
            const auto n1 = static_cast<std::size_t>(std::llround((w_start + spec.pulse_width) * fs));
            for (std::size_t n = std::max(n0, lag); n < std::min<std::size_t>(n1, i.size()); ++n)
                z += i.i[n] * i.i[n - lag] + q.i[n] * q.i[n - lag];
        }
        bits[m] = z > 0.0 ? 1 : 0;
    }
    return bits;
}

} // namespace trpc
