// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "trpc/detail/rng.hpp"
#include "trpc/errors.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// One multipath component.
struct ChannelTap {
    double delay = 0.0; ///< s, nonnegative
    double gain = 1.0;  ///< magnitude
    int sign = +1;      ///< polarity, +1 or -1
};

/// Tapped-delay-line multipath channel with additive white Gaussian
/// noise of one-sided PSD `noise_psd` (W/Hz). The noise-generation
/// convention: sampled noise power equals noise_psd * fs/2 into the
/// reference load, i.e. white across the full Nyquist band.
struct ChannelModel {
    std::vector<ChannelTap> taps{ChannelTap{}};
    double noise_psd = 0.0; ///< W/Hz, one-sided N_0

    double tau_max() const { return taps.empty() ? 0.0 : taps.back().delay; }

    void validate() const {
        if (taps.empty())
            throw parameter_error("ChannelModel: need at least one tap");
        double prev = -1.0;
        for (const ChannelTap &t : taps) {
            if (t.delay < 0.0 || !std::isfinite(t.gain))
                throw parameter_error("ChannelModel: invalid tap");
            if (t.delay <= prev)
                throw parameter_error("ChannelModel: tap delays must be strictly increasing");
            if (t.sign != 1 && t.sign != -1)
                throw parameter_error("ChannelModel: tap sign must be +1 or -1");
            prev = t.delay;
        }
        if (noise_psd < 0.0)
            throw parameter_error("ChannelModel: noise PSD must be nonnegative");
    }

    static ChannelModel ideal() { return ChannelModel{}; }
};

/// Tapped-delay-line convolution plus AWGN; deterministic under `seed`.
/// The record is extended by the maximum tap delay so no multipath energy
/// is dropped. Tap delays must land on the sample grid (within 5% of a
/// sample period).
inline SampledWaveform apply_channel(const SampledWaveform &rf, const ChannelModel &ch,
                                     std::uint64_t seed,
                                     double load_impedance = kDefaultLoadOhms) {
    ch.validate();
    if (rf.is_quadrature())
        throw parameter_error("apply_channel: expects a real-valued RF waveform");
    const double fs = rf.sample_rate;

    std::vector<std::pair<std::size_t, double>> taps;
    taps.reserve(ch.taps.size());
    for (const ChannelTap &t : ch.taps) {
        const double pos = t.delay * fs;
        const auto n = static_cast<std::size_t>(std::llround(pos));
        if (std::fabs(pos - static_cast<double>(n)) > 0.05)
            throw parameter_error("apply_channel: tap delay not resolvable at this sample rate");
        taps.emplace_back(n, t.gain * static_cast<double>(t.sign));
    }

    const std::size_t tail = taps.back().first;
    std::vector<double> y(rf.size() + tail, 0.0);
    for (const auto &[d, g] : taps)
        for (std::size_t n = 0; n < rf.size(); ++n)
            y[n + d] += g * rf.i[n];

    if (ch.noise_psd > 0.0) {
        const double sigma = std::sqrt(ch.noise_psd * load_impedance * fs / 2.0);
        detail::GaussianRng rng(seed);
        for (double &v : y)
            v += sigma * rng();
    }
    return SampledWaveform(fs, std::move(y), rf.start_time);
}

} // namespace trpc
