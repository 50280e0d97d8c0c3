// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "trpc/detail/fft.hpp"
#include "trpc/errors.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// Numerical floor for bin powers, keeps the dBm scale finite for silent
/// bands (well below the -200 dBm threshold used by tests).
inline constexpr double kSpectrumFloorWatts = 1e-30;

/// Spectrum-analyzer style power readout: one power value per RBW-wide
/// frequency bin, in dBm referenced to `load_impedance`.
///
/// Bin j is centered at j*rbw and covers [j*rbw - rbw/2, j*rbw + rbw/2).
/// Bins are contiguous and non-overlapping, so summing the linear-scale
/// bin powers recovers the total waveform power (Parseval). A narrowband
/// feature is read accurately when it sits inside a bin, at least a
/// window mainlobe width (~rbw/5) away from the bin edges; the TRPC
/// carriers and symbol rates used here are integer multiples of 1 MHz,
/// which places every spectral line at a bin center.
class SpectrumEstimate {
  public:
    std::vector<double> bin_frequencies; ///< Hz, strictly increasing
    std::vector<double> bin_powers;      ///< dBm per RBW bin
    double rbw = 0.0;                    ///< Hz
    double load_impedance = kDefaultLoadOhms;

    std::size_t size() const { return bin_frequencies.size(); }

    /// Index of the bin whose center is nearest to `freq`.
    std::size_t bin_index(double freq) const {
        if (bin_frequencies.empty())
            throw parameter_error("SpectrumEstimate: empty spectrum");
        const double lo = bin_frequencies.front();
        const double hi = bin_frequencies.back();
        if (freq < lo - rbw / 2 || freq > hi + rbw / 2)
            throw parameter_error("SpectrumEstimate: frequency outside spectrum range");
        const auto idx = static_cast<std::ptrdiff_t>(std::llround((freq - lo) / rbw));
        return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
            idx, 0, static_cast<std::ptrdiff_t>(bin_frequencies.size()) - 1));
    }

    double power_watts(std::size_t bin) const { return dbm_to_watts(bin_powers.at(bin)); }

    double power_dbm_at(double freq) const { return bin_powers[bin_index(freq)]; }

    /// Sum of all bins on the linear scale, in watts.
    double total_power_watts() const {
        double acc = 0.0;
        for (double p : bin_powers)
            acc += dbm_to_watts(p);
        return acc;
    }

    std::size_t peak_bin() const {
        return static_cast<std::size_t>(
            std::max_element(bin_powers.begin(), bin_powers.end()) - bin_powers.begin());
    }

    /// Integrated power over [f_lo, f_hi] in watts (whole bins whose
    /// centers fall inside the band).
    double band_power_watts(double f_lo, double f_hi) const {
        if (!(f_hi > f_lo))
            throw parameter_error("SpectrumEstimate: empty integration band");
        double acc = 0.0;
        bool any = false;
        for (std::size_t k = 0; k < size(); ++k) {
            if (bin_frequencies[k] >= f_lo && bin_frequencies[k] <= f_hi) {
                acc += dbm_to_watts(bin_powers[k]);
                any = true;
            }
        }
        if (!any)
            throw parameter_error("SpectrumEstimate: no bins inside integration band");
        return acc;
    }
};

/// Spectrum-analyzer emulation with explicit resolution bandwidth.
///
/// Model: Welch averaged periodogram (Hann window, 50% overlap, segment
/// length 10*fs/rbw zero-padded to a power of two) integrated into
/// contiguous RBW-wide bins. The fine-grained Welch resolution (rbw/10)
/// makes each bin reading equal to the true signal power inside its
/// RBW band: an isolated sinusoid or spectral line reads its full power
/// in one bin, while noise-like signals read PSD * rbw per bin.
///
/// Requires at least one full Welch segment of data: duration >= 10/rbw.
inline SpectrumEstimate psd_estimate(const SampledWaveform &wave, double rbw,
                                     double load_impedance = kDefaultLoadOhms) {
    if (wave.is_quadrature())
        throw parameter_error("psd_estimate: expects a real-valued waveform");
    if (!(rbw > 0.0))
        throw parameter_error("psd_estimate: rbw must be positive");
    if (!(load_impedance > 0.0))
        throw parameter_error("psd_estimate: load impedance must be positive");
    if (rbw >= wave.sample_rate / 4.0)
        throw parameter_error("psd_estimate: rbw too large for sample rate (need rbw < fs/4)");
    if (wave.duration() < 10.0 / rbw)
        throw regime_error("psd_estimate: insufficient-record (need duration >= 10/rbw)");

    const double fs = wave.sample_rate;
    const std::size_t nseg =
        std::min<std::size_t>(wave.size(), static_cast<std::size_t>(std::llround(10.0 * fs / rbw)));
    const std::size_t nfft = detail::next_pow2(nseg);
    const std::size_t hop = std::max<std::size_t>(1, nseg / 2);
    constexpr double pi = 3.14159265358979323846;

    std::vector<double> window(nseg);
    double window_power = 0.0; // sum of w^2
    for (std::size_t n = 0; n < nseg; ++n) {
        window[n] = 0.5 - 0.5 * std::cos(2.0 * pi * static_cast<double>(n) / static_cast<double>(nseg));
        window_power += window[n] * window[n];
    }

    std::vector<double> psd(nfft / 2 + 1, 0.0); // V^2/Hz, one-sided
    std::vector<std::complex<double>> buf(nfft);
    std::size_t segments = 0;
    for (std::size_t s0 = 0; s0 + nseg <= wave.size(); s0 += hop) {
        for (std::size_t n = 0; n < nseg; ++n)
            buf[n] = wave.i[s0 + n] * window[n];
        std::fill(buf.begin() + static_cast<std::ptrdiff_t>(nseg), buf.end(),
                  std::complex<double>(0.0, 0.0));
        detail::fft_pow2(buf);
        for (std::size_t k = 0; k <= nfft / 2; ++k)
            psd[k] += std::norm(buf[k]) / (fs * window_power);
        ++segments;
    }
    const double df = fs / static_cast<double>(nfft);
    for (std::size_t k = 0; k <= nfft / 2; ++k) {
        psd[k] /= static_cast<double>(segments);
        if (k != 0 && k != nfft / 2)
            psd[k] *= 2.0; // fold negative frequencies
    }

    // integrate the fine PSD into RBW-wide analyzer bins
    const std::size_t nbins = static_cast<std::size_t>(std::floor(fs / 2.0 / rbw)) + 1;
    std::vector<double> bin_watts(nbins, 0.0);
    for (std::size_t k = 0; k <= nfft / 2; ++k) {
        const double f = df * static_cast<double>(k);
        auto j = static_cast<std::size_t>(std::llround(f / rbw));
        if (j >= nbins)
            j = nbins - 1;
        bin_watts[j] += psd[k] * df / load_impedance;
    }

    SpectrumEstimate est;
    est.rbw = rbw;
    est.load_impedance = load_impedance;
    est.bin_frequencies.resize(nbins);
    est.bin_powers.resize(nbins);
    for (std::size_t j = 0; j < nbins; ++j) {
        est.bin_frequencies[j] = rbw * static_cast<double>(j);
        est.bin_powers[j] = watts_to_dbm(std::max(bin_watts[j], kSpectrumFloorWatts));
    }
    return est;
}

/// Estimate of the pulse-shaping filter's 3 dB bandwidth from a sampled
/// pulse: the contiguous half-maximum width of the amplitude spectrum
/// |X(f)| around its peak (one-sided when the peak sits at DC). The
/// estimator is deliberately not the half-power width of the record
/// itself: hard time truncation scallops the power spectrum and makes
/// that reading ~30% narrower than the underlying filter's half-power
/// point, while the amplitude half-maximum width stays within ~8% of it.
/// For the beta = 0.25 pulses used here the reading is ~0.95/T_p.
inline double three_db_bandwidth(const SampledWaveform &wave) {
    if (wave.is_quadrature())
        throw parameter_error("three_db_bandwidth: expects a real-valued waveform");
    // heavy zero padding so short pulse records still get fine resolution
    const std::size_t nfft = detail::next_pow2(std::max<std::size_t>(wave.size() * 8, 16384));
    std::vector<std::complex<double>> buf(nfft, std::complex<double>(0.0, 0.0));
    for (std::size_t n = 0; n < wave.size(); ++n)
        buf[n] = wave.i[n];
    detail::fft_pow2(buf);
    const std::size_t half = nfft / 2;
    std::vector<double> mag(half + 1);
    for (std::size_t k = 0; k <= half; ++k)
        mag[k] = std::abs(buf[k]);
    const auto peak =
        static_cast<std::size_t>(std::max_element(mag.begin(), mag.end()) - mag.begin());
    const double threshold = mag[peak] / 2.0;
    std::size_t lo = peak, hi = peak;
    while (lo > 0 && mag[lo - 1] >= threshold)
        --lo;
    while (hi < half && mag[hi + 1] >= threshold)
        ++hi;
    const double df = wave.sample_rate / static_cast<double>(nfft);
    return df * static_cast<double>(hi - lo + 1);
}

} // namespace trpc
