// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "trpc/cluster.hpp"
#include "trpc/errors.hpp"
#include "trpc/spectrum.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// Behavioral model of the direct-conversion transmit front end: baseband
/// DC offsets (carrier leakage), I/Q gain and LO-quadrature phase errors
/// (finite single-sideband suppression), and the variable output gain of
/// the differential-to-single-ended stage.
struct ImpairmentConfig {
    double dc_offset_i = 0.0;    ///< V
    double dc_offset_q = 0.0;    ///< V
    double gain_imbalance = 0.0; ///< dB, I-path relative to Q-path
    double phase_imbalance = 0.0;///< degrees, LO quadrature deviation from 90
    double output_gain = 0.0;    ///< dB, valid range [-12, 0]

    static constexpr double kOutputGainMin = -12.0;
    static constexpr double kOutputGainMax = 0.0;

    void validate() const {
        if (!(std::isfinite(dc_offset_i) && std::isfinite(dc_offset_q) &&
              std::isfinite(gain_imbalance) && std::isfinite(phase_imbalance) &&
              std::isfinite(output_gain)))
            throw parameter_error("ImpairmentConfig: all fields must be finite");
        if (output_gain < kOutputGainMin - 1e-12 || output_gain > kOutputGainMax + 1e-12)
            throw parameter_error("ImpairmentConfig: output_gain outside [-12, 0] dB");
    }

    /// I-rail gain: the imbalance is split evenly between the rails so
    /// the combined gain stays at unity.
    double gain_i() const { return std::pow(10.0, gain_imbalance / 40.0); }
    double gain_q() const { return std::pow(10.0, -gain_imbalance / 40.0); }
    double phase_error_rad() const { return phase_imbalance * 3.14159265358979323846 / 180.0; }
    double output_gain_linear() const { return std::pow(10.0, output_gain / 20.0); }
};

/// Measured RF quality figures, both as positive dBc suppressions.
struct RfMetrics {
    double carrier_leakage_dbc;  ///< desired sideband over carrier residue
    double ssb_suppression_dbc;  ///< desired sideband over image sideband
};

/// Baseband part of the impairment model: per-rail gain plus DC offset.
/// The LO phase error is applied inside upconvert_impaired.
inline std::pair<SampledWaveform, SampledWaveform>
apply_tx_impairments(const SampledWaveform &i, const SampledWaveform &q,
                     const ImpairmentConfig &cfg) {
    cfg.validate();
    if (i.sample_rate != q.sample_rate || i.size() != q.size())
        throw parameter_error("apply_tx_impairments: rails must share rate and length");
    const double gi = cfg.gain_i();
    const double gq = cfg.gain_q();
    std::vector<double> iv(i.size()), qv(q.size());
    for (std::size_t n = 0; n < i.size(); ++n) {
        iv[n] = gi * i.i[n] + cfg.dc_offset_i;
        qv[n] = gq * q.i[n] + cfg.dc_offset_q;
    }
    return {SampledWaveform(i.sample_rate, std::move(iv), i.start_time),
            SampledWaveform(q.sample_rate, std::move(qv), q.start_time)};
}

/// Impaired up-conversion:
///   out(t) = G * [ i'(t)*cos(w t + phi) - q'(t)*sin(w t + phi + phi_err) ]
/// with (i', q') from apply_tx_impairments, phi_err the LO quadrature
/// error and G the output-gain setting. A zero config reduces this to
/// upconvert_iq exactly.
inline SampledWaveform upconvert_impaired(const SampledWaveform &i, const SampledWaveform &q,
                                          const LoConfig &lo, const ImpairmentConfig &cfg) {
    cfg.validate();
    lo.validate();
    auto [ii, qi] = apply_tx_impairments(i, q, cfg);
    if (lo.frequency >= i.sample_rate / 2.0)
        throw parameter_error("upconvert_impaired: LO frequency violates Nyquist");

    const double fs = i.sample_rate;
    const double phase_err = cfg.phase_error_rad();
    const double g_out = cfg.output_gain_linear();
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<double> rf(i.size());
    for (std::size_t n = 0; n < rf.size(); ++n) {
        const double t = i.start_time + static_cast<double>(n) / fs;
        const double arg = two_pi * lo.frequency * t + lo.phase;
        rf[n] = g_out * lo.amplitude *
                (ii.i[n] * std::cos(arg) - qi.i[n] * std::sin(arg + phase_err));
    }
    return SampledWaveform(fs, std::move(rf), i.start_time);
}

/// Carrier-leakage suppression in dBc: integrated desired-signal power in
/// `signal_band` over the residual carrier line at f_lo. Positive = good.
inline double measure_carrier_leakage(const SpectrumEstimate &spectrum, double f_lo,
                                      std::pair<double, double> signal_band) {
    const double carrier_w = spectrum.power_watts(spectrum.bin_index(f_lo));
    const double signal_w = spectrum.band_power_watts(signal_band.first, signal_band.second);
    return db_ratio(signal_w, carrier_w);
}

/// Single-sideband suppression in dBc: desired sideband (f_lo - f_m,
/// lower-sideband convention matching the complex envelope e^{-j w_m t},
/// i.e. i = cos, q = -sin) over the image at f_lo + f_m.
inline double measure_ssb_suppression(const SpectrumEstimate &spectrum, double f_lo, double f_m) {
    const double desired_w = spectrum.power_watts(spectrum.bin_index(f_lo - f_m));
    const double image_w = spectrum.power_watts(spectrum.bin_index(f_lo + f_m));
    return db_ratio(desired_w, image_w);
}

/// Closed-form image-rejection ratio for gain ratio k = g_q/g_i and LO
/// quadrature error phi: IRR = (1 + 2k cos(phi) + k^2)/(1 - 2k cos(phi) + k^2).
inline double image_rejection_db(double gain_imbalance_db, double phase_imbalance_deg) {
    const double k = std::pow(10.0, -gain_imbalance_db / 20.0);
    const double c = std::cos(phase_imbalance_deg * 3.14159265358979323846 / 180.0);
    return 10.0 * std::log10((1.0 + 2.0 * k * c + k * k) / (1.0 - 2.0 * k * c + k * k));
}

} // namespace trpc
