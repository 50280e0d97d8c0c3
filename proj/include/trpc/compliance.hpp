// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "trpc/cluster.hpp"
#include "trpc/errors.hpp"
#include "trpc/spectrum.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// Single-pulse UWB train: FBW peak power, width and repetition rate.
struct PulseTrainPowerModel {
    double p_peak;      ///< W, full-bandwidth peak power
    double pulse_width; ///< T_p, s
    double prf;         ///< R_p, Hz

    double duty_cycle() const { return pulse_width * prf; }

    void validate() const {
        if (!(p_peak > 0.0 && pulse_width > 0.0 && prf > 0.0))
            throw parameter_error("PulseTrainPowerModel: all fields must be positive");
        if (duty_cycle() > 1.0 + 1e-12)
            throw parameter_error("PulseTrainPowerModel: duty cycle exceeds 1");
    }
};

/// FCC UWB in-band emission limits.
struct FccMask {
    double average_limit_dbm_per_mhz = -41.25; ///< measured in 1 MHz RBW
    double peak_limit_dbm_ref = 0.0;           ///< in the 50 MHz reference RBW
    double rbw_min = 1e6;
    double rbw_max = 50e6;

    /// Peak limit scaled to the measurement RBW:
    /// limit(dBm) = 0 + 20*log10(B_R / 50 MHz) for 1 MHz <= B_R <= 50 MHz.
    double peak_limit_dbm(double rbw) const {
        return peak_limit_dbm_ref + 20.0 * std::log10(rbw / 50e6);
    }

    double average_limit_watts() const { return dbm_to_watts(average_limit_dbm_per_mhz); }
};

enum class FccConstraint { average, peak };

inline const char *to_string(FccConstraint c) {
    return c == FccConstraint::average ? "average" : "peak";
}

struct FccViolation {
    double frequency_hz;
    double margin_db; ///< negative
    FccConstraint constraint;
};

struct FccVerdict {
    bool passes = true;
    double worst_margin_db = 0.0; ///< positive = compliant headroom
    double worst_frequency_hz = 0.0;
    FccConstraint binding_constraint = FccConstraint::average;
    std::vector<FccViolation> violations;
};

/// Duty-cycle law: P_ave = P_peak * T_p * R_p.
inline double duty_cycle_average(const PulseTrainPowerModel &model) {
    model.validate();
    return model.p_peak * model.pulse_width * model.prf;
}

/// RBW-limited spectrum-analyzer reading of a single-pulse train:
/// P_m = P_peak * T_p^2 * R_p^2, valid for R_p >> B_R (the analyzer sums
/// R_p/B_R pulses coherently, and the B_R factors cancel).
inline double measured_power_pulse_train(const PulseTrainPowerModel &model, double rbw) {
    model.validate();
    if (!(rbw > 0.0))
        throw parameter_error("measured_power_pulse_train: rbw must be positive");
    if (model.prf < 10.0 * rbw)
        throw regime_error("measured_power_pulse_train: out-of-model (need R_p >= 10*rbw)");
    const double x = model.pulse_width * model.prf;
    return model.p_peak * x * x;
}

/// RBW-limited reading of a TRPC cluster train:
/// P_m = N_p^2 * P_peak * T_p^2 * R^2, valid for R >> B_R. Doubling N_p
/// raises the reading by exactly 6.02 dB.
inline double measured_power_trpc(double p_peak, double pulse_width, std::size_t n_pulses,
                                  double symbol_rate, double rbw) {
    if (!(p_peak > 0.0 && pulse_width > 0.0 && symbol_rate > 0.0 && rbw > 0.0) || n_pulses < 1)
        throw parameter_error("measured_power_trpc: invalid parameters");
    if (symbol_rate < 10.0 * rbw)
        throw regime_error("measured_power_trpc: out-of-model (need R >= 10*rbw)");
    const double np = static_cast<double>(n_pulses);
    const double x = pulse_width * symbol_rate;
    return np * np * p_peak * x * x;
}

struct FbwPowerCap {
    double p_peak_dbm;
    FccConstraint binding_constraint;
};

/// Largest FBW peak power (dBm) whose RBW-limited reading stays inside
/// both mask branches. Analytic inversion: P_peak = limit / (N_p^2 T_p^2 R^2).
inline FbwPowerCap max_fbw_peak_power(const TxMode &mode, const FccMask &mask = FccMask{},
                                      double rbw = 1e6) {
    mode.cluster.validate();
    const double np = static_cast<double>(mode.cluster.n_pulses);
    const double x = mode.cluster.pulse_width * mode.cluster.symbol_rate;
    const double denom = np * np * x * x;

    const double avg_limit_w =
        dbm_to_watts(mask.average_limit_dbm_per_mhz + 10.0 * std::log10(rbw / 1e6));
    const double peak_limit_w = dbm_to_watts(mask.peak_limit_dbm(rbw));

    const double p_avg = avg_limit_w / denom;
    const double p_peak = peak_limit_w / denom;
    if (p_avg <= p_peak)
        return {watts_to_dbm(p_avg), FccConstraint::average};
    return {watts_to_dbm(p_peak), FccConstraint::peak};
}

/// FBW peak power of a single carrier-modulated component pulse:
/// integral of s^2(t) / (Z_load * T_p) over the pulse window, trapezoidal.
/// The record must span exactly the component-pulse window (its duration
/// is taken as T_p) with at least 16 samples.
inline double fbw_peak_power_of_pulse(const SampledWaveform &rf_pulse,
                                      double load_impedance = kDefaultLoadOhms) {
    if (rf_pulse.is_quadrature())
        throw parameter_error("fbw_peak_power_of_pulse: expects a real-valued waveform");
    if (rf_pulse.size() < 16)
        throw parameter_error("fbw_peak_power_of_pulse: need >= 16 samples per pulse window");
    if (!(load_impedance > 0.0))
        throw parameter_error("fbw_peak_power_of_pulse: load impedance must be positive");
    const double dt = 1.0 / rf_pulse.sample_rate;
    const double t_p = rf_pulse.duration();
    double acc = 0.0;
    for (std::size_t n = 0; n < rf_pulse.size(); ++n) {
        const double w = (n == 0 || n + 1 == rf_pulse.size()) ? 0.5 : 1.0;
        acc += w * rf_pulse.i[n] * rf_pulse.i[n];
    }
    return acc * dt / (load_impedance * t_p);
}

/// The carrier-modulated component pulse s(t) = A * g(t) * cos(w_lo t),
/// sampled over exactly one pulse window [-T_p/2, +T_p/2).
inline SampledWaveform rf_component_pulse(const ClusterSpec &spec, double lo_frequency,
                                          double amplitude, double sample_rate = kRfSampleRate) {
    spec.validate();
    if (sample_rate * spec.pulse_width < 16.0)
        throw parameter_error("rf_component_pulse: sample rate too low");
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    RrcParams pulse = spec.rrc;
    pulse.normalization = amplitude;
    const auto count = static_cast<std::size_t>(std::floor(spec.pulse_width * sample_rate));
    std::vector<double> s(count);
    for (std::size_t n = 0; n < count; ++n) {
        const double t = static_cast<double>(n) / sample_rate - spec.pulse_width / 2.0;
        s[n] = rrc_pulse(pulse, t) * std::cos(two_pi * lo_frequency * t);
    }
    return SampledWaveform(sample_rate, std::move(s), -spec.pulse_width / 2.0);
}

/// Component-pulse amplitude A_TX that puts the FBW peak power of the
/// carrier-modulated RRC pulse exactly at the FCC-derived cap. Power is
/// quadratic in amplitude, so one reference evaluation suffices.
inline double solve_amplitude(const TxMode &mode, const FccMask &mask = FccMask{},
                              double load_impedance = kDefaultLoadOhms,
                              double sample_rate = kRfSampleRate) {
    const FbwPowerCap cap = max_fbw_peak_power(mode, mask);
    const double target_w = dbm_to_watts(cap.p_peak_dbm);
    const SampledWaveform ref =
        rf_component_pulse(mode.cluster, mode.default_lo_hz, 1.0, sample_rate);
    const double p_ref = fbw_peak_power_of_pulse(ref, load_impedance);
    return std::sqrt(target_w / p_ref);
}

/// Check a measured spectrum against both FCC branches. Each bin is
/// normalized to 1 MHz for the average branch; the peak branch scales the
/// 0 dBm / 50 MHz limit down to the measurement RBW.
inline FccVerdict check_fcc(const SpectrumEstimate &spectrum, const FccMask &mask = FccMask{}) {
    if (spectrum.rbw < mask.rbw_min || spectrum.rbw > mask.rbw_max)
        throw parameter_error("check_fcc: rbw outside the mask's [1, 50] MHz range");

    const double avg_norm = 10.0 * std::log10(spectrum.rbw / 1e6);
    const double peak_limit = mask.peak_limit_dbm(spectrum.rbw);

    FccVerdict verdict;
    bool first = true;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const double p = spectrum.bin_powers[k];
        const double margin_avg = mask.average_limit_dbm_per_mhz - (p - avg_norm);
        const double margin_peak = peak_limit - p;
        const double margin = std::min(margin_avg, margin_peak);
        const FccConstraint which =
            margin_avg <= margin_peak ? FccConstraint::average : FccConstraint::peak;
        if (first || margin < verdict.worst_margin_db) {
            verdict.worst_margin_db = margin;
            verdict.worst_frequency_hz = spectrum.bin_frequencies[k];
            verdict.binding_constraint = which;
            first = false;
        }
        if (margin < 0.0)
            verdict.violations.push_back({spectrum.bin_frequencies[k], margin, which});
    }
    verdict.passes = verdict.worst_margin_db >= 0.0;
    return verdict;
}

} // namespace trpc
