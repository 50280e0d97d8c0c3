// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trpc/errors.hpp"
#include "trpc/rrc.hpp"
#include "trpc/waveform.hpp"

namespace trpc {

/// TRPC signaling parameters for one transmit mode.
///
/// A symbol is a cluster of `n_pulses` reference/data doublets: reference
/// pulses at offsets 2*i*T_d, data pulses at 2*i*T_d + T_d carrying the
/// bit polarity (+1 for bit 1, -1 for bit 0). Reference pulses are always
/// positive, so bit 1 yields an all-positive cluster and bit 0 an
/// alternating +,-,+,- pattern.
struct ClusterSpec {
    std::size_t n_pulses;   ///< N_p, number of doublet pairs per cluster
    double pulse_width;     ///< T_p, s
    double pulse_delay;     ///< T_d, s (>= T_p)
    double symbol_duration; ///< T_s, s
    double symbol_rate;     ///< R = 1/T_s, Hz
    double amplitude;       ///< component-pulse peak, V
    RrcParams rrc;

    void validate() const {
        if (n_pulses < 1)
            throw parameter_error("ClusterSpec: need at least one doublet");
        if (!(pulse_width > 0.0 && pulse_delay > 0.0 && symbol_duration > 0.0))
            throw parameter_error("ClusterSpec: durations must be positive");
        if (pulse_delay < pulse_width * (1.0 - 1e-12))
            throw parameter_error("ClusterSpec: pulse_delay must be >= pulse_width");
        if (!(symbol_rate > 0.0) ||
            std::fabs(symbol_rate * symbol_duration - 1.0) > 1e-9)
            throw parameter_error("ClusterSpec: symbol_rate must equal 1/symbol_duration");
        if (!(amplitude > 0.0))
            throw parameter_error("ClusterSpec: amplitude must be positive");
        rrc.validate();
    }

    /// Time span actually occupied by one cluster (may exceed T_s for the
    /// highest-rate modes, where consecutive clusters overlap-add).
    double cluster_span() const {
        return 2.0 * static_cast<double>(n_pulses - 1) * pulse_delay + pulse_delay + pulse_width;
    }

    /// E_b: baseband energy per bit in joules, derived from the amplitude
    /// (2*N_p pulses of energy A^2 * integral(g_norm^2) / Z each).
    double energy_per_bit(double load_impedance = kDefaultLoadOhms) const {
        RrcParams scaled = rrc;
        scaled.normalization = amplitude;
        return 2.0 * static_cast<double>(n_pulses) * rrc_pulse_energy(scaled) / load_impedance;
    }

    static ClusterSpec make(std::size_t n_pulses, double pulse_width, double symbol_rate,
                            double amplitude, double pulse_delay = 0.0) {
        ClusterSpec s{};
        s.n_pulses = n_pulses;
        s.pulse_width = pulse_width;
        s.pulse_delay = pulse_delay > 0.0 ? pulse_delay : pulse_width;
        s.symbol_rate = symbol_rate;
        s.symbol_duration = 1.0 / symbol_rate;
        s.amplitude = amplitude;
        s.rrc = RrcParams::for_pulse_width(pulse_width);
        s.validate();
        return s;
    }
};

/// Local-oscillator settings for up/down conversion.
struct LoConfig {
    double frequency; ///< Hz
    double phase = 0.0;
    double amplitude = 1.0;

    void validate() const {
        if (!(frequency > 0.0))
            throw parameter_error("LoConfig: frequency must be positive");
    }
};

/// One row of the built-in mode registry: TRPC cluster parameters plus
/// the published design-table figures they were derived from.
struct TxMode {
    std::string name;        ///< preset name, e.g. "r250"
    double data_rate_mbps;   ///< Mbps
    ClusterSpec cluster;
    double bw_3db_mhz;       ///< design-table baseband 3 dB bandwidth
    double p_peak_rrc_dbm;   ///< design-table FBW peak power cap
    double max_amplitude;    ///< design-table max component-pulse amplitude, V
    double default_lo_hz;    ///< bench carrier used for this band
};

/// The seven design-table presets (r10 ... r300). Cluster amplitudes are
/// initialized to the published max-amplitude column.
inline const std::vector<TxMode> &mode_registry() {
    static const std::vector<TxMode> registry = [] {
        struct Row {
            const char *name;
            double rate_mbps, n_p, t_p_ns, bw_mhz, p_dbm, amp_mv, lo_hz;
        };
        constexpr std::array<Row, 7> rows{{
            {"r10", 10.0, 8, 1.65, 650, -23.47, 32.8, 3.827e9},
            {"r20", 20.0, 8, 1.65, 650, -29.47, 16.4, 3.827e9},
            {"r40", 40.0, 8, 0.85, 1180, -29.47, 16.4, 7.884e9},
            {"r100", 100.0, 4, 0.85, 1180, -31.93, 12.36, 7.884e9},
            {"r200", 200.0, 4, 0.85, 1180, -37.9, 6.21, 7.884e9},
            {"r250", 250.0, 3, 0.85, 1180, -37.3, 6.63, 7.884e9},
            {"r300", 300.0, 2, 0.85, 1180, -35.4, 8.28, 7.884e9},
        }};
        std::vector<TxMode> modes;
        for (const Row &r : rows) {
            TxMode m;
            m.name = r.name;
            m.data_rate_mbps = r.rate_mbps;
            m.cluster = ClusterSpec::make(static_cast<std::size_t>(r.n_p), r.t_p_ns * 1e-9,
                                          r.rate_mbps * 1e6, r.amp_mv * 1e-3);
            m.bw_3db_mhz = r.bw_mhz;
            m.p_peak_rrc_dbm = r.p_dbm;
            m.max_amplitude = r.amp_mv * 1e-3;
            m.default_lo_hz = r.lo_hz;
            modes.push_back(m);
        }
        return modes;
    }();
    return registry;
}

inline const TxMode &find_mode(std::string_view name) {
    for (const TxMode &m : mode_registry())
        if (m.name == name)
            return m;
    throw parameter_error("unknown mode preset: " + std::string(name) +
                          " (expected one of r10 r20 r40 r100 r200 r250 r300)");
}

namespace detail {

/// Overlap-add one pulse centered at `center` seconds into `dst`.
/// Pulse support is treated half-open, [center - trunc, center + trunc),
/// so abutting pulses never share a sample.
inline void add_pulse(std::vector<double> &dst, double fs, const RrcParams &rrc, double center,
                      double scale) {
    const auto n0 = static_cast<std::ptrdiff_t>(std::ceil((center - rrc.truncation) * fs - 1e-9));
    const auto n1 = static_cast<std::ptrdiff_t>(std::ceil((center + rrc.truncation) * fs - 1e-9));
    for (std::ptrdiff_t n = std::max<std::ptrdiff_t>(n0, 0);
         n < std::min<std::ptrdiff_t>(n1, static_cast<std::ptrdiff_t>(dst.size())); ++n) {
        const double t = static_cast<double>(n) / fs - center;
        dst[static_cast<std::size_t>(n)] += scale * rrc_pulse(rrc, t);
    }
}

inline void synth_cluster_into(std::vector<double> &dst, double fs, const ClusterSpec &spec,
                               int bit, double symbol_start) {
    RrcParams pulse = spec.rrc;
    pulse.normalization = spec.amplitude;
    const double polarity = bit ? 1.0 : -1.0;
    const double half = spec.pulse_width / 2.0;
    for (std::size_t i = 0; i < spec.n_pulses; ++i) {
        const double ref_center = symbol_start + 2.0 * static_cast<double>(i) * spec.pulse_delay + half;
        add_pulse(dst, fs, pulse, ref_center, 1.0);
        add_pulse(dst, fs, pulse, ref_center + spec.pulse_delay, polarity);
    }
}

inline void check_cluster_sampling(const ClusterSpec &spec, double fs) {
    spec.validate();
    if (fs * spec.pulse_width < 16.0)
        throw parameter_error("synth: sample rate too low (need >= 16 samples per pulse width)");
}

} // namespace detail

/// Baseband waveform of a single TRPC symbol. The record covers at least
/// one symbol duration (longer when the cluster physically outlasts T_s).
inline SampledWaveform synth_cluster(const ClusterSpec &spec, int bit,
                                     double sample_rate = kBasebandSampleRate) {
    detail::check_cluster_sampling(spec, sample_rate);
    const double span = std::max(spec.symbol_duration, spec.cluster_span());
    std::vector<double> samples(static_cast<std::size_t>(std::ceil(span * sample_rate)), 0.0);
    detail::synth_cluster_into(samples, sample_rate, spec, bit, 0.0);
    return SampledWaveform(sample_rate, std::move(samples));
}

/// Baseband TRPC frame: clusters at symbol spacing T_s, overlap-added.
inline SampledWaveform synth_frame(const std::vector<int> &bits, const ClusterSpec &spec,
                                   double sample_rate = kBasebandSampleRate) {
    if (bits.empty())
        throw parameter_error("synth_frame: empty bit sequence");
    detail::check_cluster_sampling(spec, sample_rate);
    const double duration = static_cast<double>(bits.size()) * spec.symbol_duration;
    std::vector<double> samples(static_cast<std::size_t>(std::ceil(duration * sample_rate)), 0.0);
    for (std::size_t m = 0; m < bits.size(); ++m)
        detail::synth_cluster_into(samples, sample_rate, spec, bits[m],
                                   static_cast<double>(m) * spec.symbol_duration);
    return SampledWaveform(sample_rate, std::move(samples));
}

/// Ideal quadrature up-conversion: i(t)*cos(w t + phi) - q(t)*sin(w t + phi),
/// scaled by the LO amplitude. With q = 0 this is the single-rail
/// carrier-modulated pulse train.
inline SampledWaveform upconvert_iq(const SampledWaveform &i_baseband,
                                    const SampledWaveform &q_baseband, const LoConfig &lo) {
    lo.validate();
    if (i_baseband.sample_rate != q_baseband.sample_rate ||
        i_baseband.size() != q_baseband.size())
        throw parameter_error("upconvert_iq: I and Q waveforms must share rate and length");
    if (i_baseband.is_quadrature() || q_baseband.is_quadrature())
        throw parameter_error("upconvert_iq: rails must be real-valued waveforms");
    if (lo.frequency >= i_baseband.sample_rate / 2.0)
        throw parameter_error("upconvert_iq: LO frequency violates Nyquist");

    const double fs = i_baseband.sample_rate;
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<double> rf(i_baseband.size());
    for (std::size_t n = 0; n < rf.size(); ++n) {
        const double t = i_baseband.start_time + static_cast<double>(n) / fs;
        const double arg = two_pi * lo.frequency * t + lo.phase;
        rf[n] = lo.amplitude * (i_baseband.i[n] * std::cos(arg) - q_baseband.i[n] * std::sin(arg));
    }
    return SampledWaveform(fs, std::move(rf), i_baseband.start_time);
}

/// Convenience: zero waveform matching an existing one.
inline SampledWaveform zero_like(const SampledWaveform &wave) {
    return SampledWaveform(wave.sample_rate, std::vector<double>(wave.size(), 0.0),
                           wave.start_time);
}

} // namespace trpc
