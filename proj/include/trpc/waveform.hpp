// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trpc/errors.hpp"

namespace trpc {

/// Default instrument load impedance in ohms.
inline constexpr double kDefaultLoadOhms = 50.0;

/// Default sample rate for RF-band (carrier-modulated) waveforms.
inline constexpr double kRfSampleRate = 40e9;

/// Default sample rate for baseband waveforms.
inline constexpr double kBasebandSampleRate = 10e9;

/// Uniformly sampled signal in volts. A waveform is either real-valued
/// (`q` empty) or a quadrature pair of equal-length rails `i`/`q`.
/// Samples are validated finite at construction and treated as immutable
/// afterwards; all operations on waveforms are pure functions.
class SampledWaveform {
  public:
    double sample_rate = 0.0; ///< Hz
    double start_time = 0.0;  ///< s
    std::vector<double> i;    ///< in-phase rail (or the real signal)
    std::vector<double> q;    ///< quadrature rail, empty for real signals

    SampledWaveform() = default;

    SampledWaveform(double sample_rate_hz, std::vector<double> samples, double start_time_s = 0.0)
        : sample_rate(sample_rate_hz), start_time(start_time_s), i(std::move(samples)) {
        validate();
    }

    SampledWaveform(double sample_rate_hz, std::vector<double> i_rail, std::vector<double> q_rail,
                    double start_time_s = 0.0)
        : sample_rate(sample_rate_hz), start_time(start_time_s), i(std::move(i_rail)),
          q(std::move(q_rail)) {
        validate();
    }

    bool is_quadrature() const { return !q.empty(); }
    std::size_t size() const { return i.size(); }
    double duration() const { return static_cast<double>(i.size()) / sample_rate; }

    void validate() const {
        if (!(sample_rate > 0.0))
            throw parameter_error("SampledWaveform: sample_rate must be positive");
        if (i.empty())
            throw parameter_error("SampledWaveform: needs at least one sample");
        if (!q.empty() && q.size() != i.size())
            throw parameter_error("SampledWaveform: I and Q rails differ in length");
        for (double v : i)
            if (!std::isfinite(v))
                throw parameter_error("SampledWaveform: non-finite sample on I rail");
        for (double v : q)
            if (!std::isfinite(v))
                throw parameter_error("SampledWaveform: non-finite sample on Q rail");
    }
};

/// Mean signal power over the record in watts: mean(v^2)/Z for real
/// waveforms, mean(i^2 + q^2)/Z for quadrature pairs.
inline double waveform_power(const SampledWaveform &wave, double load_impedance = kDefaultLoadOhms) {
    if (wave.size() == 0)
        throw parameter_error("waveform_power: empty waveform");
    if (!(load_impedance > 0.0))
        throw parameter_error("waveform_power: load impedance must be positive");
    double acc = 0.0;
    for (double v : wave.i)
        acc += v * v;
    for (double v : wave.q)
        acc += v * v;
    return acc / (static_cast<double>(wave.size()) * load_impedance);
}

/// Energy of the record in joules, trapezoidal in time: integral of
/// v^2(t)/Z dt.
inline double waveform_energy(const SampledWaveform &wave, double load_impedance = kDefaultLoadOhms) {
    return waveform_power(wave, load_impedance) * wave.duration();
}

inline double watts_to_dbm(double power_w) {
    if (!(power_w > 0.0))
        throw parameter_error("watts_to_dbm: power must be positive");
    return 10.0 * std::log10(power_w * 1e3);
}

inline double dbm_to_watts(double power_dbm) { return std::pow(10.0, power_dbm / 10.0) * 1e-3; }

inline double db_ratio(double p_num, double p_den) { return 10.0 * std::log10(p_num / p_den); }

// --- waveform file format ---------------------------------------------------
//
// Plain CSV with three header lines, then one sample per row:
//
//   sample_rate_hz,<value>
//   start_time_s,<value>
//   channels,<1|2>
//   v0            (channels = 1)
//   i0,q0         (channels = 2)

inline void write_waveform_csv(const SampledWaveform &wave, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open for writing: " + path);
    out.precision(17);
    out << "sample_rate_hz," << wave.sample_rate << "\n";
    out << "start_time_s," << wave.start_time << "\n";
    out << "channels," << (wave.is_quadrature() ? 2 : 1) << "\n";
    for (std::size_t n = 0; n < wave.size(); ++n) {
        out << wave.i[n];
        if (wave.is_quadrature())
            out << "," << wave.q[n];
        out << "\n";
    }
    if (!out)
        throw io_error("write failed: " + path);
}

inline SampledWaveform read_waveform_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open for reading: " + path);
    auto header = [&](const std::string &key) {
        std::string line;
        if (!std::getline(in, line))
            throw io_error("truncated header in " + path);
        auto comma = line.find(',');
        if (comma == std::string::npos || line.substr(0, comma) != key)
            throw io_error("expected header '" + key + "' in " + path);
        return std::stod(line.substr(comma + 1));
    };
    const double fs = header("sample_rate_hz");
    const double t0 = header("start_time_s");
    const int channels = static_cast<int>(header("channels"));
    if (channels != 1 && channels != 2)
        throw io_error("channels must be 1 or 2 in " + path);

    std::vector<double> i, q;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        double a = 0.0, b = 0.0;
        char sep = 0;
        row >> a;
        i.push_back(a);
        if (channels == 2) {
            row >> sep >> b;
            q.push_back(b);
        }
    }
    if (channels == 2)
        return SampledWaveform(fs, std::move(i), std::move(q), t0);
    return SampledWaveform(fs, std::move(i), t0);
}

} // namespace trpc
