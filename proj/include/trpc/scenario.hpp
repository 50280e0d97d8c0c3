// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trpc/channel.hpp"
#include "trpc/cluster.hpp"
#include "trpc/errors.hpp"
#include "trpc/impairments.hpp"

namespace trpc {

/// One simulation scenario: mode selection plus channel, impairment and
/// run parameters. Loaded from a versioned JSON file; every field except
/// `mode` has a sensible default.
///
/// ```json
/// {
///   "schema": 1,
///   "mode": "r250",
///   "lo_frequency_hz": 7.884e9,
///   "amplitude_scale": 1.0,
///   "bits": "10",
///   "impairments": { "dc_offset_i_v": 0, "dc_offset_q_v": 0,
///                    "gain_imbalance_db": 0, "phase_imbalance_deg": 0,
///                    "output_gain_db": 0 },
///   "channel": { "taps": [ { "delay_ns": 0, "gain": 1, "sign": 1 } ],
///                "noise_psd_w_per_hz": 0 },
///   "sweep": { "eb_n0_db": [6, 8, 10, 12, 14, 16, 18] },
///   "seed": 1,
///   "n_symbols": 1000
/// }
/// ```
struct Scenario {
    TxMode mode;
    double lo_frequency_hz = 0.0; ///< 0 = mode default
    double amplitude_scale = 1.0;
    std::string bits = "10";
    ImpairmentConfig impairments;
    ChannelModel channel;
    std::vector<double> sweep_eb_n0_db;
    std::uint64_t seed = 1;
    std::size_t n_symbols = 1000;
    double sample_rate_hz = 0.0; ///< 0 = library default

    double lo_hz() const { return lo_frequency_hz > 0.0 ? lo_frequency_hz : mode.default_lo_hz; }
};

inline Scenario scenario_from_json(const nlohmann::json &j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw parameter_error("scenario: missing or unsupported 'schema' (expected 1)");
    if (!j.contains("mode"))
        throw parameter_error("scenario: missing 'mode'");

    Scenario sc;
    const auto &mode = j.at("mode");
    if (mode.is_string()) {
        sc.mode = find_mode(mode.get<std::string>());
    } else {
        // custom cluster description
        TxMode m;
        m.name = mode.value("name", "custom");
        const auto n_p = mode.at("n_pulses").get<std::size_t>();
        const double t_p = mode.at("pulse_width_ns").get<double>() * 1e-9;
        const double rate = mode.at("symbol_rate_mhz").get<double>() * 1e6;
        const double amp = mode.value("amplitude_v", 1.0);
        const double t_d = mode.value("pulse_delay_ns", 0.0) * 1e-9;
        m.cluster = ClusterSpec::make(n_p, t_p, rate, amp, t_d);
        m.data_rate_mbps = rate / 1e6;
        m.bw_3db_mhz = 0.0;
        m.p_peak_rrc_dbm = 0.0;
        m.max_amplitude = amp;
        m.default_lo_hz = mode.value("lo_frequency_hz", 7.884e9);
        sc.mode = m;
    }

    sc.lo_frequency_hz = j.value("lo_frequency_hz", 0.0);
    sc.amplitude_scale = j.value("amplitude_scale", 1.0);
    if (!(sc.amplitude_scale > 0.0))
        throw parameter_error("scenario: amplitude_scale must be positive");
    sc.bits = j.value("bits", std::string("10"));
    for (char c : sc.bits)
        if (c != '0' && c != '1')
            throw parameter_error("scenario: 'bits' must be a string of 0s and 1s");

    if (j.contains("impairments")) {
        const auto &imp = j.at("impairments");
        sc.impairments.dc_offset_i = imp.value("dc_offset_i_v", 0.0);
        sc.impairments.dc_offset_q = imp.value("dc_offset_q_v", 0.0);
        sc.impairments.gain_imbalance = imp.value("gain_imbalance_db", 0.0);
        sc.impairments.phase_imbalance = imp.value("phase_imbalance_deg", 0.0);
        sc.impairments.output_gain = imp.value("output_gain_db", 0.0);
        sc.impairments.validate();
    }

    if (j.contains("channel")) {
        const auto &chan = j.at("channel");
        if (chan.contains("taps")) {
            sc.channel.taps.clear();
            for (const auto &tap : chan.at("taps")) {
                ChannelTap t;
                t.delay = tap.value("delay_ns", 0.0) * 1e-9;
                t.gain = tap.value("gain", 1.0);
                t.sign = tap.value("sign", 1);
                sc.channel.taps.push_back(t);
            }
        }
        sc.channel.noise_psd = chan.value("noise_psd_w_per_hz", 0.0);
        sc.channel.validate();
    }

    if (j.contains("sweep"))
        sc.sweep_eb_n0_db = j.at("sweep").value("eb_n0_db", std::vector<double>{});
    sc.seed = j.value("seed", std::uint64_t{1});
    sc.n_symbols = j.value("n_symbols", std::size_t{1000});
    sc.sample_rate_hz = j.value("sample_rate_hz", 0.0);
    return sc;
}

inline Scenario load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open scenario file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw parameter_error("scenario parse error in " + path + ": " + e.what());
    }
    return scenario_from_json(j);
}

} // namespace trpc
