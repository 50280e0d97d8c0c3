// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "trpc/scenario.hpp"

TEST_CASE("scenario parses a full document") {
    const nlohmann::json j = nlohmann::json::parse(R"({
        "schema": 1,
        "mode": "r250",
        "lo_frequency_hz": 7.0e9,
        "amplitude_scale": 2.0,
        "bits": "1100",
        "impairments": { "dc_offset_i_v": 1e-3, "gain_imbalance_db": 0.5,
                         "phase_imbalance_deg": 2.0, "output_gain_db": -3.0 },
        "channel": { "taps": [ { "delay_ns": 0 },
                               { "delay_ns": 1.0, "gain": 0.5, "sign": -1 } ],
                     "noise_psd_w_per_hz": 1e-15 },
        "sweep": { "eb_n0_db": [6, 10, 14] },
        "seed": 99,
        "n_symbols": 2500
    })");
    const auto sc = trpc::scenario_from_json(j);
    CHECK(sc.mode.name == "r250");
    CHECK(sc.lo_hz() == Catch::Approx(7.0e9));
    CHECK(sc.amplitude_scale == 2.0);
    CHECK(sc.bits == "1100");
    CHECK(sc.impairments.dc_offset_i == Catch::Approx(1e-3));
    CHECK(sc.impairments.output_gain == Catch::Approx(-3.0));
    REQUIRE(sc.channel.taps.size() == 2);
    CHECK(sc.channel.taps[1].delay == Catch::Approx(1e-9));
    CHECK(sc.channel.taps[1].sign == -1);
    CHECK(sc.channel.noise_psd == Catch::Approx(1e-15));
    CHECK(sc.sweep_eb_n0_db == std::vector<double>{6.0, 10.0, 14.0});
    CHECK(sc.seed == 99);
    CHECK(sc.n_symbols == 2500);
}

TEST_CASE("scenario defaults") {
    const auto sc = trpc::scenario_from_json({{"schema", 1}, {"mode", "r100"}});
    CHECK(sc.lo_hz() == Catch::Approx(7.884e9));
    CHECK(sc.amplitude_scale == 1.0);
    CHECK(sc.bits == "10");
    CHECK(sc.channel.taps.size() == 1);
    CHECK(sc.channel.noise_psd == 0.0);
    CHECK(sc.sweep_eb_n0_db.empty());
    CHECK(sc.seed == 1);
}

TEST_CASE("scenario custom mode") {
    const nlohmann::json j = {
        {"schema", 1},
        {"mode",
         {{"name", "bench"}, {"n_pulses", 5}, {"pulse_width_ns", 1.0},
          {"symbol_rate_mhz", 50.0}, {"amplitude_v", 0.02}, {"lo_frequency_hz", 5.0e9}}}};
    const auto sc = trpc::scenario_from_json(j);
    CHECK(sc.mode.name == "bench");
    CHECK(sc.mode.cluster.n_pulses == 5);
    CHECK(sc.mode.cluster.pulse_width == Catch::Approx(1e-9));
    CHECK(sc.mode.cluster.symbol_rate == Catch::Approx(50e6));
    CHECK(sc.mode.cluster.amplitude == Catch::Approx(0.02));
    CHECK(sc.lo_hz() == Catch::Approx(5.0e9));
}

TEST_CASE("scenario rejects malformed documents") {
    CHECK_THROWS_AS(trpc::scenario_from_json({{"mode", "r250"}}), trpc::parameter_error);
    CHECK_THROWS_AS(trpc::scenario_from_json({{"schema", 2}, {"mode", "r250"}}),
                    trpc::parameter_error);
    CHECK_THROWS_AS(trpc::scenario_from_json({{"schema", 1}}), trpc::parameter_error);
    CHECK_THROWS_AS(trpc::scenario_from_json({{"schema", 1}, {"mode", "warp9"}}),
                    trpc::parameter_error);
    CHECK_THROWS_AS(trpc::scenario_from_json({{"schema", 1}, {"mode", "r250"}, {"bits", "10x"}}),
                    trpc::parameter_error);
    CHECK_THROWS_AS(
        trpc::scenario_from_json({{"schema", 1}, {"mode", "r250"}, {"amplitude_scale", -1.0}}),
        trpc::parameter_error);
}

TEST_CASE("scenario file loading") {
    const std::string path = "scenario_test.json";
    {
        std::ofstream out(path);
        out << R"({"schema": 1, "mode": "r40"})";
    }
    const auto sc = trpc::load_scenario(path);
    CHECK(sc.mode.name == "r40");
    {
        std::ofstream out(path);
        out << "not json";
    }
    CHECK_THROWS_AS(trpc::load_scenario(path), trpc::parameter_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(trpc::load_scenario("missing.json"), trpc::io_error);
}
