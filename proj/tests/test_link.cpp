// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "trpc/channel.hpp"
#include "trpc/detail/rng.hpp"
#include "trpc/link.hpp"
#include "trpc/receiver.hpp"

namespace {

trpc::SampledWaveform silence(double fs, std::size_t n) {
    return trpc::SampledWaveform(fs, std::vector<double>(n, 0.0));
}

} // namespace

TEST_CASE("gaussian generator moments and determinism") {
    trpc::detail::GaussianRng rng(42);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double v = rng();
        sum += v;
        sum2 += v * v;
    }
    CHECK(sum / n == Catch::Approx(0.0).margin(0.01));
    CHECK(sum2 / n == Catch::Approx(1.0).margin(0.02));

    trpc::detail::GaussianRng a(7), b(7), c(8);
    CHECK(a() == b());
    CHECK(a() != c());
    CHECK(trpc::detail::block_seed(1, 0) != trpc::detail::block_seed(1, 1));
    CHECK(trpc::detail::block_seed(1, 0) != trpc::detail::block_seed(2, 0));
}

TEST_CASE("channel validation") {
    trpc::ChannelModel ch;
    ch.taps = {{0.0, 1.0, 1}, {1e-9, 0.5, -1}};
    ch.validate();
    CHECK(ch.tau_max() == Catch::Approx(1e-9));
    ch.taps[1].sign = 2;
    CHECK_THROWS_AS(ch.validate(), trpc::parameter_error);
    ch.taps = {{1e-9, 1.0, 1}, {0.5e-9, 1.0, 1}};
    CHECK_THROWS_AS(ch.validate(), trpc::parameter_error);
    ch.taps = {};
    CHECK_THROWS_AS(ch.validate(), trpc::parameter_error);
}

TEST_CASE("channel applies taps on the sample grid") {
    const double fs = 40e9;
    trpc::SampledWaveform x(fs, {1.0, 0.0, 0.0, 0.0});
    trpc::ChannelModel ch;
    ch.taps = {{0.0, 1.0, 1}, {0.1e-9, 0.5, -1}}; // 4 samples at 40 GS/s
    const auto y = trpc::apply_channel(x, ch, 0);
    REQUIRE(y.size() == 8);
    CHECK(y.i[0] == 1.0);
    CHECK(y.i[4] == -0.5);

    ch.taps = {{0.0, 1.0, 1}, {0.11e-9, 1.0, 1}}; // 4.4 samples, off the grid
    CHECK_THROWS_AS(trpc::apply_channel(x, ch, 0), trpc::parameter_error);
}

TEST_CASE("noise generation hits the configured spectral density") {
    const double fs = 10e9;
    const double n0 = 4e-15; // W/Hz -> power n0*fs/2 = 2e-5 W
    trpc::ChannelModel ch;
    ch.noise_psd = n0;
    const auto y = trpc::apply_channel(silence(fs, 400000), ch, 1234);
    CHECK(trpc::waveform_power(y) == Catch::Approx(n0 * fs / 2.0).epsilon(0.02));

    // deterministic under the seed
    const auto y2 = trpc::apply_channel(silence(fs, 400000), ch, 1234);
    CHECK(y.i[123] == y2.i[123]);
}

TEST_CASE("demodulation recovers the baseband envelope") {
    const auto &mode = trpc::find_mode("r100");
    const double fs = 40e9;
    const auto bb = trpc::synth_frame(std::vector<int>{1, 0, 1, 1, 0, 0, 1, 0}, mode.cluster, fs);
    const trpc::LoConfig lo{mode.default_lo_hz, 0.0, 1.0};
    const auto rf = trpc::upconvert_iq(bb, trpc::zero_like(bb), lo);
    auto [i, q] = trpc::demodulate_iq(rf, lo, trpc::receiver_lpf_cutoff(mode.cluster));

    double err2 = 0.0, ref2 = 0.0, q2 = 0.0;
    for (std::size_t n = 0; n < bb.size(); ++n) {
        err2 += (i.i[n] - bb.i[n]) * (i.i[n] - bb.i[n]);
        ref2 += bb.i[n] * bb.i[n];
        q2 += q.i[n] * q.i[n];
    }
    CHECK(std::sqrt(err2 / ref2) < 0.08); // I rail tracks the envelope
    CHECK(q2 / ref2 < 0.01);              // Q rail stays quiet

    CHECK_THROWS_AS(trpc::demodulate_iq(rf, lo, 0.0), trpc::parameter_error);
    CHECK_THROWS_AS(trpc::demodulate_iq(rf, lo, 9e9), trpc::parameter_error);
}

TEST_CASE("detector decisions are invariant to the receiver LO phase") {
    const auto &mode = trpc::find_mode("r100");
    const double fs = 40e9;
    trpc::detail::GaussianRng rng(5);
    std::vector<int> bits(64);
    for (int &b : bits)
        b = rng.bit();
    const auto bb = trpc::synth_frame(bits, mode.cluster, fs);
    const auto rf = trpc::upconvert_iq(bb, bb, {mode.default_lo_hz, 0.0, 1.0});
    trpc::ChannelModel ch;
    ch.noise_psd = trpc::rf_energy_per_bit(mode, {}) / std::pow(10.0, 1.2); // 12 dB Eb/N0
    const auto rx = trpc::apply_channel(rf, ch, 77);

    std::vector<int> reference;
    for (double phase_deg : {0.0, 45.0, 90.0, 137.0}) {
        const trpc::LoConfig rx_lo{mode.default_lo_hz, phase_deg * 3.14159265358979323846 / 180.0,
                                   1.0};
        auto [i, q] = trpc::demodulate_iq(rx, rx_lo, trpc::receiver_lpf_cutoff(mode.cluster));
        const auto decided = trpc::autocorr_detect(i, q, mode.cluster);
        if (reference.empty())
            reference = decided;
        else
            REQUIRE(decided == reference);
    }
}

TEST_CASE("noiseless loopback is error free") {
    const auto &mode = trpc::find_mode("r250");
    const auto res = trpc::run_ser(mode, trpc::ChannelModel::ideal(), {}, 400, 11);
    CHECK(res.symbols_sent == 400);
    CHECK(res.symbol_errors == 0);
    CHECK(res.ser == 0.0);
    CHECK(std::isinf(res.eb_n0_db));
}

TEST_CASE("noiseless two-path channel inside the guard is error free") {
    const auto &mode = trpc::find_mode("r100");
    trpc::ChannelModel ch;
    ch.taps = {{0.0, 1.0, 1}, {2e-9, 0.6, -1}};
    const auto res = trpc::run_ser(mode, ch, {}, 300, 3);
    CHECK(res.symbol_errors == 0);
}

TEST_CASE("guard inequality is enforced") {
    const auto &mode = trpc::find_mode("r250"); // T_s = 4 ns, N_p*T_d = 2.55 ns
    trpc::ChannelModel ch;
    ch.taps = {{0.0, 1.0, 1}, {2e-9, 0.5, 1}};
    CHECK_THROWS_AS(trpc::run_ser(mode, ch, {}, 200, 1), trpc::guard_error);
    CHECK_THROWS_AS(trpc::run_ser(mode, trpc::ChannelModel::ideal(), {}, 50, 1),
                    trpc::parameter_error);
}

TEST_CASE("monte carlo results are reproducible and seed sensitive") {
    const auto &mode = trpc::find_mode("r250");
    trpc::ChannelModel ch;
    ch.noise_psd = trpc::noise_psd_for_ebn0(mode, {}, 8.0);
    const auto a = trpc::run_ser(mode, ch, {}, 500, 21);
    const auto b = trpc::run_ser(mode, ch, {}, 500, 21);
    CHECK(a.symbol_errors == b.symbol_errors);
    CHECK(a.eb_n0_db == Catch::Approx(8.0).margin(1e-6));
    CHECK(a.ci95_halfwidth > 0.0);

    // a different seed draws different noise and bits
    const auto c = trpc::run_ser(mode, ch, {}, 500, 22);
    CHECK(c.symbol_errors != a.symbol_errors);
}

TEST_CASE("energy per pulse matches the bench figures") {
    const trpc::PowerProfile profile{1.2, 24e-3, 1.0};
    const auto r250 = trpc::energy_per_pulse(profile, trpc::find_mode("r250"));
    CHECK(r250.energy_per_pulse_pj == Catch::Approx(38.4).epsilon(0.01));
    CHECK(r250.pulses_per_second == Catch::Approx(7.5e8));
    CHECK(r250.average_power_w == Catch::Approx(28.8e-3));

    const auto r300 = trpc::energy_per_pulse(profile, trpc::find_mode("r300"));
    CHECK(r300.energy_per_pulse_pj == Catch::Approx(48.0).epsilon(0.01));

    CHECK_THROWS_AS(trpc::energy_per_pulse({0.0, 24e-3, 1.0}, trpc::find_mode("r250")),
                    trpc::parameter_error);
}
