// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit

#pragma once

#include <stdexcept>
#include <string>

namespace trpc {

/// Invalid argument or inconsistent input (bad sample rate, mismatched
/// lengths, out-of-range configuration).
class parameter_error : public std::invalid_argument {
  public:
    explicit parameter_error(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Input is outside the validity regime of a closed-form model
/// (e.g. pulse repetition rate not large against the resolution bandwidth).
class regime_error : public std::domain_error {
  public:
    explicit regime_error(const std::string &msg) : std::domain_error(msg) {}
};

/// Violation of the inter-symbol guard inequality T_s >= N_p*T_d + tau_max.
class guard_error : public std::runtime_error {
  public:
    explicit guard_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// File input/output failure, message carries the offending path.
class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace trpc
