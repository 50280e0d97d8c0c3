// SPDX-License-Identifier: Apache-2.0
//
// trpc-uwb: TRPC-UWB waveform simulation and compliance toolkit
//
// Umbrella header.

#pragma once

#include "trpc/channel.hpp"
#include "trpc/cluster.hpp"
#include "trpc/compliance.hpp"
#include "trpc/errors.hpp"
#include "trpc/impairments.hpp"
#include "trpc/link.hpp"
#include "trpc/receiver.hpp"
#include "trpc/rrc.hpp"
#include "trpc/scenario.hpp"
#include "trpc/spectrum.hpp"
#include "trpc/waveform.hpp"
