// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

#include <string>

#include "curvant/angular_grid.hpp"
#include "curvant/geometry.hpp"

namespace curvant::geom {

// ASCII NEC2 card deck (CM/CE/GW/GE/EX/FR/RP/EN) for external cross-checks
// with NEC2 or 4NEC2. Consecutive collinear segments of equal radius are
// coalesced into one GW card; excitations become EX cards whose voltage sign
// carries the feed phase. Frequency is emitted in MHz as NEC requires.
std::string export_nec_deck(const WireModel& model, double frequency_hz,
                            const AngularGrid& pattern_request);

} // namespace curvant::geom
