#pragma once

#include <string>

#include "warptf/transform.hpp"

namespace warptf {

// On-disk signal format: one JSON header line (axis count, per-axis {n, extent},
// element count) terminated by '\n', followed by the samples as raw
// little-endian complex128 (interleaved re, im) in row-major grid order.
// Values are frequency-side samples on the centered grids.

void write_signal(const std::string& path, const SampledSignal& sig);
SampledSignal read_signal(const std::string& path);

}  // namespace warptf
