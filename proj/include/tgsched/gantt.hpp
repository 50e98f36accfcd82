#pragma once

#include <string>

#include "tgsched/schedule.hpp"

namespace tgsched {

/// Horizontal scale of the SVG chart.
inline constexpr int kSvgPixelsPerTimeUnit = 4;

/// One line per processor:
///   P0: [0..2) t0 [2..5) t1
/// Placements on a lane appear in start order (ties by task id).
std::string render_gantt_text(const Schedule& s);

/// Standalone SVG: one row per processor, one rect per placement, time on the
/// x-axis at kSvgPixelsPerTimeUnit pixels per time unit.
std::string render_gantt_svg(const Schedule& s);

}  // namespace tgsched
