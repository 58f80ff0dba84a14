#pragma once

#include "qrecall/experiments.hpp"

#include <string>

namespace qrecall {

// Self-contained SVG scatter of a sweep: one dot per record (stride-thinned
// above 2000 points), occupied bin means as a polyline, the bin-level fit as a
// dashed segment. Variance ratio on x, success on y, both in [0, 1]. Fixed
// canvas, no external references.
std::string sweep_scatter_svg(const SweepConfig& config, const SweepSummary& summary);

} // namespace qrecall
