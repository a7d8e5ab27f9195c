#pragma once

#include <string>

#include "gqs/basis.hpp"

namespace gqs::cli {

/// Static plot of the curve (sampled at the given dyadic level per
/// interval), its spline control polygon and every local control polygon.
std::string render_svg(const GqsSpline& spline, int levels);

}  // namespace gqs::cli
