#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyptom/tomography.hpp"

namespace hyptom {

struct RenderLine {
    Geodesic g;
    std::optional<Interval> proj;
    std::optional<Interval> sec;
};

// Poincare disc view: unit circle, body outline, geodesics with highlighted
// projection/section intervals. Deterministic output.
std::string render_svg(const Body& K, const std::vector<RenderLine>& lines);

} // namespace hyptom
