#pragma once

#include <string>
#include <vector>

#include "fr/body.hpp"

namespace fr {

struct SvgLayer {
    ConvexBody2 body;
    std::string fill = "#4477aa";
    double opacity = 0.5;
};

// Renders bodies into a fixed-size SVG document. Unbounded bodies are
// clipped to the view window and drawn with dashed outlines so the clip
// edge is visibly artificial. Output bytes are deterministic.
std::string render_svg(const std::vector<SvgLayer>& layers, Vec2 window_center,
                       double window_half_width, int pixels = 480);

}  // namespace fr
