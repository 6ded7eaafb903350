#include "fr/svg.hpp"

#include <cstdio>

namespace fr {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, Vec2 window_center,
                       double window_half_width, int pixels) {
    const double r = window_half_width;
    const double scale = pixels / (2.0 * r);
    auto px = [&](Vec2 p) {
        // y flipped: SVG grows downward.
        return Vec2{(p.x - (window_center.x - r)) * scale,
                    ((window_center.y + r) - p.y) * scale};
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(pixels) +
           "\" height=\"" + std::to_string(pixels) + "\" viewBox=\"0 0 " +
           std::to_string(pixels) + " " + std::to_string(pixels) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    ConvexBody2 window = ConvexBody2::box(window_center.x - r, window_center.y - r,
                                          window_center.x + r, window_center.y + r);
    for (const SvgLayer& layer : layers) {
        bool clipped = !layer.body.is_bounded();
        ConvexBody2 shown = intersect(layer.body, window);
        if (shown.is_empty()) continue;
        std::string style = "fill=\"" + layer.fill + "\" fill-opacity=\"" + num(layer.opacity) +
                            "\" stroke=\"" + layer.fill + "\" stroke-width=\"1.5\"" +
                            (clipped ? " stroke-dasharray=\"6 4\"" : "");
        const auto& v = shown.verts();
        if (v.size() == 1) {
            Vec2 p = px(v[0]);
            out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3\" " + style + "/>\n";
        } else if (v.size() == 2 && shown.kind() == BodyKind::Segment) {
            Vec2 a = px(v[0]), b = px(v[1]);
            out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
                   "\" y2=\"" + num(b.y) + "\" " + style + "/>\n";
        } else {
            out += "<polygon points=\"";
            for (size_t i = 0; i < v.size(); ++i) {
                Vec2 p = px(v[i]);
                out += (i ? " " : "") + num(p.x) + "," + num(p.y);
            }
            out += "\" " + style + "/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace fr
