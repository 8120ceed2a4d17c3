#include "hyptom/svg.hpp"

#include <cmath>
#include <cstdio>

namespace hyptom {

namespace {

std::string num(double x) {
    if (std::fabs(x) < 5e-7) x = 0.0; // avoid "-0.000000"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string polyline_path(const std::vector<ModelPoint>& pts, bool close) {
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
        d += (i == 0 ? "M" : "L");
        d += num(pts[i].u) + " " + num(pts[i].v);
    }
    if (close) d += "Z";
    return d;
}

std::vector<ModelPoint> geodesic_polyline(const Geodesic& g, double t0, double t1, int n) {
    std::vector<ModelPoint> pts;
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        pts.push_back(to_model(point_at(g, t0 + (t1 - t0) * i / n), Model::disc));
    return pts;
}

} // namespace

std::string render_svg(const Body& K, const std::vector<RenderLine>& lines) {
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" "
        "width=\"600\" height=\"600\">\n"
        "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\">\n"
        "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#888888\" stroke-width=\"0.008\"/>\n";

    auto B = boundary(K, 1024);
    std::vector<ModelPoint> outline;
    outline.reserve(B.size());
    for (const auto& s : B) outline.push_back(to_model(s.x, Model::disc));
    svg += "<path d=\"" + polyline_path(outline, true) +
           "\" stroke=\"#1f3d99\" stroke-width=\"0.010\" fill=\"#1f3d99\" "
           "fill-opacity=\"0.08\"/>\n";

    for (const auto& rl : lines) {
        svg += "<path d=\"" + polyline_path(geodesic_polyline(rl.g, -7.0, 7.0, 128), false) +
               "\" stroke=\"#666666\" stroke-width=\"0.006\"/>\n";
        if (rl.proj)
            svg += "<path d=\"" +
                   polyline_path(geodesic_polyline(rl.g, rl.proj->t_lo, rl.proj->t_hi, 64),
                                 false) +
                   "\" stroke=\"#d07000\" stroke-width=\"0.014\"/>\n";
        if (rl.sec)
            svg += "<path d=\"" +
                   polyline_path(geodesic_polyline(rl.g, rl.sec->t_lo, rl.sec->t_hi, 64),
                                 false) +
                   "\" stroke=\"#b02020\" stroke-width=\"0.020\"/>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace hyptom
