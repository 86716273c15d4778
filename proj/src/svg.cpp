#include <convexgeo/svg.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>

namespace convexgeo {

namespace {

constexpr std::array<const char*, kMaxColors> kStrokes{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                                       "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string stroke_of(const RepresentationFile& file, Element e) {
    if (!file.colors) return "#000000";
    const ColorMask m = file.colors->colors_of(e);
    if (m == 0) return "#000000";
    return kStrokes[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(m)))];
}

std::string escaped(char c) {
    switch (c) {
        case '<': return "&lt;";
        case '>': return "&gt;";
        case '&': return "&amp;";
        case '"': return "&quot;";
        default: return std::string(1, c);
    }
}

}  // namespace

std::string render_svg(const RepresentationFile& file) {
    std::vector<SupportBody> bodies;
    for (const auto& b : file.bodies) bodies.push_back(b.body());
    const Box box = bounds(bodies);
    const double w = box.xmax - box.xmin;
    const double h = box.ymax - box.ymin;
    const double span = std::max({w, h, 1e-9});
    const double margin = 0.1 * span;
    const double stroke = 0.005 * span;
    const double font = 0.04 * span;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed(box.xmin - margin) + " " +
           fixed(-box.ymax - margin) + " " + fixed(w + 2 * margin) + " " + fixed(h + 2 * margin) + "\">\n";
    for (std::size_t i = 0; i < file.bodies.size(); ++i) {
        const BodySpec& b = file.bodies[i];
        const std::string common = " fill=\"none\" stroke=\"" + stroke_of(file, static_cast<Element>(i)) +
                                   "\" stroke-width=\"" + fixed(stroke) + "\"";
        const std::string cx = fixed(b.cx);
        const std::string cy = fixed(-b.cy);
        if (b.kind == BodySpec::Kind::Disk) {
            out += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + fixed(b.rx) + "\"" + common + "/>\n";
        } else {
            out += "  <ellipse cx=\"" + cx + "\" cy=\"" + cy + "\" rx=\"" + fixed(b.rx) + "\" ry=\"" + fixed(b.ry) +
                   "\" transform=\"rotate(" + fixed(-b.rot_deg) + " " + cx + " " + cy + ")\"" + common + "/>\n";
        }
    }
    for (std::size_t i = 0; i < file.bodies.size(); ++i) {
        const BodySpec& b = file.bodies[i];
        out += "  <text x=\"" + fixed(b.cx) + "\" y=\"" + fixed(-b.cy) + "\" font-size=\"" + fixed(font) +
               "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               escaped(file.ground.label(static_cast<Element>(i))) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace convexgeo
