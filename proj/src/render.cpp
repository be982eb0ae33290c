#include "sk/render.hpp"

#include "sk/curve.hpp"
#include "sk/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sk {
namespace {

// Locale-independent fixed-point formatting with two decimals, so the
// document bytes depend only on the spec.
std::string fmt(double v) {
    long scaled = std::lround(v * 100.0);
    std::string out;
    if (scaled < 0) {
        out += '-';
        scaled = -scaled;
    }
    out += std::to_string(scaled / 100);
    const long frac = scaled % 100;
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

struct Mapper {
    double scale;
    double margin;
    double height;

    double px(double x) const { return margin + x * scale; }
    double py(double y) const { return height - margin - y * scale; }
};

double centroid_x(const OrientedFraction& f) {
    return (f.entry.x.to_double() + f.right_angle.x.to_double() + f.exit.x.to_double()) / 3.0;
}

double centroid_y(const OrientedFraction& f) {
    return (f.entry.y.to_double() + f.right_angle.y.to_double() + f.exit.y.to_double()) / 3.0;
}

}  // namespace

std::string render_traversal_svg(const RenderSpec& spec) {
    if (spec.order < 1 || spec.order > 16) {
        throw std::domain_error("render order must be between 1 and 16");
    }
    if (spec.canvas_size < 64 || spec.canvas_size > 8192) {
        throw std::domain_error("render canvas size must be between 64 and 8192");
    }

    const double width = spec.canvas_size;
    const double margin = width * 0.05;
    // The triangle spans [0,2] x [0,1]; scale x to fill the inner width.
    const double scale = (width - 2.0 * margin) / 2.0;
    const double height = 2.0 * margin + scale;
    const Mapper map{scale, margin, height};

    const std::vector<OrientedFraction> cells = tiling(spec.order);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    svg += fmt(width);
    svg += "\" height=\"";
    svg += fmt(height);
    svg += "\" viewBox=\"0 0 ";
    svg += fmt(width);
    svg += " ";
    svg += fmt(height);
    svg += "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" fill=\"#ffffff\"/>\n";

    if (spec.show_subdivision) {
        svg += "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\" fill=\"none\">\n";
        for (const auto& f : cells) {
            svg += "<path d=\"M ";
            svg += fmt(map.px(f.entry.x.to_double())) + " " + fmt(map.py(f.entry.y.to_double()));
            svg += " L " + fmt(map.px(f.right_angle.x.to_double())) + " " +
                   fmt(map.py(f.right_angle.y.to_double()));
            svg += " L " + fmt(map.px(f.exit.x.to_double())) + " " + fmt(map.py(f.exit.y.to_double()));
            svg += " Z\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "<polyline fill=\"none\" stroke=\"#1d4f91\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) svg += " ";
        svg += fmt(map.px(centroid_x(cells[i]))) + "," + fmt(map.py(centroid_y(cells[i])));
    }
    svg += "\"/>\n";

    if (spec.arrow_at_end && cells.size() >= 2) {
        const auto& last = cells.back();
        const auto& prev = cells[cells.size() - 2];
        const double x1 = map.px(centroid_x(prev));
        const double y1 = map.py(centroid_y(prev));
        const double x2 = map.px(centroid_x(last));
        const double y2 = map.py(centroid_y(last));
        const double dx = x2 - x1;
        const double dy = y2 - y1;
        const double len = std::hypot(dx, dy);
        if (len > 1e-9) {
            const double ux = dx / len;
            const double uy = dy / len;
            const double size = std::max(4.0, width * 0.015);
            const double bx = x2 - size * ux;
            const double by = y2 - size * uy;
            const double nx = -uy * size * 0.5;
            const double ny = ux * size * 0.5;
            svg += "<polygon fill=\"#1d4f91\" points=\"";
            svg += fmt(x2) + "," + fmt(y2) + " ";
            svg += fmt(bx + nx) + "," + fmt(by + ny) + " ";
            svg += fmt(bx - nx) + "," + fmt(by - ny);
            svg += "\"/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace sk
