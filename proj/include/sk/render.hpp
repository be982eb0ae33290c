#pragma once

#include <string>

namespace sk {

struct RenderSpec {
    unsigned order = 6;         // subdivision order; 2^order fractions
    unsigned canvas_size = 512; // pixel width of the drawing
    bool show_subdivision = false;
    bool arrow_at_end = true;
};

// Deterministic SVG 1.1 document tracing the traversal order: a polyline
// through the centroid of each fraction in time order, optionally over the
// subdivision triangle edges, optionally with an arrowhead on the final
// segment. Identical specs yield byte-identical output. order must be in
// [1, 16] and canvas_size in [64, 8192].
std::string render_traversal_svg(const RenderSpec& spec);

}  // namespace sk
