#pragma once

#include <convexgeo/representation.hpp>

#include <string>

namespace convexgeo {

// SVG 1.1 drawing of the bodies: y axis pointing up, viewBox from the joint
// bounds plus a 10% margin, coordinates rounded to 2 decimals. Stroke color
// follows each element's first predicate; labels sit at the centers. The
// output depends only on the file contents.
std::string render_svg(const RepresentationFile& file);

}  // namespace convexgeo
