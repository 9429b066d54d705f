#pragma once

#include "tvw/config.hpp"
#include "tvw/drawing.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_partitions.hpp"

#include <string>

namespace tvw {

// Deterministic SVG 1.1 output: coordinates are projected to doubles and
// printed with fixed precision, so identical inputs give identical bytes.
// Rendering is presentation only; nothing downstream consumes it.

// Draws all vertices (labeled) and edge routes; with a certificate, its faces
// are overlaid with thick colored strokes and the winding point is marked.
std::string render_svg(const Drawing& d, const WindingCertificate* cert = nullptr);

// Draws a point configuration (d = 1 on a line, d = 2 in the plane); with a
// certificate, parts are colored, part hull outlines drawn, and the witness
// point marked.
std::string render_svg(const PointConfiguration& c, const TverbergCertificate* cert = nullptr);

} // namespace tvw
